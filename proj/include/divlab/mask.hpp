#ifndef DIVLAB_MASK_HPP
#define DIVLAB_MASK_HPP

#include <bit>
#include <cstdint>

namespace divlab {

/// Subset of a ground set, one bit per point. Bit i <=> point with index i.
using Mask = std::uint32_t;

inline constexpr int kMaxGroundSize = 32;

inline int popcount(Mask m) { return std::popcount(m); }
inline bool contains(Mask m, int i) { return (m >> i) & 1u; }
inline Mask singleton(int i) { return Mask{1} << i; }
inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }
inline Mask full_mask(int n) { return n == 0 ? 0 : (Mask(~Mask{0}) >> (kMaxGroundSize - n)); }
inline int lowest_bit(Mask m) { return std::countr_zero(m); }

/// Visits every subset of `universe` (including 0 and universe itself).
template <typename F>
void for_each_subset(Mask universe, F&& fn) {
  Mask sub = universe;
  for (;;) {
    fn(sub);
    if (sub == 0) break;
    sub = (sub - 1) & universe;
  }
}

/// Visits the indices of the set bits of `m`, ascending.
template <typename F>
void for_each_member(Mask m, F&& fn) {
  while (m != 0) {
    int i = std::countr_zero(m);
    fn(i);
    m &= m - 1;
  }
}

}  // namespace divlab

#endif
