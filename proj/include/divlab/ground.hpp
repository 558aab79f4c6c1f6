#ifndef DIVLAB_GROUND_HPP
#define DIVLAB_GROUND_HPP

#include <string>
#include <string_view>
#include <vector>

#include "divlab/mask.hpp"
#include "divlab/rational.hpp"

namespace divlab {

/// Ordered set of distinct point labels. Index <-> label is stable per instance.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);  // throws on duplicates / size > 32

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  int index(std::string_view label) const;  // -1 if absent
  Mask all() const { return full_mask(size()); }

  std::string format_subset(Mask m) const;                 // "{a,b,c}" in index order
  Mask parse_subset(std::string_view literal) const;       // throws on unknown/duplicate label

  friend bool operator==(const GroundSet& a, const GroundSet& b) { return a.labels_ == b.labels_; }
  friend bool operator!=(const GroundSet& a, const GroundSet& b) { return !(a == b); }

 private:
  std::vector<std::string> labels_;
};

/// Dense exact-rational table over all subsets of a ground set.
/// The empty-set entry is pinned to zero.
class SetFunction {
 public:
  SetFunction() = default;
  explicit SetFunction(GroundSet ground);

  const GroundSet& ground() const { return ground_; }
  int ground_size() const { return ground_.size(); }
  std::size_t table_size() const { return values_.size(); }

  const Rat& value(Mask m) const { return values_.at(m); }
  void set(Mask m, Rat v);  // throws when assigning nonzero to the empty set

  friend bool operator==(const SetFunction& a, const SetFunction& b) {
    return a.ground_ == b.ground_ && a.values_ == b.values_;
  }
  friend bool operator!=(const SetFunction& a, const SetFunction& b) { return !(a == b); }

  /// True when f(A) <= f(B) whenever A is a subset of B.
  bool is_monotone() const;

 private:
  GroundSet ground_;
  std::vector<Rat> values_;
};

}  // namespace divlab

#endif
