#ifndef DIVLAB_DIVERSITY_HPP
#define DIVLAB_DIVERSITY_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "divlab/ground.hpp"

namespace divlab {

/// Finite metric space with exact rational distances. The constructor validates
/// symmetry, vanishing diagonal, positivity off the diagonal and the triangle
/// inequality, so a constructed instance is always a genuine metric.
class FiniteMetric {
 public:
  FiniteMetric(GroundSet ground, std::vector<Rat> dist_row_major);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  const Rat& dist(int i, int j) const { return d_[static_cast<std::size_t>(i) * size() + j]; }

  friend bool operator==(const FiniteMetric& a, const FiniteMetric& b) {
    return a.ground_ == b.ground_ && a.d_ == b.d_;
  }

 private:
  GroundSet ground_;
  std::vector<Rat> d_;
};

/// A diversity value table delta: subsets -> Q(>=0). Backed either by a dense
/// table (grounds up to 16 points) or by an evaluation function, so large
/// constructed instances (e.g. fine grids) stay usable without 2^n storage.
class FiniteDiversity {
 public:
  FiniteDiversity() = default;

  static FiniteDiversity from_table(SetFunction table);
  static FiniteDiversity from_function(GroundSet ground, std::function<Rat(Mask)> eval);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  Rat value(Mask a) const;

  bool is_dense() const { return dense_ != nullptr; }
  /// Materializes the dense table (throws beyond 16 points).
  SetFunction to_table() const;

 private:
  GroundSet ground_;
  std::shared_ptr<const SetFunction> dense_;
  std::function<Rat(Mask)> eval_;
};

// ---------------------------------------------------------------------------
// Axiom verification

struct ValueViolation {
  Mask set;
  Rat value;
};
struct TriangleViolation {
  Mask a, b, c;  // delta(a|c) > delta(a|b) + delta(b|c), b nonempty
  Rat lhs, rhs;
};
struct MonotonicityViolation {
  Mask sub, super;
  Rat sub_value, super_value;
};
struct SubadditivityViolation {
  Mask a, b;  // intersecting, delta(a|b) > delta(a) + delta(b)
  Rat union_value, sum_value;
};

struct AxiomReport {
  std::vector<ValueViolation> negative;       // delta(A) < 0
  std::vector<ValueViolation> zero_breaks;    // delta(A)=0 with |A|>=2, or delta({x}) != 0
  std::vector<TriangleViolation> triangle;    // axiom 2 breaks
  std::vector<MonotonicityViolation> monotonicity;
  std::vector<SubadditivityViolation> subadditivity;

  bool sampled = false;
  std::uint64_t triples_checked = 0;
  std::uint64_t triples_total = 0;  // 8^n, saturated at uint64 max

  bool ok() const {
    return negative.empty() && zero_breaks.empty() && triangle.empty() && monotonicity.empty() &&
           subadditivity.empty();
  }
};

enum class ScanMode { Auto, Exhaustive, Sampled };

/// Scans a candidate table for diversity-axiom violations. Auto mode is
/// exhaustive up to 8 points and seeded sampling above that; sampled runs
/// report their coverage. The report is empty exactly when the table is a
/// diversity.
AxiomReport verify_diversity_axioms(const SetFunction& table, ScanMode mode = ScanMode::Auto,
                                    std::uint64_t seed = 0, std::uint64_t samples = 100000);
AxiomReport verify_diversity_axioms(const FiniteDiversity& div, ScanMode mode = ScanMode::Auto,
                                    std::uint64_t seed = 0, std::uint64_t samples = 100000);

/// d(x,y) = delta({x,y}). Valid input yields a valid metric.
FiniteMetric induced_metric(const FiniteDiversity& div);

/// max_{a in A} d(x,a); empty A is an error.
Rat chebyshev_radius(const FiniteMetric& metric, int x, Mask a);

/// Intersection of all closed balls containing A. Extensive, monotone, idempotent.
Mask ball_hull(const FiniteMetric& metric, Mask a);

/// A is admissible when it equals its ball hull.
bool is_admissible(const FiniteMetric& metric, Mask a);

}  // namespace divlab

#endif
