#ifndef DIVLAB_FIXEDPOINT_HPP
#define DIVLAB_FIXEDPOINT_HPP

#include <optional>
#include <vector>

#include "divlab/diversity.hpp"
#include "divlab/self_map.hpp"

namespace divlab {

struct MetricExpansionWitness {
  int x, y;
  Rat before, after;  // d(x,y) and d(Tx,Ty)
};

/// d(Tx,Ty) <= d(x,y) for every pair; a violating pair is reported.
struct MetricNonexpansiveReport {
  bool ok = true;
  std::optional<MetricExpansionWitness> witness;
};
MetricNonexpansiveReport is_nonexpansive_metric(const SelfMap& map, const FiniteMetric& metric);

struct DiversityExpansionWitness {
  Mask set;
  Rat before, after;  // delta(A) and delta(T(A))
};

/// delta(T(A)) <= delta(A) for every finite A (full power-set scan).
struct DiversityNonexpansiveReport {
  bool ok = true;
  std::optional<DiversityExpansionWitness> witness;
};
DiversityNonexpansiveReport is_nonexpansive_diversity(const SelfMap& map,
                                                      const FiniteDiversity& div);

/// Minimal nonempty F with T(F) = F. On a finite total map these are exactly
/// the cycles of the functional graph; returns the cycle through the
/// lowest-indexed periodic point.
std::optional<Mask> diversity_fixed_set_search(const SelfMap& map);

/// Extends a radius function from the subsets of Y to the whole ground set:
///   r(A) = r(A n Y) + sum_{a in A \ Y} max_{y in Y} d(a,y).
/// The input must satisfy the family constraints on Y (checked; the violating
/// family is reported in the error). The output satisfies them globally.
SetFunction extend_r(const FiniteDiversity& div, Mask y_set, const SetFunction& r);

/// { x : delta(A u {x}) <= r(A) for every A inside Z }. May be empty on finite
/// carriers; emptiness is a result, not an error.
Mask center_set(const FiniteDiversity& div, Mask z_set, const SetFunction& r);

struct NormalStructure {
  Rat d;            // max of delta(S)/|S| over S inside A with |S| >= 2
  int cardinality;  // |S| at the attaining subset
  Mask attaining;   // ties: smallest cardinality, then smallest mask
};
NormalStructure normal_structure_d(const FiniteDiversity& div, Mask a);

struct DescentStep {
  Mask stabilized;  // the set after the hull phase
  Rat d_value;
  Mask shrunk;  // A' = A n (balls of radius d around members)
};

struct DescentOutcome {
  enum class Kind { FixedPoint, EpsilonFixedPoint, StuckMinimalSet };
  Kind kind;
  int point = -1;    // FixedPoint / EpsilonFixedPoint
  Rat displacement;  // d(T(x), x) at the returned point
  Mask terminal = 0;
  Rat terminal_d;
  std::vector<DescentStep> trace;
};

/// Two-phase descent on the induced metric: stabilize A = hull(T(A)), then cut
/// down to the points within the normal-structure radius d of all of A.
/// Singletons are exact fixed points. When the cut stalls (empty or no
/// progress, which an infinite hyperconvex carrier would rule out), the
/// terminal set is scanned for a point moved at most epsilon; otherwise the
/// stuck set is returned with its trace. Start must be admissible and
/// invariant. Always terminates: recorded sets strictly shrink.
DescentOutcome minimal_invariant_descent(const FiniteDiversity& div, const SelfMap& map,
                                         Mask start, const Rat& epsilon = Rat(0));

std::vector<int> brute_force_fixed_points(const SelfMap& map);

}  // namespace divlab

#endif
