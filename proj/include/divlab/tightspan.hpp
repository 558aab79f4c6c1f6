#ifndef DIVLAB_TIGHTSPAN_HPP
#define DIVLAB_TIGHTSPAN_HPP

#include <optional>
#include <vector>

#include "divlab/diversity.hpp"
#include "divlab/exactlp.hpp"

namespace divlab {

/// Nonempty families of distinct nonempty subsets of `universe`, pairwise
/// incomparable under inclusion. Families with a comparable pair are implied
/// (members are nonnegative and the union does not grow), so these are exactly
/// the constraint families needed below. Deterministic order.
std::vector<std::vector<Mask>> antichain_families(Mask universe);

/// Debug/cross-check enumeration: every nonempty family of distinct nonempty
/// subsets, comparable pairs included. Guarded to universes of at most 4 points.
std::vector<std::vector<Mask>> all_families(Mask universe);

/// The constraint system P_X of a diversity: one row per antichain family,
///   sum_{A in family} f(A) >= delta(union of family).
struct PxSystem {
  FiniteDiversity base;
  std::vector<std::vector<Mask>> families;

  /// Variables are the nonempty subsets, id = mask - 1.
  lp::Problem problem() const;
};

inline constexpr int kDefaultTightSpanCap = 5;

/// Throws when the ground exceeds `cap`, naming the cap.
PxSystem px_constraints(const FiniteDiversity& div, int cap = kDefaultTightSpanCap);

/// Exact membership test; throws on ground mismatch.
bool in_px(const PxSystem& sys, const SetFunction& f);

/// h_x(A) = delta(A u {x}), the canonical image of a ground point.
SetFunction kappa(const FiniteDiversity& div, int x);

std::vector<Mask> coordinate_order_lex(int n);      // mask ascending
std::vector<Mask> coordinate_order_by_card(int n);  // cardinality, then mask

/// A tight-span member with its per-coordinate minimization record: for each
/// nonempty A, the LP minimum of that coordinate with every other coordinate
/// pinned equals the stored value.
struct TightPoint {
  SetFunction f;
  std::vector<Rat> coordinate_minima;  // indexed by mask - 1
};

/// Coordinatewise minimization of f0 inside P_X along `order`. The result
/// depends on the order (minimal points form a set); every output is minimal.
/// Throws when f0 is outside P_X.
TightPoint tighten(const PxSystem& sys, const SetFunction& f0, const std::vector<Mask>& order);

/// Characterization test: f belongs to the tight span iff for every A,
/// f(A) equals the maximum of delta(A u union(B)) - sum_{B} f(B) over disjoint
/// families B. Non-monotone f fails immediately (members are monotone, and
/// monotonicity is what lets disjoint families stand in for all families).
bool is_tight_point(const FiniteDiversity& div, const SetFunction& f);

/// The diversity carried by the tight span, evaluated on a finite set of
/// members: max over assignments of pairwise-disjoint (possibly empty) sets
/// A_f of delta(union A_f) - sum f(A_f). Throws when an input is not tight.
Rat delta_T(const FiniteDiversity& div, const std::vector<SetFunction>& points);

// ---------------------------------------------------------------------------
// Hyperconvexity decision procedures

enum class HyperconvexAnswer { Hyperconvex, NotHyperconvex, HyperconvexWithinTolerance };

struct FamilyViolation {
  std::vector<Mask> family;
  Rat delta_union;
  Rat sum;
};

/// First antichain family inside `domain` with sum r(A) < delta(union), if any.
std::optional<FamilyViolation> first_family_violation(const FiniteDiversity& div,
                                                      const SetFunction& r, Mask domain);

struct DiversityHyperconvexityCertificate {
  SetFunction r;                // satisfies every family constraint (re-verified)
  std::vector<Mask> witnesses;  // per point z, a set Y with delta({z} u Y) > r(Y)
  std::vector<Rat> margins;     // the exact positive gaps
};

struct DiversityHyperconvexityVerdict {
  HyperconvexAnswer answer;
  std::optional<DiversityHyperconvexityCertificate> certificate;
};

/// Witness search: for each assignment of a candidate violated set to every
/// point, maximize the common margin over the family-constraint polyhedron;
/// any positive optimum refutes hyperconvexity and is returned as an exact,
/// re-verified certificate. Search is depth-first with monotone bound pruning.
DiversityHyperconvexityVerdict hyperconvexity_certificate(const FiniteDiversity& div,
                                                          int cap = 4);

struct MetricHyperconvexityCertificate {
  std::vector<Rat> r;        // per point, with r(x) + r(y) >= d(x,y)
  std::vector<int> witnesses;  // per point z, a point x with d(z,x) > r(x) + tol
  std::vector<Rat> margins;
};

struct MetricHyperconvexityVerdict {
  HyperconvexAnswer answer;
  Rat tolerance;
  std::optional<MetricHyperconvexityCertificate> certificate;
};

/// Same scheme specialized to metrics. With tolerance e > 0 an exhausted
/// search reports HyperconvexWithinTolerance(e): every admissible radius
/// function admits a center matching all balls up to e.
MetricHyperconvexityVerdict metric_hyperconvexity_certificate(const FiniteMetric& metric,
                                                              const Rat& tolerance = Rat(0));

/// f(x) + f(y) >= d(x,y) everywhere and f(x) = max_y (d(x,y) - f(y)) for all x.
bool isbell_extremal_check(const FiniteMetric& metric, const std::vector<Rat>& f);

}  // namespace divlab

#endif
