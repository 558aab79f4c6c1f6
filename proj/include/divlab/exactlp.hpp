#ifndef DIVLAB_EXACTLP_HPP
#define DIVLAB_EXACTLP_HPP

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "divlab/rational.hpp"

namespace divlab::lp {

enum class Rel { Le, Ge, Eq };
enum class Sense { Minimize, Maximize };

struct Constraint {
  std::vector<std::pair<int, Rat>> terms;  // (variable id, coefficient)
  Rel rel = Rel::Ge;
  Rat rhs;
};

/// Exact-rational linear program over free variables.
struct Problem {
  int num_vars = 0;
  std::vector<Constraint> constraints;
  Sense sense = Sense::Minimize;
  std::vector<Rat> objective;  // empty means pure feasibility (minimize 0)
};

struct Feasible {
  std::vector<Rat> point;  // optimal point
  Rat value;               // objective value at the point (0 for pure feasibility)
};

/// Farkas-style refutation. multiplier[i] applies to constraint i rewritten in
/// ">=" form (Le rows negated first, Eq rows taken as written with a free-signed
/// multiplier). Validity: multipliers of Le/Ge rows are nonnegative, the
/// combined coefficient of every variable cancels to zero, and the combined
/// right-hand side is strictly positive -- i.e. the combination reads
/// "0 >= positive".
struct Infeasible {
  std::vector<Rat> multipliers;  // one per constraint
};

struct Unbounded {
  std::vector<Rat> point;  // a feasible point
  std::vector<Rat> ray;    // direction along which the objective improves forever
};

using Outcome = std::variant<Feasible, Infeasible, Unbounded>;

/// Deterministic exact solve (Bland pivoting; identical inputs give identical
/// outputs). Throws std::invalid_argument on malformed input.
Outcome solve(const Problem& p);

bool satisfies(const Problem& p, const std::vector<Rat>& x);
bool certifies_infeasibility(const Problem& p, const std::vector<Rat>& multipliers);
bool certifies_unboundedness(const Problem& p, const std::vector<Rat>& point,
                             const std::vector<Rat>& ray);

/// For each variable in `order`: minimize it subject to p, the processed
/// variables pinned at their minimized values and every other variable bounded
/// above by its current value. Returns the final point (coordinatewise <= upper,
/// feasible). Order-dependent by design. Throws when `upper` is infeasible.
std::vector<Rat> minimize_coordinate_sequence(const Problem& p, const std::vector<int>& order,
                                              const std::vector<Rat>& upper);

}  // namespace divlab::lp

#endif
