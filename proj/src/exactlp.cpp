#include "divlab/exactlp.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace divlab::lp {

namespace {

// Constraints in ">=" normal form: a.x >= b.
struct CanonRow {
  std::vector<Rat> a;
  Rat b;
  int origin;    // index of the source constraint
  bool negated;  // true for the flipped copy (Le rows, second half of Eq rows)
};

std::vector<CanonRow> canonicalize(const Problem& p) {
  std::vector<CanonRow> rows;
  for (std::size_t k = 0; k < p.constraints.size(); ++k) {
    const Constraint& c = p.constraints[k];
    std::vector<Rat> a(p.num_vars);
    for (const auto& [var, coef] : c.terms) {
      if (var < 0 || var >= p.num_vars)
        throw std::invalid_argument("constraint references variable " + std::to_string(var) +
                                    " outside [0," + std::to_string(p.num_vars) + ")");
      a[var] += coef;
    }
    switch (c.rel) {
      case Rel::Ge:
        rows.push_back({a, c.rhs, static_cast<int>(k), false});
        break;
      case Rel::Le: {
        std::vector<Rat> neg(p.num_vars);
        for (int i = 0; i < p.num_vars; ++i) neg[i] = -a[i];
        rows.push_back({std::move(neg), -c.rhs, static_cast<int>(k), true});
        break;
      }
      case Rel::Eq: {
        rows.push_back({a, c.rhs, static_cast<int>(k), false});
        std::vector<Rat> neg(p.num_vars);
        for (int i = 0; i < p.num_vars; ++i) neg[i] = -a[i];
        rows.push_back({std::move(neg), -c.rhs, static_cast<int>(k), true});
        break;
      }
    }
  }
  return rows;
}

std::vector<Rat> min_sense_objective(const Problem& p) {
  std::vector<Rat> c(p.num_vars);
  if (p.objective.empty()) return c;
  if (p.objective.size() != static_cast<std::size_t>(p.num_vars))
    throw std::invalid_argument("objective length must match num_vars");
  for (int i = 0; i < p.num_vars; ++i)
    c[i] = p.sense == Sense::Maximize ? -p.objective[i] : p.objective[i];
  return c;
}

// ---------------------------------------------------------------------------
// Two-phase primal simplex on: minimize obj.z subject to A z = b, z >= 0.
// Bland's rule throughout, all arithmetic exact. Artificial columns stay in
// the tableau (barred from entering in phase 2) so row multipliers can be read
// off their reduced costs.

struct StandardOutcome {
  enum class Kind { Optimal, Infeasible, Unbounded } kind;
  std::vector<Rat> z;          // Optimal: solution; Unbounded: base point
  std::vector<Rat> ray;        // Unbounded only
  Rat value;                   // Optimal objective value
  std::vector<Rat> row_mults;  // Optimal: y with obj_j - y.A_j >= 0 for all j;
                               // Infeasible: y with y.A_j <= 0 for all j, y.b > 0
};

class StandardSimplex {
 public:
  StandardSimplex(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                  std::vector<Rat> obj)
      : rows_(a.size()), cols_(obj.size()), obj_(std::move(obj)) {
    flip_.assign(rows_, false);
    tab_.assign(rows_, std::vector<Rat>(cols_ + rows_ + 1));
    basis_.assign(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      bool flip = b[i].sign() < 0;
      flip_[i] = flip;
      for (std::size_t j = 0; j < cols_; ++j) tab_[i][j] = flip ? -a[i][j] : a[i][j];
      tab_[i][cols_ + i] = 1;
      tab_[i][rhs()] = flip ? -b[i] : b[i];
      basis_[i] = static_cast<int>(cols_ + i);
    }
    red1_.assign(cols_ + rows_ + 1, Rat(0));
    red2_.assign(cols_ + rows_ + 1, Rat(0));
    for (std::size_t j = 0; j < cols_; ++j) {
      for (std::size_t i = 0; i < rows_; ++i) red1_[j] -= tab_[i][j];
      red2_[j] = obj_[j];
    }
    for (std::size_t i = 0; i < rows_; ++i) red1_[rhs()] -= tab_[i][rhs()];
  }

  StandardOutcome run() {
    if (pivot_loop(red1_, /*allow_artificial=*/true) >= 0)
      throw std::logic_error("phase one cannot be unbounded");
    if ((-red1_[rhs()]).sign() > 0) {
      // Phase-1 optimum positive: the system has no nonnegative solution.
      std::vector<Rat> y(rows_);
      for (std::size_t i = 0; i < rows_; ++i) {
        Rat yi = Rat(1) - red1_[cols_ + i];
        y[i] = flip_[i] ? -yi : yi;
      }
      return {StandardOutcome::Kind::Infeasible, {}, {}, Rat(0), std::move(y)};
    }
    drive_out_artificials();
    int entering = pivot_loop(red2_, /*allow_artificial=*/false);
    if (entering >= 0) {
      // Unbounded: build the improving ray from the entering column.
      std::vector<Rat> z(cols_), ray(cols_);
      for (std::size_t i = 0; i < rows_; ++i)
        if (basis_[i] < static_cast<int>(cols_)) z[basis_[i]] = tab_[i][rhs()];
      ray[entering] = 1;
      for (std::size_t i = 0; i < rows_; ++i)
        if (basis_[i] < static_cast<int>(cols_)) ray[basis_[i]] = -tab_[i][entering];
      return {StandardOutcome::Kind::Unbounded, std::move(z), std::move(ray), Rat(0), {}};
    }
    std::vector<Rat> z(cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      if (basis_[i] < static_cast<int>(cols_)) z[basis_[i]] = tab_[i][rhs()];
    std::vector<Rat> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Rat yi = -red2_[cols_ + i];
      y[i] = flip_[i] ? -yi : yi;
    }
    return {StandardOutcome::Kind::Optimal, std::move(z), {}, -red2_[rhs()], std::move(y)};
  }

 private:
  std::size_t rhs() const { return cols_ + rows_; }

  void pivot(std::size_t r, std::size_t s) {
    Rat inv = Rat(1) / tab_[r][s];
    for (auto& v : tab_[r]) v *= inv;
    auto eliminate = [&](std::vector<Rat>& row) {
      if (row[s].is_zero()) return;
      Rat f = row[s];
      for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * tab_[r][j];
    };
    for (std::size_t i = 0; i < rows_; ++i)
      if (i != r) eliminate(tab_[i]);
    eliminate(red1_);
    eliminate(red2_);
    basis_[r] = static_cast<int>(s);
  }

  // Bland: entering = lowest-index column with negative reduced cost; leaving =
  // ratio-test minimum, ties broken by lowest basic variable index. Returns -1
  // at optimality, or the entering column when no row blocks (unbounded).
  int pivot_loop(std::vector<Rat>& reduced, bool allow_artificial) {
    const std::size_t limit = allow_artificial ? cols_ + rows_ : cols_;
    for (;;) {
      int s = -1;
      for (std::size_t j = 0; j < limit; ++j)
        if (reduced[j].sign() < 0) {
          s = static_cast<int>(j);
          break;
        }
      if (s < 0) return -1;
      int r = -1;
      Rat best;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (tab_[i][s].sign() <= 0) continue;
        Rat ratio = tab_[i][rhs()] / tab_[i][s];
        if (r < 0 || ratio < best || (ratio == best && basis_[i] < basis_[r])) {
          r = static_cast<int>(i);
          best = ratio;
        }
      }
      if (r < 0) return s;
      pivot(static_cast<std::size_t>(r), static_cast<std::size_t>(s));
    }
  }

  // Degenerate pivots replacing zero-level artificial basics with real columns.
  // Rows with no real entry are redundant and stay inert through phase 2.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < static_cast<int>(cols_)) continue;
      for (std::size_t j = 0; j < cols_; ++j)
        if (!tab_[i][j].is_zero()) {
          pivot(i, j);
          break;
        }
    }
  }

  std::size_t rows_, cols_;
  std::vector<Rat> obj_;
  std::vector<std::vector<Rat>> tab_;
  std::vector<Rat> red1_, red2_;
  std::vector<int> basis_;
  std::vector<bool> flip_;
};

// The solver works on the dual: every problem in this codebase has few
// variables and many constraints, so the dual tableau has few rows. For
//   minimize c.x subject to G x >= h (x free; rows from canonicalize)
// the dual reads
//   maximize h.l subject to G^T l = c, l >= 0,
// and the simplex row multipliers of the dual solve recover the primal point.
StandardOutcome solve_dual(const std::vector<CanonRow>& rows, std::vector<Rat> c) {
  const std::size_t v = c.size(), m = rows.size();
  std::vector<std::vector<Rat>> a(v, std::vector<Rat>(m));
  std::vector<Rat> obj(m);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < v; ++i) a[i][k] = rows[k].a[i];
    obj[k] = -rows[k].b;  // minimize -h.l
  }
  return StandardSimplex(a, c, std::move(obj)).run();
}

std::vector<Rat> map_multipliers(const Problem& p, const std::vector<CanonRow>& rows,
                                 const std::vector<Rat>& lambda) {
  std::vector<Rat> mult(p.constraints.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (p.constraints[rows[k].origin].rel == Rel::Eq)
      mult[rows[k].origin] += rows[k].negated ? -lambda[k] : lambda[k];
    else
      mult[rows[k].origin] += lambda[k];
  }
  return mult;
}

Rat objective_value(const Problem& p, const std::vector<Rat>& x) {
  Rat v = 0;
  for (std::size_t i = 0; i < p.objective.size(); ++i) v += p.objective[i] * x[i];
  return v;
}

}  // namespace

Outcome solve(const Problem& p) {
  if (p.num_vars < 0) throw std::invalid_argument("negative variable count");
  const auto rows = canonicalize(p);
  const auto c = min_sense_objective(p);

  if (p.num_vars == 0) {
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (rows[k].b.sign() > 0) {
        std::vector<Rat> lambda(rows.size());
        lambda[k] = 1;
        return Infeasible{map_multipliers(p, rows, lambda)};
      }
    return Feasible{{}, Rat(0)};
  }

  StandardOutcome dual = solve_dual(rows, c);
  switch (dual.kind) {
    case StandardOutcome::Kind::Optimal: {
      std::vector<Rat> x(p.num_vars);
      for (int i = 0; i < p.num_vars; ++i) x[i] = -dual.row_mults[i];
      Rat value = objective_value(p, x);
      return Feasible{std::move(x), std::move(value)};
    }
    case StandardOutcome::Kind::Unbounded:
      // Dual unbounded ray is a Farkas certificate for the primal.
      return Infeasible{map_multipliers(p, rows, dual.ray)};
    case StandardOutcome::Kind::Infeasible: {
      // Dual infeasible: the primal is unbounded or infeasible; a feasibility
      // solve (zero objective) separates the two.
      std::vector<Rat> w(p.num_vars);
      for (int i = 0; i < p.num_vars; ++i) w[i] = -dual.row_mults[i];
      StandardOutcome feas = solve_dual(rows, std::vector<Rat>(p.num_vars));
      if (feas.kind == StandardOutcome::Kind::Unbounded)
        return Infeasible{map_multipliers(p, rows, feas.ray)};
      if (feas.kind != StandardOutcome::Kind::Optimal)
        throw std::logic_error("feasibility dual cannot be infeasible");
      std::vector<Rat> x(p.num_vars);
      for (int i = 0; i < p.num_vars; ++i) x[i] = -feas.row_mults[i];
      return Unbounded{std::move(x), std::move(w)};
    }
  }
  throw std::logic_error("unreachable");
}

bool satisfies(const Problem& p, const std::vector<Rat>& x) {
  if (x.size() != static_cast<std::size_t>(p.num_vars)) return false;
  for (const Constraint& c : p.constraints) {
    Rat lhs = 0;
    for (const auto& [var, coef] : c.terms) lhs += coef * x[var];
    switch (c.rel) {
      case Rel::Le:
        if (lhs > c.rhs) return false;
        break;
      case Rel::Ge:
        if (lhs < c.rhs) return false;
        break;
      case Rel::Eq:
        if (lhs != c.rhs) return false;
        break;
    }
  }
  return true;
}

bool certifies_infeasibility(const Problem& p, const std::vector<Rat>& multipliers) {
  if (multipliers.size() != p.constraints.size()) return false;
  std::vector<Rat> combined(p.num_vars);
  Rat rhs = 0;
  for (std::size_t k = 0; k < p.constraints.size(); ++k) {
    const Constraint& c = p.constraints[k];
    const Rat& m = multipliers[k];
    if (c.rel != Rel::Eq && m.sign() < 0) return false;
    Rat s = c.rel == Rel::Le ? -m : m;
    for (const auto& [var, coef] : c.terms) combined[var] += s * coef;
    rhs += s * c.rhs;
  }
  for (const Rat& v : combined)
    if (!v.is_zero()) return false;
  return rhs.sign() > 0;
}

bool certifies_unboundedness(const Problem& p, const std::vector<Rat>& point,
                             const std::vector<Rat>& ray) {
  if (!satisfies(p, point)) return false;
  if (ray.size() != static_cast<std::size_t>(p.num_vars)) return false;
  for (const Constraint& c : p.constraints) {
    Rat d = 0;
    for (const auto& [var, coef] : c.terms) d += coef * ray[var];
    switch (c.rel) {
      case Rel::Le:
        if (d.sign() > 0) return false;
        break;
      case Rel::Ge:
        if (d.sign() < 0) return false;
        break;
      case Rel::Eq:
        if (!d.is_zero()) return false;
        break;
    }
  }
  if (p.objective.empty()) return false;
  Rat drift = 0;
  for (int i = 0; i < p.num_vars; ++i) drift += p.objective[i] * ray[i];
  return p.sense == Sense::Maximize ? drift.sign() > 0 : drift.sign() < 0;
}

std::vector<Rat> minimize_coordinate_sequence(const Problem& p, const std::vector<int>& order,
                                              const std::vector<Rat>& upper) {
  if (!satisfies(p, upper)) throw std::invalid_argument("upper point is not feasible");
  std::vector<Rat> current = upper;
  std::vector<bool> fixed(p.num_vars, false);
  for (int v : order) {
    if (v < 0 || v >= p.num_vars) throw std::invalid_argument("order references unknown variable");
    Problem q = p;
    q.sense = Sense::Minimize;
    q.objective.assign(p.num_vars, Rat(0));
    q.objective[v] = 1;
    for (int w = 0; w < p.num_vars; ++w)
      q.constraints.push_back({{{w, Rat(1)}}, fixed[w] ? Rel::Eq : Rel::Le, current[w]});
    Outcome out = solve(q);
    const auto* f = std::get_if<Feasible>(&out);
    if (f == nullptr) throw std::logic_error("coordinate minimization lost feasibility");
    current[v] = f->value;
    fixed[v] = true;
  }
  return current;
}

}  // namespace divlab::lp
