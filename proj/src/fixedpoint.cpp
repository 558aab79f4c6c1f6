#include "divlab/fixedpoint.hpp"

#include <stdexcept>
#include <string>

#include "divlab/tightspan.hpp"

namespace divlab {

MetricNonexpansiveReport is_nonexpansive_metric(const SelfMap& map, const FiniteMetric& metric) {
  if (map.ground != metric.ground())
    throw std::invalid_argument("map and metric live on different ground sets");
  const int n = metric.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      const Rat& before = metric.dist(x, y);
      const Rat& after = metric.dist(map.apply(x), map.apply(y));
      if (after > before) return {false, MetricExpansionWitness{x, y, before, after}};
    }
  return {};
}

DiversityNonexpansiveReport is_nonexpansive_diversity(const SelfMap& map,
                                                      const FiniteDiversity& div) {
  if (map.ground != div.ground())
    throw std::invalid_argument("map and diversity live on different ground sets");
  const Mask all = div.ground().all();
  for (Mask a = 1; a <= all && all != 0; ++a) {
    Rat before = div.value(a);
    Rat after = div.value(map_image(map, a));
    if (after > before) return {false, DiversityExpansionWitness{a, before, after}};
    if (a == all) break;
  }
  return {};
}

std::optional<Mask> diversity_fixed_set_search(const SelfMap& map) {
  const int n = map.ground.size();
  // Any F with T(F) = F consists of periodic points, so the inclusion-minimal
  // ones are single cycles; take the cycle through the lowest periodic index.
  for (int p = 0; p < n; ++p) {
    int x = p;
    for (int step = 0; step < n; ++step) {
      x = map.apply(x);
      if (x == p) {
        Mask cycle = singleton(p);
        for (int y = map.apply(p); y != p; y = map.apply(y)) cycle |= singleton(y);
        return cycle;
      }
    }
  }
  return std::nullopt;  // only on an empty ground set
}

SetFunction extend_r(const FiniteDiversity& div, Mask y_set, const SetFunction& r) {
  if (y_set == 0) throw std::invalid_argument("empty base set");
  if (r.ground() != div.ground())
    throw std::invalid_argument("radius function lives on a different ground set");
  if (auto bad = first_family_violation(div, r, y_set)) {
    std::string fams;
    for (Mask a : bad->family) fams += div.ground().format_subset(a);
    throw std::invalid_argument("radius function violates a family constraint on " + fams + ": " +
                                bad->delta_union.str() + " > " + bad->sum.str());
  }
  FiniteMetric metric = induced_metric(div);
  const int n = div.size();
  std::vector<Rat> reach(n);  // max_{y in Y} d(a, y)
  for (int a = 0; a < n; ++a) reach[a] = chebyshev_radius(metric, a, y_set);

  SetFunction out(div.ground());
  const Mask all = div.ground().all();
  for (Mask a = 1; a <= all && all != 0; ++a) {
    Rat v = r.value(a & y_set);
    for_each_member(a & ~y_set, [&](int i) { v += reach[i]; });
    out.set(a, v);
    if (a == all) break;
  }
  return out;
}

Mask center_set(const FiniteDiversity& div, Mask z_set, const SetFunction& r) {
  if (z_set == 0) throw std::invalid_argument("empty base set");
  if (r.ground() != div.ground())
    throw std::invalid_argument("radius function lives on a different ground set");
  if (auto bad = first_family_violation(div, r, z_set)) {
    std::string fams;
    for (Mask a : bad->family) fams += div.ground().format_subset(a);
    throw std::invalid_argument("radius function violates a family constraint on " + fams);
  }
  Mask out = 0;
  for (int x = 0; x < div.size(); ++x) {
    bool center = true;
    for_each_subset(z_set, [&](Mask a) {
      if (a != 0 && center && div.value(a | singleton(x)) > r.value(a)) center = false;
    });
    if (center) out |= singleton(x);
  }
  return out;
}

NormalStructure normal_structure_d(const FiniteDiversity& div, Mask a) {
  if (popcount(a) < 2) throw std::invalid_argument("normal structure needs at least two points");
  NormalStructure best{Rat(0), 0, 0};
  bool first = true;
  for_each_subset(a, [&](Mask s) {
    int k = popcount(s);
    if (k < 2) return;
    Rat q = div.value(s) / Rat(k);
    bool better = first || q > best.d || (q == best.d && k < best.cardinality) ||
                  (q == best.d && k == best.cardinality && s < best.attaining);
    if (better) best = {q, k, s};
    first = false;
  });
  return best;
}

std::vector<int> brute_force_fixed_points(const SelfMap& map) {
  std::vector<int> out;
  for (int i = 0; i < map.ground.size(); ++i)
    if (map.apply(i) == i) out.push_back(i);
  return out;
}

DescentOutcome minimal_invariant_descent(const FiniteDiversity& div, const SelfMap& map,
                                         Mask start, const Rat& epsilon) {
  if (map.ground != div.ground())
    throw std::invalid_argument("map and diversity live on different ground sets");
  if (start == 0) throw std::invalid_argument("empty start set");
  if (epsilon.sign() < 0) throw std::invalid_argument("negative epsilon");
  if (!subset_of(map_image(map, start), start))
    throw std::invalid_argument("start set is not invariant under the map");
  FiniteMetric metric = induced_metric(div);
  if (!is_admissible(metric, start))
    throw std::invalid_argument("start set is not admissible (not a ball intersection)");

  DescentOutcome out;
  Mask a = start;
  for (;;) {
    for (;;) {
      Mask h = ball_hull(metric, map_image(map, a));
      if (h == a) break;
      a = h;
    }
    if (popcount(a) == 1) {
      int x = lowest_bit(a);
      if (map.apply(x) != x) throw std::logic_error("invariant singleton must be fixed");
      out.kind = DescentOutcome::Kind::FixedPoint;
      out.point = x;
      out.displacement = 0;
      out.terminal = a;
      return out;
    }
    NormalStructure ns = normal_structure_d(div, a);
    Mask shrunk = 0;
    for_each_member(a, [&](int y) {
      bool inside = true;
      for_each_member(a, [&](int b) { inside = inside && metric.dist(y, b) <= ns.d; });
      if (inside) shrunk |= singleton(y);
    });
    out.trace.push_back({a, ns.d, shrunk});
    if (shrunk == 0 || shrunk == a) {
      // The cut stalls here, which cannot happen over an unbounded hyperconvex
      // carrier; accept a point moved at most epsilon, else report the set.
      int best = -1;
      Rat best_move;
      for_each_member(a, [&](int x) {
        Rat move = metric.dist(x, map.apply(x));
        if (best < 0 || move < best_move) {
          best = x;
          best_move = move;
        }
      });
      if (best >= 0 && best_move <= epsilon) {
        out.kind = best_move.is_zero() ? DescentOutcome::Kind::FixedPoint
                                       : DescentOutcome::Kind::EpsilonFixedPoint;
        out.point = best;
        out.displacement = best_move;
        out.terminal = a;
        out.terminal_d = ns.d;
        return out;
      }
      out.kind = DescentOutcome::Kind::StuckMinimalSet;
      out.terminal = a;
      out.terminal_d = ns.d;
      return out;
    }
    a = shrunk;
  }
}

}  // namespace divlab
