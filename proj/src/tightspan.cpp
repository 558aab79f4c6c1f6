#include "divlab/tightspan.hpp"

#include <algorithm>
#include <unordered_set>
#include <stdexcept>
#include <string>

namespace divlab {

namespace {

std::vector<Mask> nonempty_subsets(Mask universe) {
  std::vector<Mask> subs;
  for_each_subset(universe, [&](Mask s) {
    if (s != 0) subs.push_back(s);
  });
  std::sort(subs.begin(), subs.end());
  return subs;
}

}  // namespace

std::vector<std::vector<Mask>> antichain_families(Mask universe) {
  std::vector<Mask> subs = nonempty_subsets(universe);
  std::vector<std::vector<Mask>> out;
  std::vector<Mask> chosen;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    for (std::size_t i = from; i < subs.size(); ++i) {
      bool comparable = false;
      for (Mask c : chosen)
        if (subset_of(c, subs[i]) || subset_of(subs[i], c)) {
          comparable = true;
          break;
        }
      if (comparable) continue;
      chosen.push_back(subs[i]);
      out.push_back(chosen);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<std::vector<Mask>> all_families(Mask universe) {
  if (popcount(universe) > 4)
    throw std::invalid_argument("full family enumeration capped at 4 points");
  std::vector<Mask> subs = nonempty_subsets(universe);
  std::vector<std::vector<Mask>> out;
  const std::size_t total = std::size_t{1} << subs.size();
  for (std::size_t pick = 1; pick < total; ++pick) {
    std::vector<Mask> family;
    for (std::size_t i = 0; i < subs.size(); ++i)
      if ((pick >> i) & 1) family.push_back(subs[i]);
    out.push_back(std::move(family));
  }
  return out;
}

lp::Problem PxSystem::problem() const {
  const int n = base.size();
  lp::Problem p;
  p.num_vars = static_cast<int>((Mask{1} << n) - 1);
  for (const auto& fam : families) {
    lp::Constraint c;
    Mask u = 0;
    for (Mask a : fam) {
      c.terms.push_back({static_cast<int>(a) - 1, Rat(1)});
      u |= a;
    }
    c.rel = lp::Rel::Ge;
    c.rhs = base.value(u);
    p.constraints.push_back(std::move(c));
  }
  return p;
}

PxSystem px_constraints(const FiniteDiversity& div, int cap) {
  if (div.size() > cap)
    throw std::invalid_argument("ground size " + std::to_string(div.size()) +
                                " exceeds the tight-span cap " + std::to_string(cap));
  if (div.size() == 0) throw std::invalid_argument("empty ground set");
  return PxSystem{div, antichain_families(div.ground().all())};
}

bool in_px(const PxSystem& sys, const SetFunction& f) {
  if (f.ground() != sys.base.ground())
    throw std::invalid_argument("set function lives on a different ground set");
  for (const auto& fam : sys.families) {
    Rat sum = 0;
    Mask u = 0;
    for (Mask a : fam) {
      sum += f.value(a);
      u |= a;
    }
    if (sum < sys.base.value(u)) return false;
  }
  return true;
}

SetFunction kappa(const FiniteDiversity& div, int x) {
  if (x < 0 || x >= div.size()) throw std::invalid_argument("unknown point");
  SetFunction h(div.ground());
  const Mask all = div.ground().all();
  for (Mask a = 1; a <= all && all != 0; ++a) {
    h.set(a, div.value(a | singleton(x)));
    if (a == all) break;
  }
  return h;
}

std::vector<Mask> coordinate_order_lex(int n) {
  std::vector<Mask> order;
  for (Mask m = 1; m <= full_mask(n) && n > 0; ++m) {
    order.push_back(m);
    if (m == full_mask(n)) break;
  }
  return order;
}

std::vector<Mask> coordinate_order_by_card(int n) {
  std::vector<Mask> order = coordinate_order_lex(n);
  std::stable_sort(order.begin(), order.end(),
                   [](Mask a, Mask b) { return popcount(a) < popcount(b); });
  return order;
}

TightPoint tighten(const PxSystem& sys, const SetFunction& f0, const std::vector<Mask>& order) {
  if (!in_px(sys, f0)) throw std::invalid_argument("starting point is outside the feasible set");
  lp::Problem p = sys.problem();
  std::vector<Rat> upper(p.num_vars);
  for (int v = 0; v < p.num_vars; ++v) upper[v] = f0.value(static_cast<Mask>(v) + 1);
  std::vector<int> var_order;
  for (Mask m : order) var_order.push_back(static_cast<int>(m) - 1);
  std::vector<Rat> point = lp::minimize_coordinate_sequence(p, var_order, upper);
  SetFunction g(sys.base.ground());
  for (int v = 0; v < p.num_vars; ++v) g.set(static_cast<Mask>(v) + 1, point[v]);
  return TightPoint{std::move(g), std::move(point)};
}

bool is_tight_point(const FiniteDiversity& div, const SetFunction& f) {
  if (f.ground() != div.ground())
    throw std::invalid_argument("set function lives on a different ground set");
  const int n = div.size();
  if (n > 8) throw std::invalid_argument("tight-span membership test capped at 8 points");
  if (!f.value(0).is_zero()) return false;
  if (!f.is_monotone()) return false;

  // Disjoint families, enumerated once as restricted-growth assignments with an
  // extra "unused" class.
  std::vector<std::vector<Mask>> families{{}};
  std::vector<Mask> blocks;
  auto rec = [&](auto&& self, int point) -> void {
    if (point == n) return;
    self(self, point + 1);  // point unused
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b] |= singleton(point);
      families.push_back(blocks);
      self(self, point + 1);
      blocks[b] &= ~singleton(point);
    }
    blocks.push_back(singleton(point));
    families.push_back(blocks);
    self(self, point + 1);
    blocks.pop_back();
  };
  rec(rec, 0);

  const Mask all = div.ground().all();
  for (Mask a = 0; a <= all; ++a) {
    Rat best;
    bool first = true;
    for (const auto& fam : families) {
      Mask u = 0;
      Rat sum = 0;
      for (Mask b : fam) {
        u |= b;
        sum += f.value(b);
      }
      Rat val = div.value(a | u) - sum;
      if (first || val > best) best = val;
      first = false;
    }
    if (best != f.value(a)) return false;
    if (a == all) break;
  }
  return true;
}

Rat delta_T(const FiniteDiversity& div, const std::vector<SetFunction>& points) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  std::vector<const SetFunction*> distinct;
  for (const SetFunction& f : points) {
    if (!is_tight_point(div, f)) throw std::invalid_argument("point is not in the tight span");
    bool dup = false;
    for (const SetFunction* g : distinct) dup = dup || (*g == f);
    if (!dup) distinct.push_back(&f);
  }
  const int n = div.size();
  const int k = static_cast<int>(distinct.size());

  // slot[i] in 0..k: which member receives ground point i (k = none).
  std::vector<int> slot(n, 0);
  Rat best = 0;  // the all-empty assignment gives delta(empty) = 0
  for (;;) {
    Mask u = 0;
    std::vector<Mask> parts(k, 0);
    for (int i = 0; i < n; ++i)
      if (slot[i] < k) {
        parts[slot[i]] |= singleton(i);
        u |= singleton(i);
      }
    Rat val = div.value(u);
    for (int j = 0; j < k; ++j) val -= distinct[j]->value(parts[j]);
    if (val > best) best = val;
    int i = 0;
    while (i < n && slot[i] == k) slot[i++] = 0;
    if (i == n) break;
    ++slot[i];
  }
  return best;
}

std::optional<FamilyViolation> first_family_violation(const FiniteDiversity& div,
                                                      const SetFunction& r, Mask domain) {
  for (const auto& fam : antichain_families(domain)) {
    Rat sum = 0;
    Mask u = 0;
    for (Mask a : fam) {
      sum += r.value(a);
      u |= a;
    }
    if (div.value(u) > sum) return FamilyViolation{fam, div.value(u), sum};
  }
  return std::nullopt;
}

namespace {

// Witness caps: choosing set Y for point z imposes r(Y) <= delta({z} u Y) - t.
// Unconstrained coordinates can float arbitrarily high, so the margin LP
//   max t  s.t.  family rows hold and the caps hold
// has the closed-form optimum
//   min over antichain subfamilies F of capped sets: (sum caps - delta(union)) / |F|
// (a family touching an uncapped set never binds). The same holds for metrics
// with pair rows in place of families. Both searches below walk witness
// assignments depth-first with this exact bound; it only decreases as caps
// accumulate, so pruning at the threshold is sound.

struct CapState {
  std::vector<Mask> sets;
  std::vector<Rat> caps;

  int find(Mask y) const {
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (sets[i] == y) return static_cast<int>(i);
    return -1;
  }
};

std::optional<Rat> diversity_margin_bound(const FiniteDiversity& div, const CapState& st) {
  const std::size_t k = st.sets.size();
  std::optional<Rat> best;
  for (std::size_t pick = 1; pick < (std::size_t{1} << k); ++pick) {
    Mask u = 0;
    Rat sum = 0;
    int count = 0;
    bool antichain = true;
    for (std::size_t i = 0; i < k && antichain; ++i) {
      if (!((pick >> i) & 1)) continue;
      for (std::size_t j = 0; j < i; ++j)
        if (((pick >> j) & 1) &&
            (subset_of(st.sets[i], st.sets[j]) || subset_of(st.sets[j], st.sets[i]))) {
          antichain = false;
          break;
        }
      u |= st.sets[i];
      sum += st.caps[i];
      ++count;
    }
    if (!antichain) continue;
    Rat bound = (sum - div.value(u)) / Rat(count);
    if (!best || bound < *best) best = bound;
  }
  return best;
}

}  // namespace

DiversityHyperconvexityVerdict hyperconvexity_certificate(const FiniteDiversity& div, int cap) {
  const int n = div.size();
  if (n == 0) throw std::invalid_argument("empty ground set");
  if (n > cap)
    throw std::invalid_argument("ground size " + std::to_string(n) +
                                " exceeds the hyperconvexity cap " + std::to_string(cap));
  const Mask all = div.ground().all();

  std::vector<std::vector<Mask>> candidates(n);
  for (int z = 0; z < n; ++z) {
    std::vector<Mask> ys;
    for (Mask y = 1; y <= all; ++y) {
      ys.push_back(y);
      if (y == all) break;
    }
    std::sort(ys.begin(), ys.end(), [&](Mask a, Mask b) {
      Rat ka = div.value(a | singleton(z)) - div.value(a);
      Rat kb = div.value(b | singleton(z)) - div.value(b);
      if (ka != kb) return ka > kb;
      return a < b;
    });
    candidates[z] = std::move(ys);
  }

  std::vector<Mask> witness(n);
  CapState st;
  std::optional<Rat> final_margin;
  auto descend = [&](auto&& self, int z) -> bool {
    for (Mask y : candidates[z]) {
      Rat cap_value = div.value(y | singleton(z));
      int at = st.find(y);
      Rat saved;
      bool tightened = false;
      if (at < 0) {
        st.sets.push_back(y);
        st.caps.push_back(cap_value);
      } else if (cap_value < st.caps[at]) {
        saved = st.caps[at];
        st.caps[at] = cap_value;
        tightened = true;
      }
      std::optional<Rat> bound = diversity_margin_bound(div, st);
      if (!bound || bound->sign() > 0) {
        witness[z] = y;
        if (z + 1 == n) {
          final_margin = bound;
          return true;
        }
        if (self(self, z + 1)) return true;
      }
      if (at < 0) {
        st.sets.pop_back();
        st.caps.pop_back();
      } else if (tightened) {
        st.caps[at] = saved;
      }
    }
    return false;
  };

  if (!descend(descend, 0)) return {HyperconvexAnswer::Hyperconvex, std::nullopt};

  // Build the certificate: capped sets sit at cap - t, everything else is
  // blanketed by the global maximum, which keeps every family row slack.
  Rat t = *final_margin;
  Rat blanket = div.value(all);
  DiversityHyperconvexityCertificate cert{SetFunction(div.ground()), {}, {}};
  for (Mask a = 1; a <= all; ++a) {
    int at = st.find(a);
    cert.r.set(a, at >= 0 ? st.caps[at] - t : blanket);
    if (a == all) break;
  }
  for (int z = 0; z < n; ++z) {
    cert.witnesses.push_back(witness[z]);
    cert.margins.push_back(div.value(witness[z] | singleton(z)) - cert.r.value(witness[z]));
  }
  if (first_family_violation(div, cert.r, all))
    throw std::logic_error("certificate fails its own polyhedron");
  for (const Rat& m : cert.margins)
    if (m.sign() <= 0) throw std::logic_error("certificate margin not positive");
  return {HyperconvexAnswer::NotHyperconvex, std::move(cert)};
}

MetricHyperconvexityVerdict metric_hyperconvexity_certificate(const FiniteMetric& metric,
                                                              const Rat& tolerance) {
  const int n = metric.size();
  if (n == 0) throw std::invalid_argument("empty ground set");
  if (tolerance.sign() < 0) throw std::invalid_argument("negative tolerance");

  std::vector<std::vector<int>> candidates(n);
  for (int z = 0; z < n; ++z) {
    std::vector<int> xs(n);
    for (int x = 0; x < n; ++x) xs[x] = x;
    std::sort(xs.begin(), xs.end(), [&](int a, int b) {
      if (metric.dist(z, a) != metric.dist(z, b)) return metric.dist(z, a) > metric.dist(z, b);
      return a < b;
    });
    candidates[z] = std::move(xs);
  }

  // caps[x] = tightest d(z,x) among the z that chose x; -1 means uncapped.
  std::vector<std::optional<Rat>> caps(n);
  std::vector<int> witness(n);
  std::optional<Rat> final_margin;

  auto bound_with = [&](int x) {
    // recompute the closed-form bound terms involving x only
    Rat b = *caps[x];
    for (int y = 0; y < n; ++y) {
      if (y == x || !caps[y]) continue;
      Rat pair = (*caps[x] + *caps[y] - metric.dist(x, y)) / Rat(2);
      if (pair < b) b = pair;
    }
    return b;
  };

  // The searchable bound depends only on (level, cap state), and many witness
  // prefixes collapse onto identical states; dead states are remembered.
  std::unordered_set<std::string> dead;
  auto state_key = [&](int z) {
    std::string key = std::to_string(z);
    for (int x = 0; x < n; ++x) {
      key += '|';
      if (caps[x]) key += caps[x]->str();
    }
    return key;
  };

  std::optional<Rat> running;  // current bound over all caps
  auto descend = [&](auto&& self, int z) -> bool {
    std::string key = state_key(z);
    if (dead.contains(key)) return false;
    for (int x : candidates[z]) {
      std::optional<Rat> saved = caps[x];
      Rat d = metric.dist(z, x);
      if (!saved || d < *saved) caps[x] = d;
      std::optional<Rat> saved_running = running;
      Rat local = bound_with(x);
      if (!running || local < *running) running = local;
      if (!running || *running > tolerance) {
        witness[z] = x;
        if (z + 1 == n) {
          final_margin = running;
          return true;
        }
        if (self(self, z + 1)) return true;
      }
      caps[x] = saved;
      running = saved_running;
    }
    dead.insert(std::move(key));
    return false;
  };

  if (!descend(descend, 0)) {
    HyperconvexAnswer a = tolerance.sign() > 0 ? HyperconvexAnswer::HyperconvexWithinTolerance
                                               : HyperconvexAnswer::Hyperconvex;
    return {a, tolerance, std::nullopt};
  }

  Rat t = *final_margin;
  MetricHyperconvexityCertificate cert;
  cert.r.resize(n);
  for (int x = 0; x < n; ++x) {
    if (caps[x])
      cert.r[x] = *caps[x] - t;
    else
      cert.r[x] = chebyshev_radius(metric, x, metric.ground().all());
  }
  for (int z = 0; z < n; ++z) {
    cert.witnesses.push_back(witness[z]);
    cert.margins.push_back(metric.dist(z, witness[z]) - cert.r[witness[z]]);
  }
  for (int i = 0; i < n; ++i) {
    if (cert.r[i].sign() < 0) throw std::logic_error("certificate radius negative");
    for (int j = i + 1; j < n; ++j)
      if (cert.r[i] + cert.r[j] < metric.dist(i, j))
        throw std::logic_error("certificate fails its own polyhedron");
  }
  for (const Rat& m : cert.margins)
    if (m <= tolerance) throw std::logic_error("certificate margin not above tolerance");
  return {HyperconvexAnswer::NotHyperconvex, tolerance, std::move(cert)};
}

bool isbell_extremal_check(const FiniteMetric& metric, const std::vector<Rat>& f) {
  const int n = metric.size();
  if (f.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("value vector must match the ground set");
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y)
      if (f[x] + f[y] < metric.dist(x, y)) return false;
  for (int x = 0; x < n; ++x) {
    Rat best = metric.dist(x, 0) - f[0];
    for (int y = 1; y < n; ++y) {
      Rat v = metric.dist(x, y) - f[y];
      if (v > best) best = v;
    }
    if (f[x] != best) return false;
  }
  return true;
}

}  // namespace divlab
