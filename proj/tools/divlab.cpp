// divlab: finite diversities workbench.
//
// Subcommands: verify, metric, hypcon, tightspan, hyperconvex, fixedpoint,
// reproduce-ex1, reproduce-noext. Exit codes: 0 = property holds / success,
// 1 = property fails (certificate printed) or a size cap is exceeded,
// 2 = input or parse error. DIVLAB_CAP overrides the ground-size caps.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "divlab/constructions.hpp"
#include "divlab/diversity.hpp"
#include "divlab/exactlp.hpp"
#include "divlab/fixedpoint.hpp"
#include "divlab/io.hpp"
#include "divlab/tightspan.hpp"

using namespace divlab;

namespace {

struct Report {
  std::ostringstream out;
  std::string out_path;

  template <typename T>
  Report& operator<<(const T& v) {
    out << v;
    return *this;
  }

  int finish(int code) {
    std::cout << out.str();
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      if (!f) {
        std::cerr << "cannot write report to '" << out_path << "'\n";
        return 2;
      }
      f << out.str();
    }
    return code;
  }
};

int cap_from_env(int fallback) {
  const char* v = std::getenv("DIVLAB_CAP");
  if (v == nullptr) return fallback;
  try {
    int cap = std::stoi(v);
    if (cap >= 1) return cap;
  } catch (...) {
  }
  return fallback;
}

std::string subset(const GroundSet& g, Mask m) { return g.format_subset(m); }

void render_axiom_report(Report& rep, const GroundSet& g, const AxiomReport& r) {
  if (r.sampled)
    rep << "mode: sampled, " << r.triples_checked << " seeded triples (of about "
        << r.triples_total << ")\n";
  else
    rep << "mode: exhaustive, " << r.triples_checked << " ordered triples\n";
  auto limit = [](std::size_t k) { return k > 20 ? 20 : k; };
  for (std::size_t i = 0; i < limit(r.negative.size()); ++i)
    rep << "negative value: delta" << subset(g, r.negative[i].set) << " = "
        << r.negative[i].value.str() << "\n";
  for (std::size_t i = 0; i < limit(r.zero_breaks.size()); ++i)
    rep << "axiom 1: delta" << subset(g, r.zero_breaks[i].set) << " = "
        << r.zero_breaks[i].value.str()
        << (popcount(r.zero_breaks[i].set) <= 1 ? " must be 0\n" : " must be positive\n");
  for (std::size_t i = 0; i < limit(r.triangle.size()); ++i) {
    const auto& v = r.triangle[i];
    rep << "axiom 2 at A=" << subset(g, v.a) << " B=" << subset(g, v.b) << " C=" << subset(g, v.c)
        << ": " << v.lhs.str() << " > " << v.rhs.str() << "\n";
  }
  for (std::size_t i = 0; i < limit(r.monotonicity.size()); ++i) {
    const auto& v = r.monotonicity[i];
    rep << "monotonicity: delta" << subset(g, v.sub) << " = " << v.sub_value.str() << " > "
        << v.super_value.str() << " = delta" << subset(g, v.super) << "\n";
  }
  for (std::size_t i = 0; i < limit(r.subadditivity.size()); ++i) {
    const auto& v = r.subadditivity[i];
    rep << "subadditivity at " << subset(g, v.a) << ", " << subset(g, v.b) << ": "
        << v.union_value.str() << " > " << v.sum_value.str() << "\n";
  }
  std::size_t total = r.negative.size() + r.zero_breaks.size() + r.triangle.size() +
                      r.monotonicity.size() + r.subadditivity.size();
  if (total > 20) rep << "... " << total << " violations in total\n";
}

// Verifies axioms with size-appropriate mode; false means not a diversity.
bool check_is_diversity(Report& rep, const FiniteDiversity& div, std::uint64_t seed) {
  AxiomReport r = verify_diversity_axioms(div, ScanMode::Auto, seed);
  if (r.ok()) return true;
  rep << "input is not a diversity:\n";
  render_axiom_report(rep, div.ground(), r);
  return false;
}

int cmd_verify(const std::string& path, std::uint64_t seed, Report& rep) {
  FiniteDiversity div = load_diversity_file(path);
  rep << "ground: " << div.size() << " points " << subset(div.ground(), div.ground().all())
      << "\n";
  AxiomReport r = verify_diversity_axioms(div, ScanMode::Auto, seed);
  render_axiom_report(rep, div.ground(), r);
  if (r.ok()) {
    rep << "result: diversity axioms hold\n";
    return rep.finish(0);
  }
  rep << "result: violations found\n";
  return rep.finish(1);
}

int cmd_metric(const std::string& path, std::uint64_t seed, Report& rep) {
  FiniteDiversity div = load_diversity_file(path);
  if (!check_is_diversity(rep, div, seed)) return rep.finish(2);
  FiniteMetric m = induced_metric(div);
  const GroundSet& g = m.ground();
  for (int i = 0; i < m.size(); ++i)
    for (int j = i + 1; j < m.size(); ++j)
      rep << "d(" << g.label(i) << "," << g.label(j) << ") = " << m.dist(i, j).str() << "\n";
  rep << "result: induced metric is valid\n";
  return rep.finish(0);
}

int cmd_hypcon(const std::string& path, std::uint64_t seed, Report& rep) {
  FiniteDiversity div = load_diversity_file(path);
  if (!check_is_diversity(rep, div, seed)) return rep.finish(2);
  HypconReport r = hypcon_check(div);
  if (r.ok()) {
    rep << "result: (|A|-1)*delta(A) <= pair sum holds for every A\n";
    return rep.finish(0);
  }
  for (const auto& v : r.violations)
    rep << "violation at " << subset(div.ground(), v.set) << ": " << v.lhs.str() << " > "
        << v.rhs.str() << "\n";
  rep << "result: " << r.violations.size() << " violation(s)\n";
  return rep.finish(1);
}

void render_set_function(Report& rep, const SetFunction& f, const std::string& name) {
  rep << name << ":";
  const Mask all = f.ground().all();
  for (Mask m = 1; m <= all && all != 0; ++m) {
    rep << " " << subset(f.ground(), m) << "=" << f.value(m).str();
    if (m == all) break;
  }
  rep << "\n";
}

int cmd_tightspan(const std::string& path, std::uint64_t seed, const std::string& order_name,
                  int count, const std::string& seed_point, Report& rep) {
  FiniteDiversity div = load_diversity_file(path);
  if (!check_is_diversity(rep, div, seed)) return rep.finish(2);
  const int cap = cap_from_env(kDefaultTightSpanCap);
  if (div.size() > cap) {
    rep << "ground size " << div.size() << " exceeds the tight-span cap " << cap
        << " (set DIVLAB_CAP to override)\n";
    return rep.finish(1);
  }
  PxSystem sys = px_constraints(div, cap);
  const GroundSet& g = div.ground();
  const int n = div.size();
  rep << "constraint families: " << sys.families.size() << "\n";

  std::vector<SetFunction> images;
  for (int x = 0; x < n; ++x) {
    images.push_back(kappa(div, x));
    render_set_function(rep, images.back(), "h_" + g.label(x));
    rep << "  minimal tight-span member: " << (is_tight_point(div, images[x]) ? "yes" : "NO")
        << "\n";
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      rep << "delta_T(h_" << g.label(i) << ", h_" << g.label(j)
          << ") = " << delta_T(div, {images[i], images[j]}).str() << "\n";

  auto order = order_name == "lex" ? coordinate_order_lex(n) : coordinate_order_by_card(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(0, 3), den(1, 4);
  for (int it = 0; it < count; ++it) {
    int x = seed_point.empty() ? it % n : g.index(seed_point);
    if (x < 0) {
      rep << "unknown seed point '" << seed_point << "'\n";
      return rep.finish(2);
    }
    SetFunction f0 = images[x];
    const Mask all = g.all();
    for (Mask m = 1; m <= all; ++m) {
      if (rng() % 2 == 0) f0.set(m, f0.value(m) + Rat(num(rng), den(rng)));
      if (m == all) break;
    }
    TightPoint t = tighten(sys, f0, order);
    render_set_function(rep, t.f, "tighten #" + std::to_string(it) + " (from h_" + g.label(x) +
                                      " perturbed, order " + order_name + ")");
    bool tight = is_tight_point(div, t.f);
    rep << "  minimal tight-span member: " << (tight ? "yes" : "NO") << "\n";
    if (!tight) return rep.finish(1);
    std::vector<SetFunction> family = images;
    family.push_back(t.f);
    rep << "  delta_T(kappa(X) u {g}) = " << delta_T(div, family).str()
        << " = g(X) = " << t.f.value(g.all()).str() << "\n";
  }
  return rep.finish(0);
}

int cmd_hyperconvex(const std::string& path, std::uint64_t seed, bool metric_only,
                    const std::string& tolerance_text, Report& rep) {
  FiniteDiversity div = load_diversity_file(path);
  if (!check_is_diversity(rep, div, seed)) return rep.finish(2);
  const GroundSet& g = div.ground();

  Rat tolerance(0);
  if (!tolerance_text.empty()) {
    auto t = Rat::parse(tolerance_text);
    if (!t || t->sign() < 0) {
      rep << "malformed tolerance '" << tolerance_text << "'\n";
      return rep.finish(2);
    }
    tolerance = *t;
    if (!metric_only) {
      rep << "--tolerance applies to the metric check; pass --metric-only\n";
      return rep.finish(2);
    }
  }

  if (metric_only) {
    FiniteMetric m = induced_metric(div);
    auto verdict = metric_hyperconvexity_certificate(m, tolerance);
    switch (verdict.answer) {
      case HyperconvexAnswer::Hyperconvex:
        rep << "verdict: hyperconvex (metric sense)\n";
        return rep.finish(0);
      case HyperconvexAnswer::HyperconvexWithinTolerance:
        rep << "verdict: hyperconvex within tolerance " << tolerance.str() << " (metric sense)\n";
        return rep.finish(0);
      case HyperconvexAnswer::NotHyperconvex: {
        const auto& cert = *verdict.certificate;
        rep << "verdict: not hyperconvex (metric sense)\n";
        for (int i = 0; i < g.size(); ++i)
          rep << "  r(" << g.label(i) << ") = " << cert.r[i].str() << "\n";
        for (int z = 0; z < g.size(); ++z)
          rep << "  ball around " << g.label(z) << " misses " << g.label(cert.witnesses[z])
              << ": d = " << m.dist(z, cert.witnesses[z]).str() << ", margin "
              << cert.margins[z].str() << "\n";
        rep << "certificate re-verified\n";
        return rep.finish(1);
      }
    }
  }

  const int cap = cap_from_env(4);
  if (div.size() > cap) {
    rep << "ground size " << div.size() << " exceeds the hyperconvexity cap " << cap
        << " (set DIVLAB_CAP to override)\n";
    return rep.finish(1);
  }
  auto verdict = hyperconvexity_certificate(div, cap);
  if (verdict.answer == HyperconvexAnswer::Hyperconvex) {
    rep << "verdict: hyperconvex\n";
    return rep.finish(0);
  }
  const auto& cert = *verdict.certificate;
  rep << "verdict: not hyperconvex\n";
  render_set_function(rep, cert.r, "r");
  for (int z = 0; z < g.size(); ++z)
    rep << "  no center serves " << g.label(z) << ": delta(" << g.label(z) << " u "
        << subset(g, cert.witnesses[z])
        << ") = " << div.value(cert.witnesses[z] | singleton(z)).str() << " > r"
        << subset(g, cert.witnesses[z]) << " = " << cert.r.value(cert.witnesses[z]).str()
        << ", margin " << cert.margins[z].str() << "\n";
  rep << "certificate re-verified\n";
  return rep.finish(1);
}

int cmd_fixedpoint(const std::string& div_path, const std::string& map_path,
                   const std::string& start_text, const std::string& epsilon_text,
                   std::uint64_t seed, Report& rep) {
  FiniteDiversity div = load_diversity_file(div_path);
  if (!check_is_diversity(rep, div, seed)) return rep.finish(2);
  SelfMap map = load_map_file(map_path, div.ground());
  const GroundSet& g = div.ground();
  FiniteMetric metric = induced_metric(div);

  auto mrep = is_nonexpansive_metric(map, metric);
  rep << "metric-nonexpansive: " << (mrep.ok ? "yes" : "no") << "\n";
  bool hypothesis = mrep.ok;
  if (!mrep.ok)
    rep << "  WARNING: hypothesis violated at (" << g.label(mrep.witness->x) << ","
        << g.label(mrep.witness->y) << "): " << mrep.witness->after.str() << " > "
        << mrep.witness->before.str() << " -- descent still runs\n";

  if (div.size() <= 16) {
    auto drep = is_nonexpansive_diversity(map, div);
    rep << "diversity-nonexpansive: " << (drep.ok ? "yes" : "no") << "\n";
    if (!drep.ok)
      rep << "  witness " << subset(g, drep.witness->set)
          << ": delta(T(A)) = " << drep.witness->after.str() << " > "
          << drep.witness->before.str() << " = delta(A)\n";
  } else {
    rep << "diversity-nonexpansive: skipped (ground too large for the power-set scan)\n";
  }

  Mask start = g.all();
  if (!start_text.empty()) start = g.parse_subset(start_text);
  Rat epsilon(0);
  if (!epsilon_text.empty()) {
    auto e = Rat::parse(epsilon_text);
    if (!e || e->sign() < 0) {
      rep << "malformed epsilon '" << epsilon_text << "'\n";
      return rep.finish(2);
    }
    epsilon = *e;
  }

  DescentOutcome out = minimal_invariant_descent(div, map, start, epsilon);
  for (std::size_t i = 0; i < out.trace.size(); ++i)
    rep << "step " << i + 1 << ": A = " << subset(g, out.trace[i].stabilized)
        << ", d = " << out.trace[i].d_value.str() << ", A' = " << subset(g, out.trace[i].shrunk)
        << "\n";

  auto oracle = brute_force_fixed_points(map);
  rep << "oracle fixed points:";
  for (int x : oracle) rep << " " << g.label(x);
  rep << "\n";

  switch (out.kind) {
    case DescentOutcome::Kind::FixedPoint: {
      rep << "outcome: fixed point at " << g.label(out.point)
          << (hypothesis ? "" : " (hypothesis violated)") << "\n";
      bool in_oracle = false;
      for (int x : oracle) in_oracle = in_oracle || x == out.point;
      rep << "oracle cross-check: " << (in_oracle ? "confirmed" : "MISSING") << "\n";
      return rep.finish(in_oracle ? 0 : 1);
    }
    case DescentOutcome::Kind::EpsilonFixedPoint:
      rep << "outcome: epsilon-fixed point at " << g.label(out.point) << ", moved "
          << out.displacement.str() << " <= " << epsilon.str()
          << (hypothesis ? "" : " (hypothesis violated)") << "\n";
      return rep.finish(0);
    case DescentOutcome::Kind::StuckMinimalSet:
      rep << "outcome: stuck at minimal set " << subset(g, out.terminal)
          << " with d = " << out.terminal_d.str()
          << (hypothesis ? "" : " (hypothesis violated)") << "\n";
      return rep.finish(1);
  }
  return rep.finish(2);
}

int cmd_reproduce_ex1(Report& rep) {
  auto t0 = std::chrono::steady_clock::now();
  FiniteDiversity div = counting_diversity(3, {"x", "y", "z"});
  const GroundSet& g = div.ground();
  bool all_ok = true;

  PxSystem sys = px_constraints(div);
  // locate the three-singleton family: its row is the binding constraint
  int triple_row = -1;
  for (std::size_t k = 0; k < sys.families.size(); ++k)
    if (sys.families[k].size() == 3 && popcount(sys.families[k][0]) == 1 &&
        popcount(sys.families[k][1]) == 1 && popcount(sys.families[k][2]) == 1)
      triple_row = static_cast<int>(k);
  if (triple_row < 0) {
    rep << "missing singleton-partition constraint\n";
    return rep.finish(1);
  }
  rep << "binding constraint: f({x}) + f({y}) + f({z}) >= 2\n";

  lp::Problem p = sys.problem();
  const std::size_t family_rows = p.constraints.size();
  for (int u = 0; u < 3; ++u)
    p.constraints.push_back(
        {{{static_cast<int>(singleton(u)) - 1, Rat(1)}}, lp::Rel::Le, Rat(1, 2)});
  lp::Outcome out = lp::solve(p);
  const auto* inf = std::get_if<lp::Infeasible>(&out);
  if (inf == nullptr) {
    rep << "system {f in P_X, f({u}) <= 1/2} unexpectedly solvable\n";
    all_ok = false;
  } else {
    bool verified = lp::certifies_infeasibility(p, inf->multipliers);
    rep << "system {f in P_X, f({u}) <= 1/2 for all u}: infeasible, certificate "
        << (verified ? "verified" : "INVALID") << "\n";
    all_ok = all_ok && verified;
    // scale so the binding row carries weight 1, then read off both sides
    Rat scale = inf->multipliers[triple_row];
    if (scale.sign() > 0) {
      Rat lower = 0, upper = 0;
      for (std::size_t k = 0; k < p.constraints.size(); ++k) {
        Rat m = inf->multipliers[k] / scale;
        if (m.is_zero()) continue;
        if (k < family_rows) {
          rep << "  " << m.str() << " x [family row >= " << p.constraints[k].rhs.str() << "]\n";
          lower += m * p.constraints[k].rhs;
        } else {
          rep << "  " << m.str() << " x [bound <= " << p.constraints[k].rhs.str() << "]\n";
          upper += m * p.constraints[k].rhs;
        }
      }
      rep << "combination: f(x)+f(y)+f(z) <= " << upper.str() << " < " << lower.str()
          << " <= f(x)+f(y)+f(z) -- contradiction\n";
      all_ok = all_ok && upper == Rat(3, 2) && lower == Rat(2);
    } else {
      rep << "certificate does not use the binding row\n";
      all_ok = false;
    }
  }

  for (int u = 0; u < 3; ++u)
    for (int v = u + 1; v < 3; ++v) {
      Rat dt = delta_T(div, {kappa(div, u), kappa(div, v)});
      rep << "d_T(h_" << g.label(u) << ", h_" << g.label(v) << ") = " << dt.str()
          << " = 1/2 + 1/2\n";
      all_ok = all_ok && dt == Rat(1);
    }

  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                  t0)
                .count();
  rep << "elapsed: " << ms << " ms\n";
  rep << (all_ok ? "result: reproduction checks pass\n" : "result: FAILURE\n");
  return rep.finish(all_ok ? 0 : 1);
}

int cmd_reproduce_noext(int grid, std::uint64_t seed, Report& rep) {
  auto t0 = std::chrono::steady_clock::now();
  if (grid < 1) {
    rep << "grid must be at least 1\n";
    return rep.finish(2);
  }
  StarSwapGadget gadget = star_swap_gadget(grid);
  const GroundSet& g = gadget.diversity.ground();
  bool all_ok = true;
  rep << "grid " << grid << ": " << g.size() << " points\n";

  AxiomReport axioms = verify_diversity_axioms(
      gadget.diversity, grid == 1 ? ScanMode::Exhaustive : ScanMode::Sampled, seed, 100000);
  rep << "diversity axioms: " << (axioms.ok() ? "hold" : "VIOLATED") << " (";
  if (axioms.sampled)
    rep << "sampled, " << axioms.triples_checked << " seeded triples)\n";
  else
    rep << "exhaustive, " << axioms.triples_checked << " ordered triples)\n";
  all_ok = all_ok && axioms.ok();

  FiniteMetric m = induced_metric(gadget.diversity);
  long violations = 0;
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j)
      if (m.dist(gadget.swap.apply(i), gadget.swap.apply(j)) != m.dist(i, j)) ++violations;
  rep << "swap map metric isometry: " << violations << " violations over all " << g.size() << "x"
      << g.size() << " pairs\n";
  all_ok = all_ok && violations == 0;

  Mask abc = g.parse_subset("{a,b,c}");
  Rat before = gadget.diversity.value(abc);
  Rat after = gadget.diversity.value(map_image(gadget.swap, abc));
  rep << "delta({a,b,c}) = " << before.str() << "\n";
  rep << "delta({T(a),T(b),T(c)}) = delta({d,e,f}) = " << after.str() << "\n";
  all_ok = all_ok && before == Rat(2) && after == Rat(3);
  rep << "diversity-nonexpansiveness violated at witness {a,b,c}: " << after.str() << " > "
      << before.str() << "\n";

  if (grid == 1) {
    auto drep = is_nonexpansive_diversity(gadget.swap, gadget.diversity);
    bool witness_match = !drep.ok && drep.witness->set == abc;
    rep << "power-set scan witness: "
        << (drep.ok ? std::string("NONE") : subset(g, drep.witness->set)) << "\n";
    all_ok = all_ok && witness_match;
  }

  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                  t0)
                .count();
  rep << "elapsed: " << ms << " ms\n";
  rep << (all_ok ? "result: reproduction checks pass\n" : "result: FAILURE\n");
  return rep.finish(all_ok ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite diversities workbench: axioms, tight spans, hyperconvexity, fixed points"};
  app.require_subcommand(1);
  app.fallthrough();  // --seed/--out may follow the subcommand

  std::string out_path;
  std::uint64_t seed = 0;
  app.add_option("--out", out_path, "also write the report to this file");
  app.add_option("--seed", seed, "seed for sampled scans and perturbations");

  std::string path, map_path, start_text, epsilon_text, tolerance_text, seed_point;
  std::string order_name = "card";
  int count = 3, grid = 1;
  bool metric_only = false;

  auto* verify = app.add_subcommand("verify", "check the diversity axioms of a file");
  verify->add_option("file", path)->required();

  auto* metric = app.add_subcommand("metric", "print the induced metric");
  metric->add_option("file", path)->required();

  auto* hypcon = app.add_subcommand("hypcon", "check (|A|-1)*delta(A) against pair sums");
  hypcon->add_option("file", path)->required();

  auto* tightspan =
      app.add_subcommand("tightspan", "canonical images, tightened points, delta_T samples");
  tightspan->add_option("file", path)->required();
  tightspan->add_option("--order", order_name, "coordinate order: lex or card")
      ->check(CLI::IsMember({"lex", "card"}));
  tightspan->add_option("--count", count, "number of seeded perturbations");
  tightspan->add_option("--seed-point", seed_point, "perturb this point's image");

  auto* hyperconvex = app.add_subcommand("hyperconvex", "hyperconvexity verdict with certificate");
  hyperconvex->add_option("file", path)->required();
  hyperconvex->add_flag("--metric-only", metric_only, "check the induced metric instead");
  hyperconvex->add_option("--tolerance", tolerance_text, "slack for the metric check (p/q)");

  auto* fixedpoint = app.add_subcommand("fixedpoint", "nonexpansiveness checks and descent");
  fixedpoint->add_option("file", path)->required();
  fixedpoint->add_option("map", map_path)->required();
  fixedpoint->add_option("--start", start_text, "start set literal, default the whole ground");
  fixedpoint->add_option("--epsilon", epsilon_text, "accept points moved at most this far");

  auto* rex1 = app.add_subcommand("reproduce-ex1",
                                  "3-point counting diversity: tight-span midpoint infeasibility");
  auto* rnoext = app.add_subcommand(
      "reproduce-noext", "glued star: metric isometry that expands a diversity value");
  rnoext->add_option("--grid", grid, "grid points per unit leg");

  CLI11_PARSE(app, argc, argv);

  Report rep;
  rep.out_path = out_path;
  try {
    if (app.got_subcommand(verify)) return cmd_verify(path, seed, rep);
    if (app.got_subcommand(metric)) return cmd_metric(path, seed, rep);
    if (app.got_subcommand(hypcon)) return cmd_hypcon(path, seed, rep);
    if (app.got_subcommand(tightspan))
      return cmd_tightspan(path, seed, order_name, count, seed_point, rep);
    if (app.got_subcommand(hyperconvex))
      return cmd_hyperconvex(path, seed, metric_only, tolerance_text, rep);
    if (app.got_subcommand(fixedpoint))
      return cmd_fixedpoint(path, map_path, start_text, epsilon_text, seed, rep);
    if (app.got_subcommand(rex1)) return cmd_reproduce_ex1(rep);
    if (app.got_subcommand(rnoext)) return cmd_reproduce_noext(grid, seed, rep);
  } catch (const ParseError& e) {
    std::cerr << "parse error at line " << e.line << ", column " << e.column << ": " << e.what()
              << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
