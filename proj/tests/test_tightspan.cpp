#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "divlab/constructions.hpp"
#include "divlab/tightspan.hpp"
#include "test_util.hpp"

using namespace divlab;

namespace {

// Independent minimality oracle: inside P_X a coordinate S can drop to
//   max over families containing S of (delta(union) - sum of the others),
// so f is coordinatewise minimal iff every coordinate sits at that bound.
bool coordinate_minimal_oracle(const PxSystem& sys, const SetFunction& f) {
  const Mask all = sys.base.ground().all();
  for (Mask s = 1; s <= all; ++s) {
    Rat bound = 0;
    bool seen = false;
    for (const auto& fam : sys.families) {
      bool has = false;
      Mask u = 0;
      Rat others = 0;
      for (Mask a : fam) {
        u |= a;
        if (a == s)
          has = true;
        else
          others += f.value(a);
      }
      if (!has) continue;
      Rat v = sys.base.value(u) - others;
      if (!seen || v > bound) bound = v;
      seen = true;
    }
    if (f.value(s) != bound) return false;
    if (s == all) break;
  }
  return true;
}

SetFunction perturbed_kappa(const FiniteDiversity& div, int x, std::mt19937_64& rng) {
  SetFunction f = kappa(div, x);
  const Mask all = div.ground().all();
  std::uniform_int_distribution<int> num(0, 3), den(1, 4);
  for (Mask m = 1; m <= all; ++m) {
    if (rng() % 2 == 0) f.set(m, f.value(m) + Rat(num(rng), den(rng)));
    if (m == all) break;
  }
  return f;
}

}  // namespace

TEST_CASE("antichain family counts follow the free distributive lattice") {
  CHECK(antichain_families(full_mask(1)).size() == 1);
  CHECK(antichain_families(full_mask(2)).size() == 4);
  CHECK(antichain_families(full_mask(3)).size() == 18);
  CHECK(antichain_families(full_mask(4)).size() == 166);
  CHECK(antichain_families(full_mask(5)).size() == 7579);
}

TEST_CASE("antichain rows cut the same feasible set as all families") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3;
    FiniteDiversity div = testutil::random_diversity(n, rng);
    PxSystem sys = px_constraints(div);
    SetFunction f(div.ground());
    const Mask all = div.ground().all();
    std::uniform_int_distribution<int> num(0, 6), den(1, 3);
    for (Mask m = 1; m <= all; ++m) {
      f.set(m, Rat(num(rng), den(rng)));
      if (m == all) break;
    }
    bool full = true;
    for (const auto& fam : all_families(all)) {
      Rat sum = 0;
      Mask u = 0;
      for (Mask a : fam) {
        sum += f.value(a);
        u |= a;
      }
      if (sum < div.value(u)) {
        full = false;
        break;
      }
    }
    CHECK(in_px(sys, f) == full);
  }
}

TEST_CASE("two-point constraint system matches the hand enumeration") {
  GroundSet g({"x", "y"});
  SetFunction t(g);
  t.set(0b11, Rat(1));
  FiniteDiversity div = FiniteDiversity::from_table(t);
  PxSystem sys = px_constraints(div);
  REQUIRE(sys.families.size() == 4);
  // {x}, {y}, {x}+{y}, {xy} in some order; check rows through the LP form.
  lp::Problem p = sys.problem();
  CHECK(p.num_vars == 3);
  int singles = 0, pairs = 0, doubles = 0;
  for (const auto& c : p.constraints) {
    if (c.terms.size() == 1 && c.rhs == Rat(0)) ++singles;       // f({u}) >= 0
    if (c.terms.size() == 1 && c.rhs == Rat(1)) ++doubles;       // f({x,y}) >= 1
    if (c.terms.size() == 2 && c.rhs == Rat(1)) ++pairs;         // f(x)+f(y) >= 1
  }
  CHECK(singles == 2);
  CHECK(doubles == 1);
  CHECK(pairs == 1);
}

TEST_CASE("the cap is enforced and named") {
  FiniteDiversity big = counting_diversity(6);
  CHECK_THROWS_WITH_AS(px_constraints(big), doctest::Contains("cap 5"), std::invalid_argument);
  CHECK_NOTHROW(px_constraints(big, 6));
}

TEST_CASE("membership examples") {
  FiniteDiversity div = counting_diversity(3, {"x", "y", "z"});
  PxSystem sys = px_constraints(div);

  SetFunction self = div.to_table();
  CHECK(!in_px(sys, self));  // the three-singleton row needs 2, delta gives 0

  SetFunction zero(div.ground());
  CHECK(!in_px(sys, zero));

  for (int x = 0; x < 3; ++x) CHECK(in_px(sys, kappa(div, x)));

  SetFunction other{GroundSet({"x", "y"})};
  CHECK_THROWS_AS(in_px(sys, other), std::invalid_argument);
}

TEST_CASE("kappa tables on the counting diversity") {
  FiniteDiversity div = counting_diversity(3, {"x", "y", "z"});
  SetFunction hx = kappa(div, 0);
  CHECK(hx.value(0b110) == Rat(2));  // {y,z} u {x} has three members
  CHECK(hx.value(0b001) == Rat(0));
  CHECK(hx.value(0b010) == Rat(1));
  CHECK(hx.value(0) == Rat(0));
  CHECK_THROWS_AS(kappa(div, 5), std::invalid_argument);
}

TEST_CASE("tighten keeps kappa images fixed") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 8; ++trial) {
    FiniteDiversity div = testutil::random_diversity(3, rng);
    PxSystem sys = px_constraints(div);
    for (int x = 0; x < div.size(); ++x) {
      SetFunction hx = kappa(div, x);
      TightPoint g = tighten(sys, hx, coordinate_order_by_card(div.size()));
      CHECK(g.f == hx);
    }
  }
}

TEST_CASE("tighten pins the two-point example") {
  GroundSet g({"x", "y"});
  SetFunction t(g);
  t.set(0b11, Rat(1));
  FiniteDiversity div = FiniteDiversity::from_table(t);
  PxSystem sys = px_constraints(div);
  SetFunction f0(g);
  f0.set(0b01, Rat(1));
  f0.set(0b10, Rat(1));
  f0.set(0b11, Rat(1));
  TightPoint out = tighten(sys, f0, coordinate_order_by_card(2));
  // card order minimizes f({x}) first: bound f(x)+f(y) >= 1 lets it reach 0,
  // then f({y}) is pinned at 1 and the pair coordinate at 1.
  CHECK(out.f.value(0b01) == Rat(0));
  CHECK(out.f.value(0b10) == Rat(1));
  CHECK(out.f.value(0b11) == Rat(1));
  CHECK(coordinate_minimal_oracle(sys, out.f));

  // reversed order lands on the other minimal point
  std::vector<Mask> rev{0b10, 0b01, 0b11};
  TightPoint other = tighten(sys, f0, rev);
  CHECK(other.f.value(0b01) == Rat(1));
  CHECK(other.f.value(0b10) == Rat(0));
  CHECK(coordinate_minimal_oracle(sys, other.f));

  SetFunction bad(g);  // identically zero is outside P_X
  CHECK_THROWS_AS(tighten(sys, bad, coordinate_order_by_card(2)), std::invalid_argument);

  // canonical images are already minimal, in either order
  for (int x = 0; x < 2; ++x) {
    SetFunction hx = kappa(div, x);
    CHECK(tighten(sys, hx, coordinate_order_by_card(2)).f == hx);
    CHECK(tighten(sys, hx, rev).f == hx);
  }
}

TEST_CASE("tighten outputs are minimal, monotone, dominated tight points") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 2 + static_cast<int>(trial % 3);
    FiniteDiversity div = testutil::random_diversity(n, rng);
    PxSystem sys = px_constraints(div);
    std::uniform_int_distribution<int> pick(0, n - 1);
    SetFunction f0 = perturbed_kappa(div, pick(rng), rng);
    auto order = trial % 2 == 0 ? coordinate_order_by_card(n) : coordinate_order_lex(n);
    TightPoint g = tighten(sys, f0, order);
    CHECK(in_px(sys, g.f));
    const Mask all = div.ground().all();
    for (Mask m = 1; m <= all; ++m) {
      CHECK(g.f.value(m) <= f0.value(m));
      if (m == all) break;
    }
    CHECK(g.f.is_monotone());
    CHECK(coordinate_minimal_oracle(sys, g.f));
    CHECK(is_tight_point(div, g.f));
  }
}

TEST_CASE("characterization equivalence on members and non-members") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 2 + static_cast<int>(trial % 3);
    FiniteDiversity div = testutil::random_diversity(n, rng);
    PxSystem sys = px_constraints(div);
    std::uniform_int_distribution<int> pick(0, n - 1);

    std::vector<SetFunction> candidates;
    candidates.push_back(kappa(div, pick(rng)));
    candidates.push_back(perturbed_kappa(div, pick(rng), rng));
    candidates.push_back(
        tighten(sys, perturbed_kappa(div, pick(rng), rng), coordinate_order_by_card(n)).f);

    for (const SetFunction& f : candidates) {
      bool lp_side = in_px(sys, f) && coordinate_minimal_oracle(sys, f);
      CHECK(lp_side == is_tight_point(div, f));
    }
  }
}

TEST_CASE("raised kappa image is no longer tight") {
  FiniteDiversity div = counting_diversity(3, {"x", "y", "z"});
  SetFunction f = kappa(div, 0);
  const Mask all = div.ground().all();
  for (Mask m = 1; m <= all; ++m) {
    f.set(m, f.value(m) + Rat(1));
    if (m == all) break;
  }
  CHECK(!is_tight_point(div, f));
  CHECK_THROWS_AS(delta_T(div, {f}), std::invalid_argument);
}

TEST_CASE("tight span diversity: embedding and evaluation identities") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(trial % 3);
    FiniteDiversity div = testutil::random_diversity(n, rng);
    PxSystem sys = px_constraints(div);
    std::vector<SetFunction> images;
    for (int x = 0; x < n; ++x) images.push_back(kappa(div, x));

    const Mask all = div.ground().all();
    for (Mask a = 1; a <= all; ++a) {
      std::vector<SetFunction> pts;
      for_each_member(a, [&](int x) { pts.push_back(images[x]); });
      CHECK(delta_T(div, pts) == div.value(a));
      if (a == all) break;
    }

    std::uniform_int_distribution<int> pick(0, n - 1);
    SetFunction g = tighten(sys, perturbed_kappa(div, pick(rng), rng),
                            coordinate_order_by_card(n))
                        .f;
    for (Mask a = 1; a <= all; ++a) {
      std::vector<SetFunction> pts;
      for_each_member(a, [&](int x) { pts.push_back(images[x]); });
      pts.push_back(g);
      CHECK(delta_T(div, pts) == g.value(a));
      if (a == all) break;
    }
    CHECK(delta_T(div, {g}) == Rat(0));
  }
}

TEST_CASE("hyperconvexity of tiny diversities") {
  auto single = hyperconvexity_certificate(counting_diversity(1));
  CHECK(single.answer == HyperconvexAnswer::Hyperconvex);

  auto two = hyperconvexity_certificate(counting_diversity(2, {"x", "y"}));
  REQUIRE(two.answer == HyperconvexAnswer::NotHyperconvex);
  REQUIRE(two.certificate.has_value());
  // no midpoint: r = 1/2 on both singletons beats every candidate center
  CHECK(two.certificate->r.value(0b01) == Rat(1, 2));
  CHECK(two.certificate->r.value(0b10) == Rat(1, 2));
  for (const Rat& m : two.certificate->margins) CHECK(m.sign() > 0);

  auto three = hyperconvexity_certificate(counting_diversity(3));
  REQUIRE(three.answer == HyperconvexAnswer::NotHyperconvex);
  REQUIRE(three.certificate.has_value());
  const auto& cert = *three.certificate;
  FiniteDiversity div = counting_diversity(3);
  CHECK(!first_family_violation(div, cert.r, div.ground().all()).has_value());
  for (int z = 0; z < 3; ++z)
    CHECK(div.value(cert.witnesses[z] | singleton(z)) - cert.r.value(cert.witnesses[z]) ==
          cert.margins[z]);
}

TEST_CASE("cap on the hyperconvexity search is enforced") {
  CHECK_THROWS_AS(hyperconvexity_certificate(counting_diversity(5)), std::invalid_argument);
  CHECK_NOTHROW(hyperconvexity_certificate(counting_diversity(4), 4));
}

TEST_CASE("four-point instances refute quickly with sound certificates") {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 6; ++trial) {
    FiniteDiversity div = testutil::random_diversity(4, rng);
    auto verdict = hyperconvexity_certificate(div);
    REQUIRE(verdict.answer == HyperconvexAnswer::NotHyperconvex);
    const auto& cert = *verdict.certificate;
    CHECK(!first_family_violation(div, cert.r, div.ground().all()).has_value());
    for (int z = 0; z < 4; ++z) {
      CHECK(div.value(cert.witnesses[z] | singleton(z)) > cert.r.value(cert.witnesses[z]));
      CHECK(cert.margins[z].sign() > 0);
    }
  }
}

TEST_CASE("delta_T deduplicates repeated members") {
  FiniteDiversity div = counting_diversity(3);
  SetFunction hx = kappa(div, 0);
  CHECK(delta_T(div, {hx, hx}) == Rat(0));
  CHECK(delta_T(div, {hx, hx, kappa(div, 1)}) == Rat(1));
  CHECK_THROWS_AS(delta_T(div, {}), std::invalid_argument);
}

TEST_CASE("metric hyperconvexity: exact and tolerance modes") {
  GroundSet one({"x"});
  FiniteMetric m1(one, {Rat(0)});
  CHECK(metric_hyperconvexity_certificate(m1).answer == HyperconvexAnswer::Hyperconvex);

  GroundSet two({"x", "y"});
  FiniteMetric m2(two, {Rat(0), Rat(1), Rat(1), Rat(0)});
  auto v = metric_hyperconvexity_certificate(m2);
  REQUIRE(v.answer == HyperconvexAnswer::NotHyperconvex);
  REQUIRE(v.certificate.has_value());
  CHECK(v.certificate->r[0] == Rat(1, 2));
  CHECK(v.certificate->r[1] == Rat(1, 2));
  CHECK(v.certificate->margins[0] == Rat(1, 2));

  // the star grid at spacing 1/k is hyperconvex up to half a step
  for (int k : {1, 2}) {
    StarSwapGadget gadget = star_swap_gadget(k);
    FiniteMetric grid = induced_metric(gadget.diversity);
    auto verdict = metric_hyperconvexity_certificate(grid, Rat(1, 2 * k));
    CHECK(verdict.answer == HyperconvexAnswer::HyperconvexWithinTolerance);
    // and it is not hyperconvex to a stricter tolerance
    auto strict = metric_hyperconvexity_certificate(grid, Rat(1, 4 * k));
    CHECK(strict.answer == HyperconvexAnswer::NotHyperconvex);
  }
}

TEST_CASE("closed-form witness margins equal the LP optimum") {
  // For a full witness assignment the search scores
  //   min over antichain subfamilies of capped sets of (sum caps - delta(union)) / |F|;
  // that must be exactly the optimum of "max t over the family polyhedron with
  // the witness caps", here re-solved as an explicit LP.
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 2 + static_cast<int>(trial % 2);
    FiniteDiversity div =
        trial < 2 ? counting_diversity(n) : testutil::random_diversity(n, rng);
    const Mask all = div.ground().all();
    const int num_sets = static_cast<int>(all);

    std::uniform_int_distribution<Mask> pick(1, all);
    for (int rep = 0; rep < 12; ++rep) {
      std::vector<Mask> witness(n);
      for (int z = 0; z < n; ++z) witness[z] = pick(rng);

      // closed form via min caps
      std::vector<Mask> sets;
      std::vector<Rat> caps;
      for (int z = 0; z < n; ++z) {
        Rat cap = div.value(witness[z] | singleton(z));
        bool found = false;
        for (std::size_t i = 0; i < sets.size(); ++i)
          if (sets[i] == witness[z]) {
            if (cap < caps[i]) caps[i] = cap;
            found = true;
          }
        if (!found) {
          sets.push_back(witness[z]);
          caps.push_back(cap);
        }
      }
      std::optional<Rat> closed;
      for (std::size_t sub = 1; sub < (std::size_t{1} << sets.size()); ++sub) {
        Mask u = 0;
        Rat sum = 0;
        int count = 0;
        bool antichain = true;
        for (std::size_t i = 0; i < sets.size() && antichain; ++i) {
          if (!((sub >> i) & 1)) continue;
          for (std::size_t j = 0; j < i; ++j)
            if (((sub >> j) & 1) &&
                (subset_of(sets[i], sets[j]) || subset_of(sets[j], sets[i])))
              antichain = false;
          u |= sets[i];
          sum += caps[i];
          ++count;
        }
        if (!antichain) continue;
        Rat bound = (sum - div.value(u)) / Rat(count);
        if (!closed || bound < *closed) closed = bound;
      }

      // the same optimum as an explicit LP
      lp::Problem p;
      p.num_vars = num_sets + 1;
      p.sense = lp::Sense::Maximize;
      p.objective.assign(num_sets + 1, Rat(0));
      p.objective[num_sets] = 1;
      for (const auto& fam : antichain_families(all)) {
        lp::Constraint c;
        Mask u = 0;
        for (Mask a : fam) {
          c.terms.push_back({static_cast<int>(a) - 1, Rat(1)});
          u |= a;
        }
        c.rel = lp::Rel::Ge;
        c.rhs = div.value(u);
        p.constraints.push_back(std::move(c));
      }
      for (int z = 0; z < n; ++z)
        p.constraints.push_back({{{static_cast<int>(witness[z]) - 1, Rat(1)},
                                  {num_sets, Rat(1)}},
                                 lp::Rel::Le,
                                 div.value(witness[z] | singleton(z))});
      auto out = lp::solve(p);
      auto* f = std::get_if<lp::Feasible>(&out);
      REQUIRE(f != nullptr);
      CHECK(f->value == *closed);
    }
  }
}

TEST_CASE("extremal function criterion") {
  GroundSet g({"x", "y", "z"});
  FiniteMetric m(g, {Rat(0), Rat(3), Rat(5), Rat(3), Rat(0), Rat(4), Rat(5), Rat(4), Rat(0)});
  for (int x = 0; x < 3; ++x) {
    std::vector<Rat> kuratowski{m.dist(x, 0), m.dist(x, 1), m.dist(x, 2)};
    CHECK(isbell_extremal_check(m, kuratowski));
  }
  CHECK(isbell_extremal_check(m, {Rat(2), Rat(1), Rat(3)}));
  CHECK(!isbell_extremal_check(m, {Rat(2), Rat(2), Rat(3)}));

  GroundSet two({"x", "y"});
  FiniteMetric m2(two, {Rat(0), Rat(1), Rat(1), Rat(0)});
  CHECK(!isbell_extremal_check(m2, {Rat(1), Rat(1)}));  // constant diameter is not minimal
  CHECK(isbell_extremal_check(m2, {Rat(1, 2), Rat(1, 2)}));
}
