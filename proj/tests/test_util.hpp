#ifndef DIVLAB_TEST_UTIL_HPP
#define DIVLAB_TEST_UTIL_HPP

#include <random>
#include <string>
#include <vector>

#include "divlab/constructions.hpp"
#include "divlab/diversity.hpp"

namespace divlab::testutil {

inline std::vector<std::string> point_labels(int n, const std::string& stem = "p") {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(stem + std::to_string(i));
  return labels;
}

inline Rat random_rat(std::mt19937_64& rng, int max_num = 8, int max_den = 4) {
  std::uniform_int_distribution<int> num(1, max_num), den(1, max_den);
  return Rat(num(rng), den(rng));
}

/// Random metric: positive weights on the complete graph, closed under
/// shortest paths. Always a valid FiniteMetric.
inline FiniteMetric random_metric(int n, std::mt19937_64& rng, int max_num = 8, int max_den = 4) {
  std::vector<Rat> d(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rat w = random_rat(rng, max_num, max_den);
      d[static_cast<std::size_t>(i) * n + j] = w;
      d[static_cast<std::size_t>(j) * n + i] = w;
    }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        Rat via = d[static_cast<std::size_t>(i) * n + k] + d[static_cast<std::size_t>(k) * n + j];
        if (k != i && k != j && via < d[static_cast<std::size_t>(i) * n + j]) {
          d[static_cast<std::size_t>(i) * n + j] = via;
        }
      }
  return FiniteMetric(GroundSet(point_labels(n)), std::move(d));
}

/// Random weighted tree on n nodes (each node attaches to a random earlier one).
inline MetricTree random_tree(int n, std::mt19937_64& rng, int max_num = 8, int max_den = 2) {
  std::vector<MetricTree::Edge> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    edges.push_back({parent(rng), v, random_rat(rng, max_num, max_den)});
  }
  return MetricTree(point_labels(n, "t"), std::move(edges));
}

/// Random diversity: positive combinations and maxima of diameter, subtree
/// and counting diversities all stay diversities, so mixtures are valid by
/// construction (and the tests assert it anyway).
inline FiniteDiversity random_diversity(int n, std::mt19937_64& rng) {
  FiniteMetric m = random_metric(n, rng);
  FiniteDiversity diam = diameter_diversity(m);

  MetricTree tree = random_tree(n + 2, rng);
  std::vector<std::pair<std::string, TreePoint>> marks;
  for (int i = 0; i < n; ++i) {
    // node i as a tree point
    for (std::size_t e = 0; e < tree.edges().size(); ++e) {
      if (tree.edges()[e].u == i) {
        marks.push_back({"p" + std::to_string(i), TreePoint{static_cast<int>(e), Rat(0)}});
        break;
      }
      if (tree.edges()[e].v == i) {
        marks.push_back(
            {"p" + std::to_string(i), TreePoint{static_cast<int>(e), tree.edges()[e].length}});
        break;
      }
    }
  }
  FiniteDiversity phyl = tree_diversity(tree, marks);

  Rat a = random_rat(rng, 3, 2), b = random_rat(rng, 3, 2), c = random_rat(rng, 2, 4);
  std::uniform_int_distribution<int> mode(0, 2);
  int pick = mode(rng);
  GroundSet ground(point_labels(n));
  SetFunction table(ground);
  const Mask all = ground.all();
  for (Mask s = 1; s <= all && all != 0; ++s) {
    Rat counting = popcount(s) <= 1 ? Rat(0) : Rat(popcount(s) - 1);
    Rat v;
    if (pick == 0)
      v = a * diam.value(s) + b * phyl.value(s) + c * counting;
    else if (pick == 1)
      v = max(a * diam.value(s), b * phyl.value(s));
    else
      v = a * phyl.value(s) + c * counting;
    table.set(s, v);
    if (s == all) break;
  }
  return FiniteDiversity::from_table(std::move(table));
}

}  // namespace divlab::testutil

#endif
