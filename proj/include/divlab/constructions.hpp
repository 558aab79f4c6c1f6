#ifndef DIVLAB_CONSTRUCTIONS_HPP
#define DIVLAB_CONSTRUCTIONS_HPP

#include <string>
#include <utility>
#include <vector>

#include "divlab/diversity.hpp"
#include "divlab/self_map.hpp"

namespace divlab {

/// Weighted tree with positive rational edge lengths. Validated at
/// construction: connected, acyclic, every length > 0.
class MetricTree {
 public:
  struct Edge {
    int u, v;
    Rat length;
  };

  MetricTree(std::vector<std::string> node_labels, std::vector<Edge> edges);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  const std::string& node_label(int i) const { return nodes_.at(i); }
  int node_index(std::string_view label) const;
  const std::vector<Edge>& edges() const { return edges_; }
  const Rat& node_distance(int a, int b) const {
    return dist_[static_cast<std::size_t>(a) * nodes_.size() + b];
  }

 private:
  std::vector<std::string> nodes_;
  std::vector<Edge> edges_;
  std::vector<Rat> dist_;  // node-to-node path lengths
};

/// Point on a tree: lies on `edge` at `offset` from the edge's u endpoint.
/// Node points canonicalize to the smallest incident edge id with offset 0
/// (or the full length when the node is that edge's v endpoint).
struct TreePoint {
  int edge = 0;
  Rat offset;
};

TreePoint canonical_tree_point(const MetricTree& tree, const TreePoint& p);
Rat tree_point_distance(const MetricTree& tree, const TreePoint& p, const TreePoint& q);

/// delta(A) = max pairwise distance (diameter). Dense up to 16 points,
/// evaluation-backed above.
FiniteDiversity diameter_diversity(const FiniteMetric& metric);

/// delta(A) = total length of the smallest subtree spanning the marked points
/// of A. Marked points must be pairwise distinct; they become the ground set.
FiniteDiversity tree_diversity(const MetricTree& tree,
                               const std::vector<std::pair<std::string, TreePoint>>& marked);

/// Two diversities sharing exactly one point ("hub") combine into one on the
/// union: values restrict on either side; a mixed set A evaluates to
/// left((A n X) u {hub}) + right((A n Y) u {hub}).
FiniteDiversity glue_diversities(const FiniteDiversity& left, const FiniteDiversity& right,
                                 const std::string& hub);

/// delta(A) = max(|A| - 1, 0). Default labels are x1..xn.
FiniteDiversity counting_diversity(int n, std::vector<std::string> labels = {});

/// Induced diversity on a nonempty subset of the ground set.
FiniteDiversity restrict(const FiniteDiversity& div, Mask s);

struct HypconViolation {
  Mask set;
  Rat lhs;  // (|A|-1) * delta(A)
  Rat rhs;  // sum of pairwise induced distances inside A
};
struct HypconReport {
  std::vector<HypconViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Scans every A with |A| >= 2 for breaks of
/// (|A|-1) * delta(A) <= sum of pairwise distances.
HypconReport hypcon_check(const FiniteDiversity& div);

/// Six-legged unit star glued at a hub: diameter diversity on the a/b/c side,
/// subtree-length diversity on the d/e/f side, marked on a uniform 1/k grid,
/// together with the leg-swapping self map (a<->d, b<->e, c<->f, offsets kept).
struct StarSwapGadget {
  FiniteDiversity diversity;
  SelfMap swap;
  int grid = 1;
};
StarSwapGadget star_swap_gadget(int grid_k);

}  // namespace divlab

#endif
