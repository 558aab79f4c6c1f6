#include "divlab/constructions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace divlab {

namespace {

std::vector<std::vector<std::pair<int, int>>> adjacency(int n,
                                                        const std::vector<MetricTree::Edge>& es) {
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge id)
  for (std::size_t e = 0; e < es.size(); ++e) {
    adj[es[e].u].push_back({es[e].v, static_cast<int>(e)});
    adj[es[e].v].push_back({es[e].u, static_cast<int>(e)});
  }
  return adj;
}

}  // namespace

MetricTree::MetricTree(std::vector<std::string> node_labels, std::vector<Edge> edges)
    : nodes_(std::move(node_labels)), edges_(std::move(edges)) {
  const int n = node_count();
  if (n == 0) throw std::invalid_argument("tree needs at least one node");
  if (edges_.size() != static_cast<std::size_t>(n) - 1)
    throw std::invalid_argument("tree must have exactly n-1 edges");
  {
    std::vector<std::string_view> sorted(nodes_.begin(), nodes_.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("duplicate node label");
  }
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n || e.u == e.v)
      throw std::invalid_argument("edge endpoints out of range");
    if (e.length.sign() <= 0) throw std::invalid_argument("edge lengths must be positive");
  }
  auto adj = adjacency(n, edges_);
  dist_.assign(static_cast<std::size_t>(n) * n, Rat(0));
  for (int root = 0; root < n; ++root) {
    std::vector<bool> seen(n, false);
    std::vector<int> stack{root};
    seen[root] = true;
    int visited = 0;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      ++visited;
      for (auto [v, e] : adj[u])
        if (!seen[v]) {
          seen[v] = true;
          dist_[static_cast<std::size_t>(root) * n + v] =
              dist_[static_cast<std::size_t>(root) * n + u] + edges_[e].length;
          stack.push_back(v);
        }
    }
    if (visited != n) throw std::invalid_argument("tree is not connected");
  }
}

int MetricTree::node_index(std::string_view label) const {
  for (int i = 0; i < node_count(); ++i)
    if (nodes_[i] == label) return i;
  return -1;
}

TreePoint canonical_tree_point(const MetricTree& tree, const TreePoint& p) {
  const auto& es = tree.edges();
  if (p.edge < 0 || p.edge >= static_cast<int>(es.size()))
    throw std::invalid_argument("tree point on unknown edge");
  const auto& e = es[p.edge];
  if (p.offset.sign() < 0 || p.offset > e.length)
    throw std::invalid_argument("tree point offset outside the edge");
  if (!p.offset.is_zero() && p.offset != e.length) return p;
  int node = p.offset.is_zero() ? e.u : e.v;
  for (std::size_t k = 0; k < es.size(); ++k) {
    if (es[k].u == node) return {static_cast<int>(k), Rat(0)};
    if (es[k].v == node) return {static_cast<int>(k), es[k].length};
  }
  throw std::logic_error("node without incident edge");
}

Rat tree_point_distance(const MetricTree& tree, const TreePoint& pa, const TreePoint& pb) {
  TreePoint p = canonical_tree_point(tree, pa), q = canonical_tree_point(tree, pb);
  if (p.edge == q.edge) return (p.offset - q.offset).abs();
  const auto& ep = tree.edges()[p.edge];
  const auto& eq = tree.edges()[q.edge];
  // Routes leave each edge through one of its endpoints; in a tree the true
  // path is the cheapest of the four.
  std::pair<int, Rat> ends_p[2] = {{ep.u, p.offset}, {ep.v, ep.length - p.offset}};
  std::pair<int, Rat> ends_q[2] = {{eq.u, q.offset}, {eq.v, eq.length - q.offset}};
  Rat best;
  bool first = true;
  for (const auto& [na, ca] : ends_p)
    for (const auto& [nb, cb] : ends_q) {
      Rat total = ca + tree.node_distance(na, nb) + cb;
      if (first || total < best) best = total;
      first = false;
    }
  return best;
}

FiniteDiversity diameter_diversity(const FiniteMetric& metric) {
  const int n = metric.size();
  if (n <= 16) {
    SetFunction table(metric.ground());
    const Mask all = metric.ground().all();
    for (Mask m = 1; m <= all && all != 0; ++m) {
      if (popcount(m) < 2) continue;
      int i = lowest_bit(m);
      Mask rest = m & (m - 1);
      Rat v = table.value(rest);
      for_each_member(rest, [&](int j) {
        if (metric.dist(i, j) > v) v = metric.dist(i, j);
      });
      table.set(m, v);
      if (m == all) break;
    }
    return FiniteDiversity::from_table(std::move(table));
  }
  return FiniteDiversity::from_function(metric.ground(), [metric](Mask a) {
    Rat v = 0;
    for_each_member(a, [&](int i) {
      for_each_member(a, [&](int j) {
        if (j > i && metric.dist(i, j) > v) v = metric.dist(i, j);
      });
    });
    return v;
  });
}

FiniteDiversity tree_diversity(const MetricTree& tree,
                               const std::vector<std::pair<std::string, TreePoint>>& marked) {
  if (marked.empty()) throw std::invalid_argument("no marked points");

  std::vector<TreePoint> canon;
  for (const auto& [label, p] : marked) canon.push_back(canonical_tree_point(tree, p));
  for (std::size_t i = 0; i < canon.size(); ++i)
    for (std::size_t j = i + 1; j < canon.size(); ++j)
      if (canon[i].edge == canon[j].edge && canon[i].offset == canon[j].offset)
        throw std::invalid_argument("duplicate marked points '" + marked[i].first + "' and '" +
                                    marked[j].first + "'");

  // Split edges at interior marked points; marked points become nodes of an
  // augmented tree, and subtree length reduces to a sum over separating edges.
  const int base_nodes = tree.node_count();
  int aug_nodes = base_nodes;
  std::vector<int> mark_node(canon.size(), -1);
  std::map<std::pair<int, std::string>, int> interior;  // (edge, offset) -> aug node
  for (std::size_t i = 0; i < canon.size(); ++i) {
    const TreePoint& p = canon[i];
    const auto& e = tree.edges()[p.edge];
    if (p.offset.is_zero())
      mark_node[i] = e.u;
    else if (p.offset == e.length)
      mark_node[i] = e.v;
    else {
      auto key = std::make_pair(p.edge, p.offset.str());
      auto [it, inserted] = interior.insert({key, aug_nodes});
      if (inserted) ++aug_nodes;
      mark_node[i] = it->second;
    }
  }

  struct AugEdge {
    int u, v;
    Rat length;
  };
  std::vector<AugEdge> aug_edges;
  for (std::size_t e = 0; e < tree.edges().size(); ++e) {
    const auto& edge = tree.edges()[e];
    std::vector<std::pair<Rat, int>> cuts;  // (offset, aug node)
    for (const auto& [key, node] : interior)
      if (key.first == static_cast<int>(e)) {
        auto parsed = Rat::parse(key.second);
        cuts.push_back({*parsed, node});
      }
    std::sort(cuts.begin(), cuts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    int prev = edge.u;
    Rat prev_off = 0;
    for (const auto& [off, node] : cuts) {
      aug_edges.push_back({prev, node, off - prev_off});
      prev = node;
      prev_off = off;
    }
    aug_edges.push_back({prev, edge.v, edge.length - prev_off});
  }

  std::vector<std::vector<std::pair<int, int>>> adj(aug_nodes);
  for (std::size_t e = 0; e < aug_edges.size(); ++e) {
    adj[aug_edges[e].u].push_back({aug_edges[e].v, static_cast<int>(e)});
    adj[aug_edges[e].v].push_back({aug_edges[e].u, static_cast<int>(e)});
  }

  // down_mask[e] = marked points on the far side of edge e as seen from the root.
  std::vector<Mask> node_marks(aug_nodes, 0);
  for (std::size_t i = 0; i < canon.size(); ++i) node_marks[mark_node[i]] |= singleton(i);
  std::vector<Mask> down_mask(aug_edges.size(), 0);
  {
    std::vector<int> order, parent_edge(aug_nodes, -1);
    std::vector<bool> seen(aug_nodes, false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      order.push_back(u);
      for (auto [v, e] : adj[u])
        if (!seen[v]) {
          seen[v] = true;
          parent_edge[v] = e;
          stack.push_back(v);
        }
    }
    std::vector<Mask> below(aug_nodes, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int u = *it;
      below[u] |= node_marks[u];
      if (parent_edge[u] >= 0) {
        down_mask[parent_edge[u]] = below[u];
        int p = aug_edges[parent_edge[u]].u == u ? aug_edges[parent_edge[u]].v
                                                 : aug_edges[parent_edge[u]].u;
        below[p] |= below[u];
      }
    }
  }

  std::vector<std::string> labels;
  for (const auto& [label, p] : marked) labels.push_back(label);
  GroundSet ground(std::move(labels));

  std::vector<Rat> lengths;
  for (const auto& e : aug_edges) lengths.push_back(e.length);
  auto eval = [down_mask, lengths](Mask a) {
    Rat total = 0;
    for (std::size_t e = 0; e < down_mask.size(); ++e) {
      Mask inside = a & down_mask[e];
      if (inside != 0 && inside != a) total += lengths[e];
    }
    return total;
  };

  if (ground.size() <= 16) {
    SetFunction table(ground);
    const Mask all = ground.all();
    for (Mask m = 1; m <= all && all != 0; ++m) {
      table.set(m, eval(m));
      if (m == all) break;
    }
    return FiniteDiversity::from_table(std::move(table));
  }
  return FiniteDiversity::from_function(std::move(ground), eval);
}

FiniteDiversity glue_diversities(const FiniteDiversity& left, const FiniteDiversity& right,
                                 const std::string& hub) {
  const int hl = left.ground().index(hub);
  const int hr = right.ground().index(hub);
  if (hl < 0 || hr < 0) throw std::invalid_argument("hub '" + hub + "' missing from a side");
  for (const auto& l : left.ground().labels())
    if (l != hub && right.ground().index(l) >= 0)
      throw std::invalid_argument("grounds overlap at '" + l + "' besides the hub");

  std::vector<std::string> labels = left.ground().labels();
  std::vector<int> right_of(right.ground().size(), -1);  // right index -> combined index
  right_of[hr] = hl;
  for (int i = 0; i < right.ground().size(); ++i) {
    if (i == hr) continue;
    right_of[i] = static_cast<int>(labels.size());
    labels.push_back(right.ground().label(i));
  }
  GroundSet ground(std::move(labels));

  const int nl = left.ground().size();
  const Mask hub_left = singleton(hl), hub_right = singleton(hr);
  auto split = [nl, right_of, nright = right.ground().size()](Mask a) {
    Mask l = a & full_mask(nl), r = 0;
    for (int i = 0; i < nright; ++i)
      if (contains(a, right_of[i])) r |= singleton(i);
    return std::make_pair(l, r);
  };
  auto eval = [left, right, split, hub_left, hub_right](Mask a) {
    auto [l, r] = split(a);
    if ((r & ~hub_right) == 0) return left.value(l);
    if ((l & ~hub_left) == 0) return right.value(r);
    return left.value(l | hub_left) + right.value(r | hub_right);
  };

  if (ground.size() <= 16) {
    SetFunction table(ground);
    const Mask all = ground.all();
    for (Mask m = 1; m <= all && all != 0; ++m) {
      table.set(m, eval(m));
      if (m == all) break;
    }
    return FiniteDiversity::from_table(std::move(table));
  }
  return FiniteDiversity::from_function(std::move(ground), eval);
}

FiniteDiversity counting_diversity(int n, std::vector<std::string> labels) {
  if (n < 1) throw std::invalid_argument("counting diversity needs n >= 1");
  if (labels.empty())
    for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  if (labels.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("label count must match n");
  GroundSet ground(std::move(labels));
  auto eval = [](Mask a) { return Rat(popcount(a) <= 1 ? 0 : popcount(a) - 1); };
  if (n <= 16) {
    SetFunction table(ground);
    const Mask all = ground.all();
    for (Mask m = 1; m <= all; ++m) {
      table.set(m, eval(m));
      if (m == all) break;
    }
    return FiniteDiversity::from_table(std::move(table));
  }
  return FiniteDiversity::from_function(std::move(ground), eval);
}

FiniteDiversity restrict(const FiniteDiversity& div, Mask s) {
  if (s == 0) throw std::invalid_argument("restriction to the empty set");
  std::vector<std::string> labels;
  std::vector<int> lift;  // sub index -> original index
  for_each_member(s, [&](int i) {
    labels.push_back(div.ground().label(i));
    lift.push_back(i);
  });
  GroundSet ground(std::move(labels));
  auto eval = [div, lift](Mask a) {
    Mask orig = 0;
    for_each_member(a, [&](int k) { orig |= singleton(lift[k]); });
    return div.value(orig);
  };
  if (ground.size() <= 16) {
    SetFunction table(ground);
    const Mask all = ground.all();
    for (Mask m = 1; m <= all && all != 0; ++m) {
      table.set(m, eval(m));
      if (m == all) break;
    }
    return FiniteDiversity::from_table(std::move(table));
  }
  return FiniteDiversity::from_function(std::move(ground), eval);
}

HypconReport hypcon_check(const FiniteDiversity& div) {
  const int n = div.size();
  const Mask all = div.ground().all();
  FiniteMetric metric = induced_metric(div);
  HypconReport rep;
  // pair_sum over masks by peeling the lowest member.
  std::vector<Rat> pair_sum(std::size_t{1} << n, Rat(0));
  for (Mask m = 1; m <= all && all != 0; ++m) {
    if (popcount(m) < 2) continue;
    int i = lowest_bit(m);
    Mask rest = m & (m - 1);
    Rat s = pair_sum[rest];
    for_each_member(rest, [&](int j) { s += metric.dist(i, j); });
    pair_sum[m] = s;
    Rat lhs = Rat(popcount(m) - 1) * div.value(m);
    if (lhs > s) rep.violations.push_back({m, lhs, s});
    if (m == all) break;
  }
  return rep;
}

StarSwapGadget star_swap_gadget(int grid_k) {
  if (grid_k < 1) throw std::invalid_argument("grid must be at least 1");
  const char legs[6] = {'a', 'b', 'c', 'd', 'e', 'f'};
  std::vector<std::string> nodes{"theta"};
  std::vector<MetricTree::Edge> edges;
  for (int l = 0; l < 6; ++l) {
    nodes.push_back(std::string(1, legs[l]));
    edges.push_back({0, l + 1, Rat(1)});
  }
  MetricTree star(nodes, edges);

  auto leg_marks = [&](int l) {
    std::vector<std::pair<std::string, TreePoint>> marks;
    for (int j = 1; j <= grid_k; ++j) {
      std::string label(1, legs[l]);
      if (j < grid_k) label += std::to_string(j);
      marks.push_back({label, TreePoint{l, Rat(j, grid_k)}});
    }
    return marks;
  };

  std::vector<std::pair<std::string, TreePoint>> left_marks{{"theta", TreePoint{0, Rat(0)}}};
  for (int l = 0; l < 3; ++l)
    for (auto& m : leg_marks(l)) left_marks.push_back(m);
  std::vector<std::pair<std::string, TreePoint>> right_marks{{"theta", TreePoint{0, Rat(0)}}};
  for (int l = 3; l < 6; ++l)
    for (auto& m : leg_marks(l)) right_marks.push_back(m);

  auto metric_of = [&](const std::vector<std::pair<std::string, TreePoint>>& marks) {
    std::vector<std::string> labels;
    for (const auto& [label, p] : marks) labels.push_back(label);
    const int n = static_cast<int>(marks.size());
    std::vector<Rat> d(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Rat v = tree_point_distance(star, marks[i].second, marks[j].second);
        d[static_cast<std::size_t>(i) * n + j] = v;
        d[static_cast<std::size_t>(j) * n + i] = v;
      }
    return FiniteMetric(GroundSet(std::move(labels)), std::move(d));
  };

  FiniteDiversity left = diameter_diversity(metric_of(left_marks));
  FiniteDiversity right = tree_diversity(star, right_marks);
  FiniteDiversity glued = glue_diversities(left, right, "theta");

  const GroundSet& ground = glued.ground();
  std::vector<int> image(ground.size());
  auto partner = [&](const std::string& label) {
    if (label == "theta") return label;
    std::string out = label;
    char c = out[0];
    out[0] = c <= 'c' ? static_cast<char>(c + 3) : static_cast<char>(c - 3);
    return out;
  };
  for (int i = 0; i < ground.size(); ++i) {
    int t = ground.index(partner(ground.label(i)));
    if (t < 0) throw std::logic_error("swap partner missing");
    image[i] = t;
  }
  SelfMap swap(ground, std::move(image));
  return StarSwapGadget{std::move(glued), std::move(swap), grid_k};
}

}  // namespace divlab
