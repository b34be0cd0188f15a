#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "ged/edit_costs.hpp"
#include "ged/graph.hpp"
#include "ged/node_map.hpp"
#include "ged/rng.hpp"
#include "ged/synthetic.hpp"

namespace ged::testing {

/// Induced cost summed straight from the graphs, without GedInstance.
inline double reference_cost(const LabeledGraph& g, const LabeledGraph& h, const NodeMap& map,
                             const EditCostModel& costs) {
  double total = 0.0;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    const NodeId v = map.image(u);
    total += v == kDummy ? costs.node_del(g.node_label(u)) : costs.node_sub(g.node_label(u), h.node_label(v));
  }
  for (NodeId v = 0; v < h.num_nodes(); ++v) {
    if (map.preimage(v) == kDummy) total += costs.node_ins(h.node_label(v));
  }
  for (const Edge& e : g.edges()) {
    const NodeId a = map.image(e.first);
    const NodeId b = map.image(e.second);
    const auto image = (a != kDummy && b != kDummy) ? h.find_edge(a, b) : std::nullopt;
    total += image ? costs.edge_sub(e.label, h.edges()[*image].label) : costs.edge_del(e.label);
  }
  for (const Edge& e : h.edges()) {
    const NodeId a = map.preimage(e.first);
    const NodeId b = map.preimage(e.second);
    const bool preserved = a != kDummy && b != kDummy && g.has_edge(a, b);
    if (!preserved) total += costs.edge_ins(e.label);
  }
  return total;
}

/// Every node map as a forward array: each source picks a free target or
/// deletion.
inline void reference_node_maps(std::size_t n, std::size_t m, const std::function<void(const NodeMap&)>& visit) {
  std::vector<NodeId> forward(n, kDummy);
  std::vector<bool> used(m, false);
  std::function<void(std::size_t)> recurse = [&](std::size_t u) {
    if (u == n) {
      std::vector<NodeId> backward(m, kDummy);
      for (std::size_t i = 0; i < n; ++i) {
        if (forward[i] != kDummy) backward[forward[i]] = static_cast<NodeId>(i);
      }
      visit(NodeMap::from_arrays(forward, backward));
      return;
    }
    forward[u] = kDummy;
    recurse(u + 1);
    for (NodeId v = 0; v < m; ++v) {
      if (used[v]) continue;
      used[v] = true;
      forward[u] = v;
      recurse(u + 1);
      used[v] = false;
    }
    forward[u] = kDummy;
  };
  recurse(0);
}

inline double reference_ged(const LabeledGraph& g, const LabeledGraph& h, const EditCostModel& costs) {
  double best = std::numeric_limits<double>::infinity();
  reference_node_maps(g.num_nodes(), h.num_nodes(),
                      [&](const NodeMap& map) { best = std::min(best, reference_cost(g, h, map, costs)); });
  return best;
}

/// Uniformly random node map with a random number of substitutions.
inline NodeMap random_node_map(std::size_t n, std::size_t m, Rng& rng) {
  std::vector<NodeId> sources(n);
  std::vector<NodeId> targets(m);
  for (NodeId i = 0; i < n; ++i) sources[i] = i;
  for (NodeId k = 0; k < m; ++k) targets[k] = k;
  rng.shuffle(std::span<NodeId>(sources));
  rng.shuffle(std::span<NodeId>(targets));
  const std::size_t subs = rng.uniform_index(std::min(n, m) + 1);
  NodeMap map(n, m);
  for (std::size_t i = 0; i < subs; ++i) map.assign(sources[i], targets[i]);
  return map;
}

inline LabeledGraph random_graph(std::size_t nodes, double density, std::size_t labels, std::uint64_t seed,
                                 std::size_t edge_labels = 2) {
  return generate_synthetic(nodes, density, labels, seed, edge_labels, "r" + std::to_string(seed));
}

inline LabeledGraph make_graph(const std::string& id, std::vector<std::string> labels,
                               std::vector<std::tuple<NodeId, NodeId, std::string>> edges) {
  LabeledGraph g(id);
  for (auto& l : labels) g.add_node(std::move(l));
  for (auto& [a, b, l] : edges) g.add_edge(a, b, l);
  return g;
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace ged::testing
