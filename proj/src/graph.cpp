#include "ged/graph.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "ged/errors.hpp"

namespace ged {

NodeId LabeledGraph::add_node(Label label) {
  labels_.push_back(std::move(label));
  adjacency_.emplace_back();
  return static_cast<NodeId>(labels_.size() - 1);
}

std::size_t LabeledGraph::add_edge(NodeId a, NodeId b, Label label) {
  if (a >= num_nodes() || b >= num_nodes()) {
    throw StructuralError("edge endpoint out of range in graph '" + id_ + "'");
  }
  if (a == b) throw StructuralError("self-loop on node " + std::to_string(a + 1));
  if (has_edge(a, b)) {
    throw StructuralError("duplicate edge " + std::to_string(a + 1) + "-" + std::to_string(b + 1));
  }
  const std::size_t index = edges_.size();
  edges_.push_back(Edge{a, b, std::move(label)});
  adjacency_[a].push_back(Incidence{b, index});
  adjacency_[b].push_back(Incidence{a, index});
  return index;
}

std::optional<std::size_t> LabeledGraph::find_edge(NodeId a, NodeId b) const {
  if (a >= num_nodes() || b >= num_nodes()) return std::nullopt;
  const auto& shorter = adjacency_[a].size() <= adjacency_[b].size() ? adjacency_[a] : adjacency_[b];
  const NodeId other = adjacency_[a].size() <= adjacency_[b].size() ? b : a;
  for (const Incidence& inc : shorter) {
    if (inc.neighbor == other) return inc.edge;
  }
  return std::nullopt;
}

std::size_t LabeledGraph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return best;
}

bool LabeledGraph::is_consistent() const {
  std::set<std::pair<NodeId, NodeId>> seen;
  std::vector<std::size_t> degree(num_nodes(), 0);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if (edge.first >= num_nodes() || edge.second >= num_nodes() || edge.first == edge.second) return false;
    if (!seen.insert(std::minmax(edge.first, edge.second)).second) return false;
    ++degree[edge.first];
    ++degree[edge.second];
    auto contains = [&](NodeId u, NodeId v) {
      return std::any_of(adjacency_[u].begin(), adjacency_[u].end(),
                         [&](const Incidence& inc) { return inc.neighbor == v && inc.edge == e; });
    };
    if (!contains(edge.first, edge.second) || !contains(edge.second, edge.first)) return false;
  }
  for (NodeId u = 0; u < num_nodes(); ++u) {
    if (adjacency_[u].size() != degree[u]) return false;
  }
  return true;
}

bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.id() != b.id() || a.num_nodes() != b.num_nodes() || a.num_edges() != b.num_edges()) return false;
  for (NodeId u = 0; u < a.num_nodes(); ++u) {
    if (a.node_label(u) != b.node_label(u)) return false;
  }
  for (const Edge& e : a.edges()) {
    auto other = b.find_edge(e.first, e.second);
    if (!other || b.edges()[*other].label != e.label) return false;
  }
  return true;
}

}  // namespace ged
