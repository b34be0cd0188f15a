#include "ged/instance.hpp"

#include <unordered_map>

#include "ged/errors.hpp"

namespace ged {

namespace {

void build_adjacency(const LabeledGraph& graph, const std::vector<EdgeLabelId>& edge_labels,
                     std::vector<std::size_t>& offsets, std::vector<LabeledNeighbor>& adj) {
  offsets.assign(graph.num_nodes() + 1, 0);
  adj.clear();
  adj.reserve(2 * graph.num_edges());
  for (NodeId u = 0; u < graph.num_nodes(); ++u) {
    offsets[u] = adj.size();
    for (const Incidence& inc : graph.neighbors(u)) adj.push_back({inc.neighbor, edge_labels[inc.edge]});
  }
  offsets[graph.num_nodes()] = adj.size();
}

}  // namespace

GedInstance::GedInstance(const LabeledGraph& source, const LabeledGraph& target, const EditCostModel& costs)
    : source_(&source), target_(&target), n_(source.num_nodes()), m_(target.num_nodes()) {
  node_costs_.assign((n_ + 1) * (m_ + 1), 0.0);
  for (NodeId u = 0; u < n_; ++u) {
    for (NodeId v = 0; v < m_; ++v) {
      node_costs_[u * (m_ + 1) + v] = costs.node_sub(source.node_label(u), target.node_label(v));
    }
    node_costs_[u * (m_ + 1) + m_] = costs.node_del(source.node_label(u));
  }
  for (NodeId v = 0; v < m_; ++v) node_costs_[n_ * (m_ + 1) + v] = costs.node_ins(target.node_label(v));

  std::unordered_map<Label, EdgeLabelId> ids;
  std::vector<const Label*> alphabet;
  auto intern = [&](const Label& label) {
    auto [it, inserted] = ids.try_emplace(label, static_cast<EdgeLabelId>(alphabet.size()));
    if (inserted) alphabet.push_back(&it->first);
    return it->second;
  };
  std::vector<EdgeLabelId> source_labels;
  for (const Edge& e : source.edges()) source_labels.push_back(intern(e.label));
  std::vector<EdgeLabelId> target_labels;
  for (const Edge& e : target.edges()) target_labels.push_back(intern(e.label));
  alphabet_ = alphabet.size();

  edge_sub_.assign(alphabet_ * alphabet_, 0.0);
  edge_del_.assign(alphabet_, 0.0);
  edge_ins_.assign(alphabet_, 0.0);
  // Only evaluate entries that can actually occur so sparse tables without
  // defaults still work.
  std::vector<bool> in_source(alphabet_, false);
  std::vector<bool> in_target(alphabet_, false);
  for (EdgeLabelId id : source_labels) in_source[id] = true;
  for (EdgeLabelId id : target_labels) in_target[id] = true;
  for (std::size_t a = 0; a < alphabet_; ++a) {
    if (in_source[a]) edge_del_[a] = costs.edge_del(*alphabet[a]);
    if (in_target[a]) edge_ins_[a] = costs.edge_ins(*alphabet[a]);
    if (!in_source[a]) continue;
    for (std::size_t b = 0; b < alphabet_; ++b) {
      if (in_target[b]) edge_sub_[a * alphabet_ + b] = costs.edge_sub(*alphabet[a], *alphabet[b]);
    }
  }

  source_edges_.assign(n_ * n_, kNoEdge);
  for (std::size_t e = 0; e < source.num_edges(); ++e) {
    const Edge& edge = source.edges()[e];
    source_edges_[edge.first * n_ + edge.second] = source_labels[e];
    source_edges_[edge.second * n_ + edge.first] = source_labels[e];
  }
  target_edges_.assign(m_ * m_, kNoEdge);
  for (std::size_t e = 0; e < target.num_edges(); ++e) {
    const Edge& edge = target.edges()[e];
    target_edges_[edge.first * m_ + edge.second] = target_labels[e];
    target_edges_[edge.second * m_ + edge.first] = target_labels[e];
  }
  build_adjacency(source, source_labels, source_offsets_, source_adj_);
  build_adjacency(target, target_labels, target_offsets_, target_adj_);
}

double compute_induced_cost(const GedInstance& instance, const NodeMap& map) {
  const std::size_t n = instance.source_size();
  const std::size_t m = instance.target_size();
  if (map.source_size() != n || map.target_size() != m) {
    throw StructuralError("node map shape does not match the graph pair");
  }
  double cost = 0.0;
  for (NodeId u = 0; u < n; ++u) cost += instance.node_cost(u, map.image(u));
  for (NodeId v = 0; v < m; ++v) {
    if (map.preimage(v) == kDummy) cost += instance.node_cost(kDummy, v);
  }
  for (const Edge& e : instance.source().edges()) {
    const EdgeLabelId label = instance.source_edge(e.first, e.second);
    const NodeId a = map.image(e.first);
    const NodeId b = map.image(e.second);
    const EdgeLabelId image = (a != kDummy && b != kDummy) ? instance.target_edge(a, b) : kNoEdge;
    cost += image != kNoEdge ? instance.edge_sub(label, image) : instance.edge_del(label);
  }
  for (const Edge& f : instance.target().edges()) {
    const NodeId a = map.preimage(f.first);
    const NodeId b = map.preimage(f.second);
    if (a == kDummy || b == kDummy || instance.source_edge(a, b) == kNoEdge) {
      cost += instance.edge_ins(instance.target_edge(f.first, f.second));
    }
  }
  return cost;
}

double induced_cost(const GedInstance& instance, NodeMap& map) {
  const double cost = compute_induced_cost(instance, map);
  map.set_cost(cost);
  return cost;
}

double induced_cost(const LabeledGraph& g, const LabeledGraph& h, NodeMap& map, const EditCostModel& costs) {
  const GedInstance instance(g, h, costs);
  return induced_cost(instance, map);
}

bool validate_node_map(std::size_t source_size, std::size_t target_size, const NodeMap& map) {
  if (map.source_size() != source_size || map.target_size() != target_size) return false;
  for (NodeId u = 0; u < source_size; ++u) {
    const NodeId v = map.image(u);
    if (v == kDummy) continue;
    if (v >= target_size || map.preimage(v) != u) return false;
  }
  for (NodeId v = 0; v < target_size; ++v) {
    const NodeId u = map.preimage(v);
    if (u == kDummy) continue;
    if (u >= source_size || map.image(u) != v) return false;
  }
  return true;
}

bool validate_node_map(const LabeledGraph& g, const LabeledGraph& h, const NodeMap& map) {
  return validate_node_map(g.num_nodes(), h.num_nodes(), map);
}

std::pair<LabeledGraph, NodeMap> permute_graph(const LabeledGraph& g, std::span<const NodeId> permutation) {
  const std::size_t n = g.num_nodes();
  if (permutation.size() != n) throw ParameterError("permutation size does not match graph size");
  std::vector<NodeId> inverse(n, kDummy);
  for (NodeId i = 0; i < n; ++i) {
    const NodeId p = permutation[i];
    if (p >= n || inverse[p] != kDummy) throw ParameterError("permutation is not a bijection");
    inverse[p] = i;
  }
  LabeledGraph permuted(g.id());
  for (NodeId k = 0; k < n; ++k) permuted.add_node(g.node_label(inverse[k]));
  for (const Edge& e : g.edges()) permuted.add_edge(permutation[e.first], permutation[e.second], e.label);
  NodeMap witness(n, n);
  for (NodeId i = 0; i < n; ++i) witness.assign(i, permutation[i]);
  return {std::move(permuted), std::move(witness)};
}

}  // namespace ged
