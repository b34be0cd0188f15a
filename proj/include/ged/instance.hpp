#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ged/edit_costs.hpp"
#include "ged/graph.hpp"
#include "ged/node_map.hpp"

namespace ged {

/// Edge label interned into a pair-local alphabet.
using EdgeLabelId = std::int32_t;
inline constexpr EdgeLabelId kNoEdge = -1;

struct LabeledNeighbor {
  NodeId node;
  EdgeLabelId label;
};

/// A source/target graph pair together with all edit costs evaluated once
/// up front. Every search algorithm works on this view. The referenced
/// graphs must outlive the instance; the instance itself is immutable and
/// may be shared between threads.
class GedInstance {
 public:
  GedInstance(const LabeledGraph& source, const LabeledGraph& target, const EditCostModel& costs);

  const LabeledGraph& source() const noexcept { return *source_; }
  const LabeledGraph& target() const noexcept { return *target_; }
  std::size_t source_size() const noexcept { return n_; }
  std::size_t target_size() const noexcept { return m_; }

  /// Cost of assignment (u,v); either side may be kDummy. (ε,ε) costs 0.
  double node_cost(NodeId u, NodeId v) const noexcept {
    const std::size_t row = u == kDummy ? n_ : u;
    const std::size_t col = v == kDummy ? m_ : v;
    return node_costs_[row * (m_ + 1) + col];
  }

  EdgeLabelId source_edge(NodeId a, NodeId b) const noexcept { return source_edges_[a * n_ + b]; }
  EdgeLabelId target_edge(NodeId a, NodeId b) const noexcept { return target_edges_[a * m_ + b]; }

  double edge_sub(EdgeLabelId a, EdgeLabelId b) const noexcept { return edge_sub_[a * alphabet_ + b]; }
  double edge_del(EdgeLabelId a) const noexcept { return edge_del_[a]; }
  double edge_ins(EdgeLabelId b) const noexcept { return edge_ins_[b]; }

  std::span<const LabeledNeighbor> source_neighbors(NodeId u) const noexcept {
    return {source_adj_.data() + source_offsets_[u], source_adj_.data() + source_offsets_[u + 1]};
  }
  std::span<const LabeledNeighbor> target_neighbors(NodeId v) const noexcept {
    return {target_adj_.data() + target_offsets_[v], target_adj_.data() + target_offsets_[v + 1]};
  }

 private:
  const LabeledGraph* source_;
  const LabeledGraph* target_;
  std::size_t n_;
  std::size_t m_;
  std::size_t alphabet_ = 0;
  std::vector<double> node_costs_;
  std::vector<EdgeLabelId> source_edges_;
  std::vector<EdgeLabelId> target_edges_;
  std::vector<double> edge_sub_;
  std::vector<double> edge_del_;
  std::vector<double> edge_ins_;
  std::vector<std::size_t> source_offsets_;
  std::vector<LabeledNeighbor> source_adj_;
  std::vector<std::size_t> target_offsets_;
  std::vector<LabeledNeighbor> target_adj_;
};

/// Cost of the edit path induced by `map`. Throws StructuralError when the
/// map does not fit the instance. Does not touch the map's cache.
double compute_induced_cost(const GedInstance& instance, const NodeMap& map);

/// Same as compute_induced_cost, and stores the value in map's cache.
double induced_cost(const GedInstance& instance, NodeMap& map);
double induced_cost(const LabeledGraph& g, const LabeledGraph& h, NodeMap& map, const EditCostModel& costs);

/// True iff `map` is a valid node map between graphs of the given sizes.
bool validate_node_map(std::size_t source_size, std::size_t target_size, const NodeMap& map);
bool validate_node_map(const LabeledGraph& g, const LabeledGraph& h, const NodeMap& map);

/// Relabels node i of g as permutation[i]. Returns the permuted copy and
/// the witness isomorphism (u_i -> v_{permutation[i]}).
std::pair<LabeledGraph, NodeMap> permute_graph(const LabeledGraph& g, std::span<const NodeId> permutation);

}  // namespace ged
