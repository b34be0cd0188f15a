#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ged {

/// Node position inside a graph. Zero-based in memory; file formats are
/// one-based.
using NodeId = std::uint32_t;

/// Sentinel standing for the dummy node. Compares greater than every real
/// node, so sorted assignment lists put dummy entries last.
inline constexpr NodeId kDummy = std::numeric_limits<NodeId>::max();

/// Opaque label token, compared by equality only.
using Label = std::string;

struct Edge {
  NodeId first;
  NodeId second;
  Label label;
};

struct Incidence {
  NodeId neighbor;
  std::size_t edge;  // index into LabeledGraph::edges()
};

/// Simple undirected graph with labelled nodes and edges. Self-loops and
/// parallel edges are rejected on insertion.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(std::string id) : id_(std::move(id)) {}

  const std::string& id() const noexcept { return id_; }
  void set_id(std::string id) { id_ = std::move(id); }

  NodeId add_node(Label label);
  /// Throws StructuralError on invalid endpoints, self-loops and duplicates.
  std::size_t add_edge(NodeId a, NodeId b, Label label);

  std::size_t num_nodes() const noexcept { return labels_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  const Label& node_label(NodeId u) const { return labels_.at(u); }
  std::span<const Label> node_labels() const noexcept { return labels_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Incidence> neighbors(NodeId u) const { return adjacency_.at(u); }

  std::optional<std::size_t> find_edge(NodeId a, NodeId b) const;
  bool has_edge(NodeId a, NodeId b) const { return find_edge(a, b).has_value(); }

  std::size_t max_degree() const noexcept;

  /// Checks that adjacency mirrors the edge set exactly.
  bool is_consistent() const;

 private:
  std::string id_;
  std::vector<Label> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

bool operator==(const LabeledGraph& a, const LabeledGraph& b);

}  // namespace ged
