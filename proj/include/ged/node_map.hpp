#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ged/graph.hpp"

namespace ged {

/// One element of a node map: substitution (u,v), deletion (u,ε),
/// insertion (ε,v) or the no-op dummy pair (ε,ε).
struct Assignment {
  NodeId source = kDummy;
  NodeId target = kDummy;

  bool is_substitution() const noexcept { return source != kDummy && target != kDummy; }
  bool is_deletion() const noexcept { return source != kDummy && target == kDummy; }
  bool is_insertion() const noexcept { return source == kDummy && target != kDummy; }
  bool is_dummy_pair() const noexcept { return source == kDummy && target == kDummy; }

  friend auto operator<=>(const Assignment&, const Assignment&) = default;
};

std::string to_string(const Assignment& a);

/// Complete node map between a source graph with n nodes and a target
/// graph with m nodes. Stored as forward/backward arrays; the dummy pair
/// (ε,ε) is a flag so array shapes never change.
class NodeMap {
 public:
  NodeMap() = default;
  /// All source nodes deleted, all target nodes inserted.
  NodeMap(std::size_t source_size, std::size_t target_size);

  /// Wraps raw arrays without checking them; see validate_node_map.
  static NodeMap from_arrays(std::vector<NodeId> forward, std::vector<NodeId> backward,
                             bool dummy_pair = false);
  /// Builds a map from an assignment list; throws StructuralError when a
  /// node is covered twice. Uncovered nodes become deletions/insertions.
  static NodeMap from_assignments(std::size_t source_size, std::size_t target_size,
                                  std::span<const Assignment> assignments);
  /// Substitutes u_i -> v_i for i < min(n, m).
  static NodeMap identity(std::size_t source_size, std::size_t target_size);

  std::size_t source_size() const noexcept { return forward_.size(); }
  std::size_t target_size() const noexcept { return backward_.size(); }

  NodeId image(NodeId u) const { return forward_[u]; }
  NodeId preimage(NodeId v) const { return backward_[v]; }
  std::span<const NodeId> forward() const noexcept { return forward_; }
  std::span<const NodeId> backward() const noexcept { return backward_; }

  /// Substitutes u -> v; former partners of u and v become deleted/inserted.
  void assign(NodeId u, NodeId v);
  void unassign_source(NodeId u);
  void unassign_target(NodeId v);

  bool has_dummy_pair() const noexcept { return dummy_pair_; }
  void set_dummy_pair(bool present) noexcept { dummy_pair_ = present; }

  bool contains(const Assignment& a) const;

  /// Assignments in ascending order (dummy entries last), including (ε,ε)
  /// when the flag is set.
  std::vector<Assignment> assignments() const;
  void assignments(std::vector<Assignment>& out) const;
  /// |π|: number of assignments including the dummy pair.
  std::size_t size() const noexcept;
  std::size_t substitutions() const noexcept;

  const std::optional<double>& cached_cost() const noexcept { return cached_cost_; }
  double cost() const;  // throws StructuralError when unset
  void set_cost(double cost) noexcept { cached_cost_ = cost; }
  void clear_cost() noexcept { cached_cost_.reset(); }

  /// Compact serialization of the assignment set ("1>3 2>- ...", one-based).
  std::string key() const;

  /// Equality of the assignment sets; cached costs are ignored.
  friend bool operator==(const NodeMap& a, const NodeMap& b) {
    return a.forward_ == b.forward_ && a.backward_ == b.backward_ && a.dummy_pair_ == b.dummy_pair_;
  }

 private:
  std::vector<NodeId> forward_;
  std::vector<NodeId> backward_;
  bool dummy_pair_ = false;
  std::optional<double> cached_cost_;
};

}  // namespace ged
