#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ged/instance.hpp"
#include "ged/node_map.hpp"

namespace ged {

/// A node map with an explicit processing order of its assignments. The
/// order may contain (ε,ε) placeholders created by exchanging the targets of
/// a deletion and an insertion; they keep the sequence length fixed.
class OrderedNodeMap {
 public:
  /// `map` must have its cost cached; `order` must list each assignment of
  /// `map` exactly once, plus any number of (ε,ε) entries.
  OrderedNodeMap(NodeMap map, std::vector<Assignment> order);

  std::span<const Assignment> order() const noexcept { return order_; }
  std::size_t size() const noexcept { return order_.size(); }
  const NodeMap& map() const noexcept { return map_; }
  double cost() const { return map_.cost(); }

 private:
  friend OrderedNodeMap ordered_swap(const GedInstance&, const OrderedNodeMap&, std::size_t, std::size_t);
  OrderedNodeMap() = default;

  NodeMap map_;
  std::vector<Assignment> order_;
};

/// Exchanges the targets at zero-based positions s <= s_prime; the cost is
/// updated through the localized swap delta.
OrderedNodeMap ordered_swap(const GedInstance& instance, const OrderedNodeMap& node, std::size_t s,
                            std::size_t s_prime);

/// Beam search over the tree of ordered swaps, starting from `map` under a
/// random ordering drawn from `ordering_seed`.
NodeMap bp_beam(const GedInstance& instance, NodeMap map, std::size_t beam_width, std::uint64_t ordering_seed);

/// Runs bp_beam with `num_orderings` orderings seeded derive_seed(seed, i)
/// and returns the cheapest result (lowest index on ties). `workers` > 1
/// spreads the orderings over threads without changing the result.
NodeMap ibp_beam(const GedInstance& instance, const NodeMap& map, std::size_t beam_width,
                 std::size_t num_orderings, std::uint64_t seed, std::size_t workers = 1);

}  // namespace ged
