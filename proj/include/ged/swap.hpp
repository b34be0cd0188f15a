#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "ged/instance.hpp"
#include "ged/node_map.hpp"

namespace ged {

/// A directed cycle over K' >= 2 distinct assignments of a node map, kept in
/// canonical rotation (smallest assignment first). Applying it hands the
/// target of assignment i to the source of assignment i+1.
class SwapCycle {
 public:
  SwapCycle() = default;
  /// Rotates `assignments` into canonical form. Throws StructuralError for
  /// fewer than two or repeated assignments.
  explicit SwapCycle(std::vector<Assignment> assignments);

  std::size_t size() const noexcept { return forward_.size(); }
  /// F(C): the assignments removed by the swap, in cycle order.
  std::span<const Assignment> forward_set() const noexcept { return forward_; }
  /// B(C): (source(a_{i+1}), target(a_i)) for every i, cyclically.
  std::vector<Assignment> backward_set() const;

  friend bool operator==(const SwapCycle&, const SwapCycle&) = default;

 private:
  std::vector<Assignment> forward_;
};

/// B(C) for a raw cycle in cycle order.
std::vector<Assignment> backward_set(std::span<const Assignment> cycle);

/// Calls `visit(std::span<const Assignment>)` for every K'-cycle over
/// `assignments` (which must be sorted and distinct). Cycles are produced
/// in canonical form: subsets in lexicographic index order, then the
/// remaining K'-1 members in lexicographic permutation order behind the
/// fixed smallest one. Yields C(|π|,K')·(K'-1)! cycles, none if K' > |π|.
template <typename Visitor>
void for_each_swap(std::span<const Assignment> assignments, std::size_t k_prime, Visitor&& visit) {
  const std::size_t total = assignments.size();
  if (k_prime < 2 || k_prime > total) return;
  std::vector<std::size_t> subset(k_prime);
  std::iota(subset.begin(), subset.end(), std::size_t{0});
  std::vector<std::size_t> tail(k_prime - 1);
  std::vector<Assignment> cycle(k_prime);
  while (true) {
    std::copy(subset.begin() + 1, subset.end(), tail.begin());
    do {
      cycle[0] = assignments[subset[0]];
      for (std::size_t i = 0; i < tail.size(); ++i) cycle[i + 1] = assignments[tail[i]];
      visit(std::span<const Assignment>(cycle));
    } while (std::next_permutation(tail.begin(), tail.end()));
    // Advance to the next k-combination.
    std::size_t i = k_prime;
    while (i > 0 && subset[i - 1] == total - k_prime + (i - 1)) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::size_t j = i; j < k_prime; ++j) subset[j] = subset[j - 1] + 1;
  }
}

/// All K'-swaps of `map` in canonical enumeration order.
std::vector<SwapCycle> enumerate_swaps(const NodeMap& map, std::size_t k_prime);

/// SWAP(π, C). The result drops any (ε,ε) produced by the rotation and has
/// its dummy flag cleared. Throws StructuralError if some assignment of the
/// cycle is not in `map`.
NodeMap swap_apply(const NodeMap& map, const SwapCycle& cycle);
NodeMap swap_apply(const NodeMap& map, std::span<const Assignment> cycle);
/// In-place variant without membership checks; used on hot paths.
void swap_apply_in_place(NodeMap& map, std::span<const Assignment> cycle);

/// Evaluates swap costs c(SWAP(π,C)) - c(π) by restricting the cost sum to
/// the nodes touched by the cycle and their incident edges. Holds scratch
/// buffers, so one evaluator per thread.
class SwapEvaluator {
 public:
  explicit SwapEvaluator(const GedInstance& instance);

  /// `cycle` must consist of assignments of `map` in cycle order.
  double delta(const NodeMap& map, std::span<const Assignment> cycle);

 private:
  const GedInstance* instance_;
  std::vector<NodeId> sources_;  // V^G_C
  std::vector<NodeId> targets_;  // V^H_C
  // Swapped images of the touched nodes, valid where the stamp equals epoch_.
  std::vector<NodeId> new_image_;
  std::vector<NodeId> new_preimage_;
  std::vector<std::uint32_t> source_stamp_;
  std::vector<std::uint32_t> target_stamp_;
  std::uint32_t epoch_ = 0;
};

/// Localized swap cost; requires map.cached_cost() for interface parity
/// with the naive route.
double swap_cost_localized(const GedInstance& instance, const NodeMap& map, const SwapCycle& cycle);
/// Swap cost by full recomputation of the swapped map's induced cost.
double swap_cost_naive(const GedInstance& instance, const NodeMap& map, const SwapCycle& cycle);
double swap_cost_naive(const GedInstance& instance, const NodeMap& map, std::span<const Assignment> cycle);

}  // namespace ged
