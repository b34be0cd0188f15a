#include "ged/beam.hpp"

#include <algorithm>

#include "ged/errors.hpp"
#include "ged/parallel.hpp"
#include "ged/rng.hpp"
#include "ged/swap.hpp"

namespace ged {

OrderedNodeMap::OrderedNodeMap(NodeMap map, std::vector<Assignment> order)
    : map_(std::move(map)), order_(std::move(order)) {
  if (!map_.cached_cost()) throw StructuralError("ordered node map needs a cached cost");
  std::vector<Assignment> expected = map_.assignments();
  std::vector<Assignment> given;
  for (const Assignment& a : order_) {
    if (!a.is_dummy_pair()) given.push_back(a);
  }
  std::erase_if(expected, [](const Assignment& a) { return a.is_dummy_pair(); });
  std::sort(given.begin(), given.end());
  if (given != expected) throw StructuralError("ordering is not a permutation of the node map's assignments");
}

OrderedNodeMap ordered_swap(const GedInstance& instance, const OrderedNodeMap& node, std::size_t s,
                            std::size_t s_prime) {
  if (s > s_prime || s_prime >= node.size()) throw ParameterError("ordered swap positions out of range");
  OrderedNodeMap child = node;
  if (s == s_prime) return child;
  const Assignment a = node.order_[s];
  const Assignment b = node.order_[s_prime];
  if (a.target == b.target) return child;  // also covers two (ε,ε) placeholders
  const Assignment cycle[2] = {a, b};
  SwapEvaluator evaluator(instance);
  const double delta = evaluator.delta(node.map_, cycle);
  swap_apply_in_place(child.map_, cycle);
  child.map_.set_cost(node.cost() + delta);
  child.order_[s].target = b.target;
  child.order_[s_prime].target = a.target;
  return child;
}

NodeMap bp_beam(const GedInstance& instance, NodeMap map, std::size_t beam_width, std::uint64_t ordering_seed) {
  if (beam_width < 1) throw ParameterError("beam width must be at least 1");
  map.set_dummy_pair(false);
  if (!map.cached_cost()) induced_cost(instance, map);

  std::vector<Assignment> order = map.assignments();
  Rng rng(ordering_seed);
  rng.shuffle(std::span<Assignment>(order));
  const std::size_t depth_limit = order.size();

  struct TreeNode {
    OrderedNodeMap node;
    std::size_t depth;
    std::uint64_t sequence;
  };
  auto cheaper = [](const TreeNode& a, const TreeNode& b) {
    if (a.node.cost() != b.node.cost()) return a.node.cost() < b.node.cost();
    return a.sequence < b.sequence;
  };

  NodeMap best = map;
  std::uint64_t sequence = 0;
  std::vector<TreeNode> queue;
  queue.push_back(TreeNode{OrderedNodeMap(std::move(map), std::move(order)), 0, sequence++});
  while (!queue.empty()) {
    TreeNode top = std::move(queue.front());
    queue.erase(queue.begin());
    if (top.node.cost() < best.cost()) best = top.node.map();
    if (top.depth + 1 >= depth_limit) continue;  // leaf
    for (std::size_t s_prime = top.depth; s_prime < depth_limit; ++s_prime) {
      queue.push_back(TreeNode{ordered_swap(instance, top.node, top.depth, s_prime), top.depth + 1, sequence++});
    }
    std::sort(queue.begin(), queue.end(), cheaper);
    if (queue.size() > beam_width) queue.erase(queue.begin() + static_cast<std::ptrdiff_t>(beam_width), queue.end());
  }
  return best;
}

NodeMap ibp_beam(const GedInstance& instance, const NodeMap& map, std::size_t beam_width,
                 std::size_t num_orderings, std::uint64_t seed, std::size_t workers) {
  if (num_orderings < 1) throw ParameterError("IBP-BEAM needs at least one ordering");
  std::vector<NodeMap> results(num_orderings);
  parallel_for(num_orderings, workers, [&](std::size_t i) {
    results[i] = bp_beam(instance, map, beam_width, derive_seed(seed, i));
    return true;
  });
  std::size_t best = 0;
  for (std::size_t i = 1; i < num_orderings; ++i) {
    if (results[i].cost() < results[best].cost()) best = i;
  }
  return results[best];
}

}  // namespace ged
