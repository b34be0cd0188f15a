#include "ged/swap.hpp"

#include <algorithm>
#include <set>

#include "ged/errors.hpp"

namespace ged {

SwapCycle::SwapCycle(std::vector<Assignment> assignments) : forward_(std::move(assignments)) {
  if (forward_.size() < 2) throw StructuralError("a swap cycle needs at least two assignments");
  std::set<Assignment> unique(forward_.begin(), forward_.end());
  if (unique.size() != forward_.size()) throw StructuralError("swap cycle repeats an assignment");
  std::rotate(forward_.begin(), std::min_element(forward_.begin(), forward_.end()), forward_.end());
}

std::vector<Assignment> backward_set(std::span<const Assignment> cycle) {
  const std::size_t k = cycle.size();
  std::vector<Assignment> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = Assignment{cycle[(i + 1) % k].source, cycle[i].target};
  return out;
}

std::vector<Assignment> SwapCycle::backward_set() const { return ged::backward_set(forward_); }

std::vector<SwapCycle> enumerate_swaps(const NodeMap& map, std::size_t k_prime) {
  const std::vector<Assignment> assignments = map.assignments();
  std::vector<SwapCycle> out;
  for_each_swap(assignments, k_prime, [&](std::span<const Assignment> cycle) {
    out.emplace_back(std::vector<Assignment>(cycle.begin(), cycle.end()));
  });
  return out;
}

void swap_apply_in_place(NodeMap& map, std::span<const Assignment> cycle) {
  for (const Assignment& a : cycle) {
    if (a.source != kDummy) map.unassign_source(a.source);
    if (a.target != kDummy) map.unassign_target(a.target);
  }
  const std::size_t k = cycle.size();
  for (std::size_t i = 0; i < k; ++i) {
    const NodeId source = cycle[(i + 1) % k].source;
    const NodeId target = cycle[i].target;
    if (source != kDummy && target != kDummy) map.assign(source, target);
  }
  map.set_dummy_pair(false);
  map.clear_cost();
}

NodeMap swap_apply(const NodeMap& map, std::span<const Assignment> cycle) {
  if (cycle.size() < 2) throw StructuralError("a swap cycle needs at least two assignments");
  std::set<Assignment> unique(cycle.begin(), cycle.end());
  if (unique.size() != cycle.size()) throw StructuralError("swap cycle repeats an assignment");
  for (const Assignment& a : cycle) {
    if (!map.contains(a)) throw StructuralError("swap cycle references " + to_string(a) + " which is not in the map");
  }
  NodeMap out = map;
  swap_apply_in_place(out, cycle);
  return out;
}

NodeMap swap_apply(const NodeMap& map, const SwapCycle& cycle) { return swap_apply(map, cycle.forward_set()); }

SwapEvaluator::SwapEvaluator(const GedInstance& instance)
    : instance_(&instance),
      new_image_(instance.source_size(), kDummy),
      new_preimage_(instance.target_size(), kDummy),
      source_stamp_(instance.source_size(), 0),
      target_stamp_(instance.target_size(), 0) {}

double SwapEvaluator::delta(const NodeMap& map, std::span<const Assignment> cycle) {
  const GedInstance& inst = *instance_;
  if (++epoch_ == 0) {
    std::fill(source_stamp_.begin(), source_stamp_.end(), 0);
    std::fill(target_stamp_.begin(), target_stamp_.end(), 0);
    epoch_ = 1;
  }
  // B(C): src(a_{i+1}) takes tgt(a_i)
  const std::size_t k = cycle.size();
  sources_.clear();
  targets_.clear();
  for (std::size_t i = 0; i < k; ++i) {
    const Assignment& a = cycle[i];
    if (a.source != kDummy) {
      sources_.push_back(a.source);
      source_stamp_[a.source] = epoch_;
      new_image_[a.source] = cycle[(i + k - 1) % k].target;
    }
    if (a.target != kDummy) {
      targets_.push_back(a.target);
      target_stamp_[a.target] = epoch_;
      new_preimage_[a.target] = cycle[(i + 1) % k].source;
    }
  }

  auto source_edge_cost = [&](EdgeLabelId label, NodeId a, NodeId b) {
    const EdgeLabelId image = (a != kDummy && b != kDummy) ? inst.target_edge(a, b) : kNoEdge;
    return image != kNoEdge ? inst.edge_sub(label, image) : inst.edge_del(label);
  };
  auto target_edge_cost = [&](EdgeLabelId label, NodeId a, NodeId b) {
    const bool preserved = a != kDummy && b != kDummy && inst.source_edge(a, b) != kNoEdge;
    return preserved ? 0.0 : inst.edge_ins(label);
  };

  // Edges with both ends touched are visited once, from the larger endpoint.
  double delta = 0.0;
  for (NodeId u : sources_) {
    const NodeId old_fu = map.image(u);
    const NodeId new_fu = new_image_[u];
    delta += inst.node_cost(u, new_fu) - inst.node_cost(u, old_fu);
    for (const LabeledNeighbor& nb : inst.source_neighbors(u)) {
      const bool touched = source_stamp_[nb.node] == epoch_;
      if (touched && nb.node < u) continue;
      const NodeId old_fw = map.image(nb.node);
      const NodeId new_fw = touched ? new_image_[nb.node] : old_fw;
      delta += source_edge_cost(nb.label, new_fu, new_fw) - source_edge_cost(nb.label, old_fu, old_fw);
    }
  }
  for (NodeId v : targets_) {
    const NodeId old_bv = map.preimage(v);
    const NodeId new_bv = new_preimage_[v];
    if (new_bv == kDummy) delta += inst.node_cost(kDummy, v);
    if (old_bv == kDummy) delta -= inst.node_cost(kDummy, v);
    for (const LabeledNeighbor& nb : inst.target_neighbors(v)) {
      const bool touched = target_stamp_[nb.node] == epoch_;
      if (touched && nb.node < v) continue;
      const NodeId old_bx = map.preimage(nb.node);
      const NodeId new_bx = touched ? new_preimage_[nb.node] : old_bx;
      delta += target_edge_cost(nb.label, new_bv, new_bx) - target_edge_cost(nb.label, old_bv, old_bx);
    }
  }
  return delta;
}

double swap_cost_localized(const GedInstance& instance, const NodeMap& map, const SwapCycle& cycle) {
  if (!map.cached_cost()) throw StructuralError("swap cost needs the node map's cached cost");
  for (const Assignment& a : cycle.forward_set()) {
    if (!map.contains(a)) throw StructuralError("swap cycle references " + to_string(a) + " which is not in the map");
  }
  SwapEvaluator evaluator(instance);
  return evaluator.delta(map, cycle.forward_set());
}

double swap_cost_naive(const GedInstance& instance, const NodeMap& map, std::span<const Assignment> cycle) {
  const double before = map.cached_cost() ? *map.cached_cost() : compute_induced_cost(instance, map);
  NodeMap swapped = map;
  swap_apply_in_place(swapped, cycle);
  return compute_induced_cost(instance, swapped) - before;
}

double swap_cost_naive(const GedInstance& instance, const NodeMap& map, const SwapCycle& cycle) {
  if (!map.cached_cost()) throw StructuralError("swap cost needs the node map's cached cost");
  for (const Assignment& a : cycle.forward_set()) {
    if (!map.contains(a)) throw StructuralError("swap cycle references " + to_string(a) + " which is not in the map");
  }
  return swap_cost_naive(instance, map, cycle.forward_set());
}

}  // namespace ged
