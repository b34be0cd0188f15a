#include "ged/exact.hpp"

#include "ged/errors.hpp"

namespace ged {

namespace {

void enumerate(NodeId row, NodeMap& current, const std::function<void(const NodeMap&)>& visit) {
  if (row == current.source_size()) {
    visit(current);
    return;
  }
  for (NodeId k = 0; k < current.target_size(); ++k) {
    if (current.preimage(k) != kDummy) continue;
    current.assign(row, k);
    enumerate(row + 1, current, visit);
    current.unassign_source(row);
  }
  enumerate(row + 1, current, visit);
}

}  // namespace

void for_each_node_map(std::size_t source_size, std::size_t target_size,
                       const std::function<void(const NodeMap&)>& visit) {
  if (source_size + target_size > kExactSizeLimit) {
    throw SizeGuardError("exhaustive enumeration limited to " + std::to_string(kExactSizeLimit) + " nodes in total");
  }
  NodeMap current(source_size, target_size);
  enumerate(0, current, visit);
}

std::vector<NodeMap> enumerate_node_maps(std::size_t source_size, std::size_t target_size) {
  std::vector<NodeMap> out;
  for_each_node_map(source_size, target_size, [&](const NodeMap& map) { out.push_back(map); });
  return out;
}

std::vector<NodeMap> enumerate_node_maps(const LabeledGraph& g, const LabeledGraph& h) {
  return enumerate_node_maps(g.num_nodes(), h.num_nodes());
}

ExactResult exact_ged(const GedInstance& instance) {
  ExactResult best;
  bool found = false;
  for_each_node_map(instance.source_size(), instance.target_size(), [&](const NodeMap& map) {
    const double cost = compute_induced_cost(instance, map);
    if (!found || cost < best.value) {
      best.value = cost;
      best.witness = map;
      found = true;
    }
  });
  best.witness.set_cost(best.value);
  return best;
}

ExactResult exact_ged(const LabeledGraph& g, const LabeledGraph& h, const EditCostModel& costs) {
  const GedInstance instance(g, h, costs);
  return exact_ged(instance);
}

}  // namespace ged
