#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "ged/edit_costs.hpp"
#include "ged/instance.hpp"
#include "ged/node_map.hpp"

namespace ged {

/// Largest |V^G| + |V^H| accepted by the exhaustive routines.
inline constexpr std::size_t kExactSizeLimit = 12;

/// Calls visit(const NodeMap&) once for every node map between graphs of the
/// given sizes. Throws SizeGuardError beyond kExactSizeLimit.
void for_each_node_map(std::size_t source_size, std::size_t target_size,
                       const std::function<void(const NodeMap&)>& visit);

std::vector<NodeMap> enumerate_node_maps(std::size_t source_size, std::size_t target_size);
std::vector<NodeMap> enumerate_node_maps(const LabeledGraph& g, const LabeledGraph& h);

struct ExactResult {
  double value = 0.0;
  NodeMap witness;
};

/// Minimum induced cost over all node maps (first minimum in enumeration
/// order is the witness).
ExactResult exact_ged(const GedInstance& instance);
ExactResult exact_ged(const LabeledGraph& g, const LabeledGraph& h, const EditCostModel& costs);

}  // namespace ged
