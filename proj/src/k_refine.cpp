#include "ged/k_refine.hpp"

#include <vector>

#include "ged/errors.hpp"
#include "ged/swap.hpp"

namespace ged {

NodeMap k_refine(const GedInstance& instance, NodeMap map, const KRefineConfig& config,
                 const SwapObserver& observer) {
  if (config.max_swap_size < 2) throw ParameterError("K-REFINE needs a maximum swap size of at least 2");
  if (!map.cached_cost()) induced_cost(instance, map);
  double cost = *map.cached_cost();

  SwapEvaluator evaluator(instance);
  NodeMap scratch = map;
  std::vector<Assignment> assignments;
  std::vector<Assignment> best_cycle;

  std::size_t k_prime = 2;
  while (k_prime <= config.max_swap_size) {
    if (config.use_dummy_assignment) map.set_dummy_pair(true);
    map.assignments(assignments);
    double best_delta = 0.0;
    best_cycle.clear();

    for_each_swap(assignments, k_prime, [&](std::span<const Assignment> cycle) {
      double delta;
      if (config.cost_mode == SwapCostMode::kLocalized) {
        delta = evaluator.delta(map, cycle);
      } else {
        scratch = map;
        swap_apply_in_place(scratch, cycle);
        delta = compute_induced_cost(instance, scratch) - cost;
      }
      if (delta < best_delta) {
        best_delta = delta;
        best_cycle.assign(cycle.begin(), cycle.end());
      }
    });

    if (best_delta < -kImprovementTolerance) {
      swap_apply_in_place(map, best_cycle);
      cost += best_delta;
      map.set_cost(cost);
      if (observer) observer(best_cycle, best_delta, map);
      k_prime = 2;
    } else {
      ++k_prime;
    }
  }
  map.set_dummy_pair(false);
  map.set_cost(cost);
  return map;
}

}  // namespace ged
