#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "ged/instance.hpp"
#include "ged/node_map.hpp"

namespace ged {

enum class SwapCostMode { kLocalized, kNaive };

struct KRefineConfig {
  std::size_t max_swap_size = 2;  // K
  bool use_dummy_assignment = true;
  SwapCostMode cost_mode = SwapCostMode::kLocalized;

  /// REFINE: binary swaps, no dummy pair, full cost recomputation.
  static KRefineConfig refine() { return {2, false, SwapCostMode::kNaive}; }
};

/// Called after every accepted swap with the applied cycle, its cost change
/// and the updated map.
using SwapObserver = std::function<void(std::span<const Assignment> cycle, double delta, const NodeMap& map)>;

/// Swaps with a cost change above -kImprovementTolerance are not accepted.
inline constexpr double kImprovementTolerance = 1e-9;

/// Best-improvement descent over K'-swaps, K' = 2..K, restarting at K' = 2
/// after every improvement. The returned map has its cost cached and the
/// dummy flag cleared.
NodeMap k_refine(const GedInstance& instance, NodeMap map, const KRefineConfig& config,
                 const SwapObserver& observer = {});

}  // namespace ged
