#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "ged/instance.hpp"
#include "ged/k_refine.hpp"
#include "ged/node_map.hpp"

namespace ged {

enum class Algorithm { kRefine, kKRefine, kIpfp, kBpBeam, kIbpBeam };

std::string_view to_string(Algorithm algorithm);
/// Accepts refine, k-refine, ipfp, bp-beam, ibp-beam.
Algorithm parse_algorithm(std::string_view name);

/// A local search algorithm together with its parameters. Defaults follow
/// the usual experimental settings (beam 5, 20 orderings, IPFP 1e-3/100).
struct AlgorithmConfig {
  Algorithm algorithm = Algorithm::kKRefine;
  std::size_t max_swap_size = 2;
  bool use_dummy_assignment = true;
  SwapCostMode cost_mode = SwapCostMode::kLocalized;
  std::size_t beam_width = 5;
  std::size_t num_orderings = 20;
  double epsilon = 1e-3;
  std::size_t max_iterations = 100;
};

/// Runs the configured local search from `initial`. `seed` drives the
/// random orderings of the beam searches and is ignored otherwise. The
/// result has its cost cached and never costs more than `initial`.
NodeMap run_local_search(const GedInstance& instance, NodeMap initial, const AlgorithmConfig& config,
                         std::uint64_t seed);

}  // namespace ged
