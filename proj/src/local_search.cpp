#include "ged/local_search.hpp"

#include "ged/beam.hpp"
#include "ged/errors.hpp"
#include "ged/ipfp.hpp"

namespace ged {

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kRefine: return "refine";
    case Algorithm::kKRefine: return "k-refine";
    case Algorithm::kIpfp: return "ipfp";
    case Algorithm::kBpBeam: return "bp-beam";
    case Algorithm::kIbpBeam: return "ibp-beam";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kRefine, Algorithm::kKRefine, Algorithm::kIpfp, Algorithm::kBpBeam,
                      Algorithm::kIbpBeam}) {
    if (to_string(a) == name) return a;
  }
  throw ParameterError("unknown algorithm '" + std::string(name) + "'");
}

NodeMap run_local_search(const GedInstance& instance, NodeMap initial, const AlgorithmConfig& config,
                         std::uint64_t seed) {
  if (!initial.cached_cost()) induced_cost(instance, initial);
  switch (config.algorithm) {
    case Algorithm::kRefine:
      return k_refine(instance, std::move(initial), KRefineConfig::refine());
    case Algorithm::kKRefine:
      return k_refine(instance, std::move(initial),
                      KRefineConfig{config.max_swap_size, config.use_dummy_assignment, config.cost_mode});
    case Algorithm::kIpfp:
      return ipfp(instance, std::move(initial), IpfpConfig{config.epsilon, config.max_iterations});
    case Algorithm::kBpBeam:
      return bp_beam(instance, std::move(initial), config.beam_width, seed);
    case Algorithm::kIbpBeam:
      return ibp_beam(instance, initial, config.beam_width, config.num_orderings, seed);
  }
  throw ParameterError("unknown algorithm");
}

}  // namespace ged
