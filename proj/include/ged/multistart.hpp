#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "ged/instance.hpp"
#include "ged/local_search.hpp"
#include "ged/node_map.hpp"

namespace ged {

enum class InitStrategy {
  kRandom,         // uniform over maximum-cardinality substitution sets
  kNodeCostLsape,  // optimal LSAPE over node costs, ties reshuffled per map
};

std::string_view to_string(InitStrategy strategy);
InitStrategy parse_init_strategy(std::string_view name);

/// `count` valid initial node maps with cached costs.
std::vector<NodeMap> generate_initial_maps(const GedInstance& instance, std::size_t count, InitStrategy strategy,
                                           std::uint64_t seed);

/// ceil(rho * count), at least 1.
std::size_t converged_target(std::size_t count, double rho);

struct ParallelOptions {
  std::size_t workers = 1;
  /// Deterministic: run the first ceil(rho*kappa) maps and report them in
  /// index order. Otherwise: start all maps and keep the first
  /// ceil(rho*kappa) to finish.
  bool deterministic = true;
};

/// Runs the local search from the initial maps; search i uses
/// derive_seed(seed, i). Returns exactly ceil(rho * |initial|) improved maps.
std::vector<NodeMap> multistart_run(const GedInstance& instance, std::span<const NodeMap> initial, double rho,
                                    const AlgorithmConfig& algorithm, std::uint64_t seed,
                                    const ParallelOptions& parallel = {});

/// (n+1) x (m+1) nonnegative assignment scores; column m scores deletions,
/// row n scores insertions.
class ScoresMatrix {
 public:
  ScoresMatrix(std::size_t source_size, std::size_t target_size)
      : n_(source_size), m_(target_size), data_((source_size + 1) * (target_size + 1), 0.0) {}

  std::size_t source_size() const noexcept { return n_; }
  std::size_t target_size() const noexcept { return m_; }
  double& operator()(std::size_t i, std::size_t k) noexcept { return data_[i * (m_ + 1) + k]; }
  double operator()(std::size_t i, std::size_t k) const noexcept { return data_[i * (m_ + 1) + k]; }

 private:
  std::size_t n_;
  std::size_t m_;
  std::vector<double> data_;
};

/// Weight used when a map's cost sits on the lower bound.
inline constexpr double kScoreWeightCap = 1e6;

/// Adds (1-eta) + eta*(ub-lb)/(c-lb) to every cell of each improved map.
ScoresMatrix update_scores(ScoresMatrix scores, std::span<const NodeMap> improved, double eta, double lower_bound,
                           double upper_bound);

/// Draws `count` node maps row by row from the scores, covering sampled
/// columns. Distinct maps are preferred; after 100*count draws duplicates
/// are admitted.
std::vector<NodeMap> sample_node_maps(const ScoresMatrix& scores, std::size_t count, std::uint64_t seed);

struct MultistartConfig {
  std::size_t kappa = 40;
  double rho = 1.0;
  std::size_t loops = 0;  // L
  double eta = 0.0;
  double lower_bound = 0.0;
  std::uint64_t seed = 0;
  InitStrategy strategy = InitStrategy::kRandom;
  /// Prepended to the generated round-0 maps (which shrink accordingly).
  std::vector<NodeMap> extra_initial_maps;
  ParallelOptions parallel;

  void validate() const;  // throws ParameterError
};

struct LoopRecord {
  std::size_t loop = 0;  // 0 is the plain multistart round
  double upper_bound = 0.0;
  double seconds = 0.0;  // elapsed since start
};

struct RandpostResult {
  double upper_bound = 0.0;
  NodeMap best;
  std::vector<LoopRecord> loops;
};

/// Multistart local search followed by `loops` rounds of score-driven
/// restarts. The upper bound never increases across rounds.
RandpostResult randpost(const GedInstance& instance, const MultistartConfig& config,
                        const AlgorithmConfig& algorithm);

}  // namespace ged
