#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ged/edit_costs.hpp"
#include "ged/graph.hpp"
#include "ged/local_search.hpp"
#include "ged/multistart.hpp"

namespace ged {

/// One point of the parameter grid.
struct ExperimentConfig {
  AlgorithmConfig algorithm;
  std::size_t kappa = 40;
  double rho = 1.0;
  std::size_t loops = 0;
  double eta = 0.0;
  double lower_bound = 0.0;
  InitStrategy strategy = InitStrategy::kRandom;
};

struct ExperimentOptions {
  std::uint64_t seed = 0;
  std::size_t workers = 1;  // pair-level parallelism
  bool deterministic = true;
  /// Adds the permutation witness to the initial maps of shuffled-copy runs.
  bool seed_witness = false;
  bool include_shuffled = true;
};

struct PairRecord {
  std::string g_id;
  std::string h_id;
  bool shuffled = false;  // h is a permuted copy of g
  std::size_t config_index = 0;
  double upper_bound = 0.0;
  double seconds = 0.0;
};

struct ExperimentAggregate {
  std::size_t config_index = 0;
  std::size_t pair_count = 0;
  std::size_t shuffled_count = 0;
  double d = 0.0;      // mean UB over distinct pairs
  double d_hat = 0.0;  // mean UB over graph vs shuffled copy
  double t = 0.0;      // mean seconds over all rows
};

struct ExperimentReport {
  std::uint64_t seed = 0;
  std::vector<ExperimentConfig> configs;
  std::vector<PairRecord> records;  // per config: pairs i<j in dataset order, then shuffled copies
  std::vector<ExperimentAggregate> aggregates;
};

/// Id given to the shuffled copy of graph `id`.
std::string shuffled_id(const std::string& id);

/// Per-pair seed: derive_seed(derive_seed(seed, hash(g_id)), hash(h_id)).
std::uint64_t pair_seed(std::uint64_t seed, const std::string& g_id, const std::string& h_id);

/// Permuted copy of `g` and the witness map, seeded by (seed, g.id()).
std::pair<LabeledGraph, NodeMap> shuffled_copy(const LabeledGraph& g, std::uint64_t seed);

/// Multistart/RANDPOST upper bounds for all unordered pairs of the dataset
/// and every graph against its shuffled copy, for each config. Results do
/// not depend on the worker count.
ExperimentReport run_experiment(std::span<const LabeledGraph> dataset, std::span<const ExperimentConfig> grid,
                                const EditCostModel& costs, const ExperimentOptions& options);

std::vector<ExperimentAggregate> compute_aggregates(std::span<const PairRecord> records, std::size_t config_count);

/// g_id,h_id,algorithm,K,kappa,rho,L,eta,beam,iters,seed,ub,seconds
/// With `zero_timings` the seconds column is written as 0.000000.
void write_csv(std::ostream& out, const ExperimentReport& report, bool zero_timings = false);

/// One line per config with d, d_hat and t.
void write_summary(std::ostream& out, const ExperimentReport& report);

/// Shortest round-trip decimal form.
std::string format_real(double value);

}  // namespace ged
