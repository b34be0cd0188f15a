#include "ged/experiment.hpp"

#include <charconv>
#include <chrono>
#include <numeric>
#include <ostream>

#include "ged/errors.hpp"
#include "ged/instance.hpp"
#include "ged/parallel.hpp"
#include "ged/rng.hpp"

namespace ged {

std::string shuffled_id(const std::string& id) { return id + "~perm"; }

std::uint64_t pair_seed(std::uint64_t seed, const std::string& g_id, const std::string& h_id) {
  return derive_seed(derive_seed(seed, stable_hash(g_id)), stable_hash(h_id));
}

std::pair<LabeledGraph, NodeMap> shuffled_copy(const LabeledGraph& g, std::uint64_t seed) {
  std::vector<NodeId> permutation(g.num_nodes());
  std::iota(permutation.begin(), permutation.end(), NodeId{0});
  Rng rng(derive_seed(seed, stable_hash("shuffle|" + g.id())));
  rng.shuffle(std::span<NodeId>(permutation));
  auto result = permute_graph(g, permutation);
  result.first.set_id(shuffled_id(g.id()));
  return result;
}

namespace {

struct Job {
  const LabeledGraph* g;
  const LabeledGraph* h;
  const NodeMap* witness;  // shuffled rows only
  std::size_t config_index;
};

}  // namespace

ExperimentReport run_experiment(std::span<const LabeledGraph> dataset, std::span<const ExperimentConfig> grid,
                                const EditCostModel& costs, const ExperimentOptions& options) {
  ExperimentReport report;
  report.seed = options.seed;
  report.configs.assign(grid.begin(), grid.end());
  for (const auto& config : grid) {
    MultistartConfig check;
    check.kappa = config.kappa;
    check.rho = config.rho;
    check.loops = config.loops;
    check.eta = config.eta;
    check.lower_bound = config.lower_bound;
    check.validate();
  }

  std::vector<LabeledGraph> copies;
  std::vector<NodeMap> witnesses;
  if (options.include_shuffled) {
    copies.reserve(dataset.size());
    witnesses.reserve(dataset.size());
    for (const auto& g : dataset) {
      auto [copy, witness] = shuffled_copy(g, options.seed);
      copies.push_back(std::move(copy));
      witnesses.push_back(std::move(witness));
    }
  }

  std::vector<Job> jobs;
  for (std::size_t c = 0; c < grid.size(); ++c) {
    for (std::size_t i = 0; i < dataset.size(); ++i) {
      for (std::size_t j = i + 1; j < dataset.size(); ++j) jobs.push_back(Job{&dataset[i], &dataset[j], nullptr, c});
    }
    for (std::size_t i = 0; i < copies.size(); ++i) jobs.push_back(Job{&dataset[i], &copies[i], &witnesses[i], c});
  }

  report.records.resize(jobs.size());
  parallel_for(jobs.size(), options.workers, [&](std::size_t index) {
    const Job& job = jobs[index];
    const ExperimentConfig& config = grid[job.config_index];
    const auto start = std::chrono::steady_clock::now();
    GedInstance instance(*job.g, *job.h, costs);
    MultistartConfig multistart;
    multistart.kappa = config.kappa;
    multistart.rho = config.rho;
    multistart.loops = config.loops;
    multistart.eta = config.eta;
    multistart.lower_bound = config.lower_bound;
    multistart.strategy = config.strategy;
    multistart.seed = pair_seed(options.seed, job.g->id(), job.h->id());
    multistart.parallel = ParallelOptions{1, options.deterministic};
    if (options.seed_witness && job.witness) multistart.extra_initial_maps.push_back(*job.witness);
    const RandpostResult result = randpost(instance, multistart, config.algorithm);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    PairRecord& record = report.records[index];
    record.g_id = job.g->id();
    record.h_id = job.h->id();
    record.shuffled = job.witness != nullptr;
    record.config_index = job.config_index;
    record.upper_bound = result.upper_bound;
    record.seconds = elapsed.count();
    return true;
  });
  report.aggregates = compute_aggregates(report.records, grid.size());
  return report;
}

std::vector<ExperimentAggregate> compute_aggregates(std::span<const PairRecord> records, std::size_t config_count) {
  std::vector<ExperimentAggregate> aggregates(config_count);
  std::vector<std::size_t> rows(config_count, 0);
  for (std::size_t c = 0; c < config_count; ++c) aggregates[c].config_index = c;
  for (const PairRecord& r : records) {
    if (r.config_index >= config_count) throw ParameterError("record references an unknown config");
    ExperimentAggregate& a = aggregates[r.config_index];
    if (r.shuffled) {
      a.d_hat += r.upper_bound;
      ++a.shuffled_count;
    } else {
      a.d += r.upper_bound;
      ++a.pair_count;
    }
    a.t += r.seconds;
    ++rows[r.config_index];
  }
  for (std::size_t c = 0; c < config_count; ++c) {
    ExperimentAggregate& a = aggregates[c];
    if (a.pair_count) a.d /= static_cast<double>(a.pair_count);
    if (a.shuffled_count) a.d_hat /= static_cast<double>(a.shuffled_count);
    if (rows[c]) a.t /= static_cast<double>(rows[c]);
  }
  return aggregates;
}

std::string format_real(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ptr);
}

namespace {

std::string format_seconds(double seconds) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, seconds, std::chars_format::fixed, 6);
  return std::string(buffer, ptr);
}

}  // namespace

void write_csv(std::ostream& out, const ExperimentReport& report, bool zero_timings) {
  out << "g_id,h_id,algorithm,K,kappa,rho,L,eta,beam,iters,seed,ub,seconds\n";
  for (const PairRecord& r : report.records) {
    const ExperimentConfig& config = report.configs.at(r.config_index);
    const AlgorithmConfig& algo = config.algorithm;
    std::size_t k = 0;
    std::size_t beam = 0;
    std::size_t iters = 0;
    switch (algo.algorithm) {
      case Algorithm::kRefine: k = 2; break;
      case Algorithm::kKRefine: k = algo.max_swap_size; break;
      case Algorithm::kIpfp: iters = algo.max_iterations; break;
      case Algorithm::kBpBeam: beam = algo.beam_width; break;
      case Algorithm::kIbpBeam:
        beam = algo.beam_width;
        iters = algo.num_orderings;
        break;
    }
    out << r.g_id << ',' << r.h_id << ',' << to_string(algo.algorithm) << ',' << k << ',' << config.kappa << ','
        << format_real(config.rho) << ',' << config.loops << ',' << format_real(config.eta) << ',' << beam << ','
        << iters << ',' << report.seed << ',' << format_real(r.upper_bound) << ','
        << format_seconds(zero_timings ? 0.0 : r.seconds) << '\n';
  }
}

void write_summary(std::ostream& out, const ExperimentReport& report) {
  for (const ExperimentAggregate& a : report.aggregates) {
    const ExperimentConfig& config = report.configs.at(a.config_index);
    out << to_string(config.algorithm.algorithm) << " L=" << config.loops << " rho=" << format_real(config.rho)
        << ": d=" << format_real(a.d) << " (" << a.pair_count << " pairs)"
        << " d_hat=" << format_real(a.d_hat) << " (" << a.shuffled_count << " copies)"
        << " t=" << format_seconds(a.t) << "s\n";
  }
}

}  // namespace ged
