#include "ged/multistart.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <mutex>
#include <numeric>
#include <unordered_set>

#include "ged/errors.hpp"
#include "ged/lsape.hpp"
#include "ged/parallel.hpp"
#include "ged/rng.hpp"

namespace ged {

std::string_view to_string(InitStrategy strategy) {
  switch (strategy) {
    case InitStrategy::kRandom: return "random";
    case InitStrategy::kNodeCostLsape: return "node-cost-lsape";
  }
  return "unknown";
}

InitStrategy parse_init_strategy(std::string_view name) {
  if (name == "random") return InitStrategy::kRandom;
  if (name == "node-cost-lsape") return InitStrategy::kNodeCostLsape;
  throw ParameterError("unknown initialization strategy '" + std::string(name) + "'");
}

namespace {

NodeMap random_map(std::size_t n, std::size_t m, Rng& rng) {
  NodeMap map(n, m);
  std::vector<NodeId> sources(n);
  std::vector<NodeId> targets(m);
  std::iota(sources.begin(), sources.end(), NodeId{0});
  std::iota(targets.begin(), targets.end(), NodeId{0});
  rng.shuffle(std::span<NodeId>(sources));
  rng.shuffle(std::span<NodeId>(targets));
  for (std::size_t i = 0; i < std::min(n, m); ++i) map.assign(sources[i], targets[i]);
  return map;
}

NodeMap node_cost_lsape_map(const GedInstance& instance, Rng* rng) {
  const std::size_t n = instance.source_size();
  const std::size_t m = instance.target_size();
  std::vector<NodeId> rows(n);
  std::vector<NodeId> cols(m);
  std::iota(rows.begin(), rows.end(), NodeId{0});
  std::iota(cols.begin(), cols.end(), NodeId{0});
  if (rng != nullptr) {
    rng->shuffle(std::span<NodeId>(rows));
    rng->shuffle(std::span<NodeId>(cols));
  }
  ExtendedCostMatrix costs(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < m; ++k) costs(i, k) = instance.node_cost(rows[i], cols[k]);
    costs(i, m) = instance.node_cost(rows[i], kDummy);
  }
  for (std::size_t k = 0; k < m; ++k) costs(n, k) = instance.node_cost(kDummy, cols[k]);
  const NodeMap shuffled = lsape_solve(costs).assignment;
  NodeMap map(n, m);
  for (NodeId i = 0; i < n; ++i) {
    const NodeId k = shuffled.image(i);
    if (k != kDummy) map.assign(rows[i], cols[k]);
  }
  return map;
}

}  // namespace

std::vector<NodeMap> generate_initial_maps(const GedInstance& instance, std::size_t count, InitStrategy strategy,
                                           std::uint64_t seed) {
  if (count < 1) throw ParameterError("need at least one initial node map");
  Rng rng(seed);
  std::vector<NodeMap> maps;
  maps.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (strategy == InitStrategy::kRandom) {
      maps.push_back(random_map(instance.source_size(), instance.target_size(), rng));
    } else {
      maps.push_back(node_cost_lsape_map(instance, i == 0 ? nullptr : &rng));
    }
    induced_cost(instance, maps.back());
  }
  return maps;
}

std::size_t converged_target(std::size_t count, double rho) {
  const double scaled = rho * static_cast<double>(count);
  const auto target = static_cast<std::size_t>(std::ceil(scaled - 1e-9));
  return std::clamp<std::size_t>(target, 1, std::max<std::size_t>(count, 1));
}

std::vector<NodeMap> multistart_run(const GedInstance& instance, std::span<const NodeMap> initial, double rho,
                                    const AlgorithmConfig& algorithm, std::uint64_t seed,
                                    const ParallelOptions& parallel) {
  if (!(rho > 0.0 && rho <= 1.0)) throw ParameterError("rho must lie in (0, 1]");
  if (initial.empty()) return {};
  const std::size_t target = converged_target(initial.size(), rho);

  if (parallel.deterministic) {
    std::vector<NodeMap> results(target);
    parallel_for(target, parallel.workers, [&](std::size_t i) {
      results[i] = run_local_search(instance, initial[i], algorithm, derive_seed(seed, i));
      return true;
    });
    return results;
  }

  std::vector<NodeMap> results;
  results.reserve(target);
  std::mutex mutex;
  parallel_for(initial.size(), parallel.workers, [&](std::size_t i) {
    NodeMap improved = run_local_search(instance, initial[i], algorithm, derive_seed(seed, i));
    std::lock_guard lock(mutex);
    if (results.size() < target) results.push_back(std::move(improved));
    return results.size() < target;
  });
  return results;
}

ScoresMatrix update_scores(ScoresMatrix scores, std::span<const NodeMap> improved, double eta, double lower_bound,
                           double upper_bound) {
  if (upper_bound < lower_bound) throw ParameterError("upper bound below lower bound");
  if (!(eta >= 0.0 && eta <= 1.0)) throw ParameterError("eta must lie in [0, 1]");
  const std::size_t n = scores.source_size();
  const std::size_t m = scores.target_size();
  for (const NodeMap& map : improved) {
    if (map.source_size() != n || map.target_size() != m) throw StructuralError("node map shape mismatch");
    const double gap = map.cost() - lower_bound;
    if (gap < -1e-9) throw ParameterError("node map cost below lower bound");
    const double ratio = gap < 1e-12 ? kScoreWeightCap : (upper_bound - lower_bound) / gap;
    const double weight = (1.0 - eta) + eta * ratio;
    for (NodeId i = 0; i < n; ++i) {
      const NodeId k = map.image(i);
      scores(i, k == kDummy ? m : k) += weight;
    }
    for (NodeId k = 0; k < m; ++k) {
      if (map.preimage(k) == kDummy) scores(n, k) += weight;
    }
  }
  return scores;
}

namespace {

NodeMap draw_node_map(const ScoresMatrix& scores, Rng& rng, std::vector<std::size_t>& candidates) {
  const std::size_t n = scores.source_size();
  const std::size_t m = scores.target_size();
  NodeMap map(n, m);
  std::vector<bool> covered(m, false);
  for (NodeId i = 0; i < n; ++i) {
    candidates.clear();
    double total = 0.0;
    for (std::size_t k = 0; k <= m; ++k) {
      if (k < m && covered[k]) continue;
      candidates.push_back(k);
      total += scores(i, k);
    }
    std::size_t chosen = candidates.back();
    if (total <= 0.0) {
      chosen = candidates[rng.uniform_index(candidates.size())];
    } else {
      const double r = rng.uniform01() * total;
      double cumulative = 0.0;
      for (std::size_t k : candidates) {
        const double weight = scores(i, k);
        if (weight <= 0.0) continue;
        chosen = k;
        cumulative += weight;
        if (cumulative > r) break;
      }
    }
    if (chosen < m) {
      map.assign(i, static_cast<NodeId>(chosen));
      covered[chosen] = true;
    }
  }
  return map;
}

}  // namespace

std::vector<NodeMap> sample_node_maps(const ScoresMatrix& scores, std::size_t count, std::uint64_t seed) {
  if (count < 1) throw ParameterError("need at least one sampled node map");
  Rng rng(seed);
  std::vector<NodeMap> out;
  out.reserve(count);
  std::unordered_set<std::string> seen;
  std::vector<std::size_t> candidates;
  const std::size_t cap = 100 * count;
  std::size_t draws = 0;
  while (out.size() < count) {
    NodeMap map = draw_node_map(scores, rng, candidates);
    ++draws;
    if (seen.insert(map.key()).second || draws > cap) out.push_back(std::move(map));
  }
  return out;
}

void MultistartConfig::validate() const {
  if (kappa < 1) throw ParameterError("kappa must be at least 1");
  if (!(rho > 0.0 && rho <= 1.0)) throw ParameterError("rho must lie in (0, 1]");
  if (!(eta >= 0.0 && eta <= 1.0)) throw ParameterError("eta must lie in [0, 1]");
  if (!(lower_bound >= 0.0) || !std::isfinite(lower_bound)) throw ParameterError("lower bound must be nonnegative");
}

RandpostResult randpost(const GedInstance& instance, const MultistartConfig& config,
                        const AlgorithmConfig& algorithm) {
  config.validate();
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - start).count(); };

  std::vector<NodeMap> initial;
  for (const NodeMap& extra : config.extra_initial_maps) {
    initial.push_back(extra);
    if (!initial.back().cached_cost()) induced_cost(instance, initial.back());
  }
  if (initial.size() < config.kappa) {
    auto generated = generate_initial_maps(instance, config.kappa - initial.size(), config.strategy,
                                           derive_seed(derive_seed(config.seed, 0), 1));
    std::move(generated.begin(), generated.end(), std::back_inserter(initial));
  }

  RandpostResult result;
  std::vector<NodeMap> improved = multistart_run(instance, initial, config.rho, algorithm,
                                                 derive_seed(derive_seed(config.seed, 0), 2), config.parallel);
  auto update_best = [&](const std::vector<NodeMap>& maps, bool first) {
    for (const NodeMap& map : maps) {
      if (first || map.cost() < result.upper_bound) {
        result.upper_bound = map.cost();
        result.best = map;
        first = false;
      }
    }
  };
  update_best(improved, true);
  result.loops.push_back(LoopRecord{0, result.upper_bound, elapsed()});

  ScoresMatrix scores(instance.source_size(), instance.target_size());
  for (std::size_t loop = 1; loop <= config.loops; ++loop) {
    const std::uint64_t round_seed = derive_seed(config.seed, loop);
    scores = update_scores(std::move(scores), improved, config.eta, config.lower_bound, result.upper_bound);
    std::vector<NodeMap> sampled = sample_node_maps(scores, config.kappa, derive_seed(round_seed, 1));
    for (NodeMap& map : sampled) induced_cost(instance, map);
    improved = multistart_run(instance, sampled, config.rho, algorithm, derive_seed(round_seed, 2), config.parallel);
    update_best(improved, false);
    result.loops.push_back(LoopRecord{loop, result.upper_bound, elapsed()});
  }
  return result;
}

}  // namespace ged
