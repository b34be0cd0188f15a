#include <gtest/gtest.h>

#include <limits>

#include "ged/beam.hpp"
#include "ged/errors.hpp"
#include "ged/instance.hpp"
#include "test_support.hpp"

using namespace ged;
using namespace ged::testing;

namespace {

const ConstantCosts kMuta(3, 1, 1);

/// Best map reachable by permuting the targets of the map's assignment list.
double best_target_permutation(const LabeledGraph& g, const LabeledGraph& h, const NodeMap& map) {
  const auto assignments = map.assignments();
  std::vector<NodeId> targets;
  for (const auto& a : assignments) targets.push_back(a.target);
  std::sort(targets.begin(), targets.end());
  double best = std::numeric_limits<double>::infinity();
  do {
    NodeMap candidate(g.num_nodes(), h.num_nodes());
    for (std::size_t s = 0; s < assignments.size(); ++s) {
      if (assignments[s].source != kDummy && targets[s] != kDummy) candidate.assign(assignments[s].source, targets[s]);
    }
    best = std::min(best, reference_cost(g, h, candidate, kMuta));
  } while (std::next_permutation(targets.begin(), targets.end()));
  return best;
}

OrderedNodeMap ordered(const GedInstance& instance, NodeMap map) {
  induced_cost(instance, map);
  auto order = map.assignments();
  return OrderedNodeMap(std::move(map), std::move(order));
}

TEST(OrderedSwap, SelfSwapIsIdentity) {
  const auto g = random_graph(4, 0.5, 2, 1);
  const auto h = random_graph(4, 0.5, 2, 2);
  const GedInstance instance(g, h, kMuta);
  const auto node = ordered(instance, NodeMap::identity(4, 4));
  const auto same = ordered_swap(instance, node, 2, 2);
  EXPECT_EQ(same.map(), node.map());
  EXPECT_EQ(same.cost(), node.cost());
}

TEST(OrderedSwap, ExchangesTargetsWithCorrectCost) {
  Rng rng(4);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = random_graph(5, 0.5, 2, seed);
    const auto h = random_graph(4, 0.5, 2, seed + 10);
    const GedInstance instance(g, h, kMuta);
    const auto node = ordered(instance, random_node_map(5, 4, rng));
    for (std::size_t s = 0; s < node.size(); ++s) {
      for (std::size_t t = s; t < node.size(); ++t) {
        const auto swapped = ordered_swap(instance, node, s, t);
        ASSERT_TRUE(validate_node_map(g, h, swapped.map()));
        EXPECT_EQ(swapped.order()[s].source, node.order()[s].source);
        EXPECT_EQ(swapped.order()[s].target, node.order()[t].target);
        EXPECT_EQ(swapped.order()[t].target, node.order()[s].target);
        EXPECT_NEAR(swapped.cost(), reference_cost(g, h, swapped.map(), kMuta), 1e-9);
        const auto back = ordered_swap(instance, swapped, s, t);
        EXPECT_EQ(back.map(), node.map());
        EXPECT_NEAR(back.cost(), node.cost(), 1e-9);
      }
    }
  }
}

TEST(OrderedSwap, RejectsBadPositions) {
  const auto g = random_graph(3, 0.5, 2, 1);
  const GedInstance instance(g, g, kMuta);
  const auto node = ordered(instance, NodeMap::identity(3, 3));
  EXPECT_THROW(ordered_swap(instance, node, 2, 1), ParameterError);
  EXPECT_THROW(ordered_swap(instance, node, 0, 3), ParameterError);
}

TEST(BpBeam, WideBeamIsExhaustive) {
  Rng rng(8);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = random_graph(1 + seed % 3, 0.6, 2, seed);
    const auto h = random_graph(1 + (seed / 3) % 3, 0.6, 2, seed + 100);
    const GedInstance instance(g, h, kMuta);
    NodeMap init = random_node_map(g.num_nodes(), h.num_nodes(), rng);
    induced_cost(instance, init);
    const double expected = best_target_permutation(g, h, init);
    for (std::uint64_t ordering = 0; ordering < 4; ++ordering) {
      const NodeMap out = bp_beam(instance, init, 100000, ordering);
      EXPECT_NEAR(out.cost(), expected, 1e-9);
    }
  }
}

TEST(BpBeam, OptimalInputUnchangedAndNeverWorse) {
  const auto g = random_graph(6, 0.4, 3, 3);
  const GedInstance same(g, g, kMuta);
  const NodeMap out = bp_beam(same, NodeMap::identity(6, 6), 5, 1);
  EXPECT_EQ(out.cost(), 0.0);
  EXPECT_EQ(out, NodeMap::identity(6, 6));

  Rng rng(9);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto a = random_graph(5, 0.5, 2, seed);
    const auto b = random_graph(5, 0.5, 2, seed + 1);
    const GedInstance instance(a, b, kMuta);
    NodeMap init = random_node_map(5, 5, rng);
    const double start = induced_cost(instance, init);
    const NodeMap result = bp_beam(instance, init, 5, seed);
    EXPECT_LE(result.cost(), start);
    EXPECT_GE(result.cost(), reference_ged(a, b, kMuta) - 1e-9);
    EXPECT_NEAR(result.cost(), reference_cost(a, b, result, kMuta), 1e-9);
  }
}

TEST(BpBeam, SingleNodeGraphs) {
  const auto g = make_graph("g", {"a"}, {});
  const auto h = make_graph("h", {"b"}, {});
  const GedInstance instance(g, h, kMuta);
  EXPECT_EQ(bp_beam(instance, NodeMap::identity(1, 1), 1, 0).cost(), 3.0);
  EXPECT_EQ(bp_beam(instance, NodeMap(1, 1), 3, 0).cost(), 2.0);
}

TEST(IbpBeam, OneOrderingMatchesBpBeamWithDerivedSeed) {
  const auto g = random_graph(7, 0.4, 3, 5);
  const auto h = random_graph(6, 0.4, 3, 6);
  const GedInstance instance(g, h, kMuta);
  Rng rng(1);
  NodeMap init = random_node_map(7, 6, rng);
  induced_cost(instance, init);
  EXPECT_EQ(ibp_beam(instance, init, 5, 1, 42), bp_beam(instance, init, 5, derive_seed(42, 0)));
}

TEST(IbpBeam, IsMinimumOverOrderingsAndWorkerInvariant) {
  Rng rng(2);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = random_graph(7, 0.4, 3, seed);
    const auto h = random_graph(7, 0.4, 3, seed + 3);
    const GedInstance instance(g, h, kMuta);
    NodeMap init = random_node_map(7, 7, rng);
    induced_cost(instance, init);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < 6; ++i) best = std::min(best, bp_beam(instance, init, 3, derive_seed(seed, i)).cost());
    const NodeMap serial = ibp_beam(instance, init, 3, 6, seed, 1);
    EXPECT_EQ(serial.cost(), best);
    EXPECT_EQ(ibp_beam(instance, init, 3, 6, seed, 4), serial);
  }
  const auto g = random_graph(3, 0.5, 2, 1);
  const GedInstance instance(g, g, kMuta);
  EXPECT_THROW(ibp_beam(instance, NodeMap::identity(3, 3), 3, 0, 1), ParameterError);
}

TEST(IbpBeam, SoundOnSmallInstances) {
  Rng rng(3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = random_graph(1 + seed % 5, 0.5, 2, seed);
    const auto h = random_graph(1 + (seed / 5) % 5, 0.5, 2, seed + 9);
    const GedInstance instance(g, h, kMuta);
    NodeMap init = random_node_map(g.num_nodes(), h.num_nodes(), rng);
    EXPECT_GE(ibp_beam(instance, init, 5, 4, seed).cost(), reference_ged(g, h, kMuta) - 1e-9);
  }
}

}  // namespace
