#include <gtest/gtest.h>

#include <set>

#include "ged/errors.hpp"
#include "ged/exact.hpp"
#include "ged/instance.hpp"
#include "test_support.hpp"

using namespace ged;
using namespace ged::testing;

namespace {

const ConstantCosts kMuta(3, 1, 1);

std::size_t reference_count(std::size_t n, std::size_t m) {
  std::size_t count = 0;
  reference_node_maps(n, m, [&](const NodeMap&) { ++count; });
  return count;
}

TEST(EnumerateNodeMaps, SmallCounts) {
  EXPECT_EQ(enumerate_node_maps(1, 1).size(), 2u);
  EXPECT_EQ(enumerate_node_maps(2, 0).size(), 1u);
  // u1->v1, u2->v1, or both deleted with v1 inserted
  EXPECT_EQ(enumerate_node_maps(2, 1).size(), 3u);
  EXPECT_EQ(reference_count(2, 1), 3u);
  EXPECT_EQ(enumerate_node_maps(0, 0).size(), 1u);
}

TEST(EnumerateNodeMaps, EachMapExactlyOnce) {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (std::size_t m = 0; m <= 4; ++m) {
      const auto maps = enumerate_node_maps(n, m);
      std::set<std::string> keys;
      for (const NodeMap& map : maps) {
        EXPECT_TRUE(validate_node_map(n, m, map));
        keys.insert(map.key());
      }
      EXPECT_EQ(keys.size(), maps.size());
      EXPECT_EQ(maps.size(), reference_count(n, m));
    }
  }
}

TEST(EnumerateNodeMaps, SizeGuard) {
  EXPECT_THROW(enumerate_node_maps(7, 6), SizeGuardError);
  EXPECT_NO_THROW(for_each_node_map(6, 6, [](const NodeMap&) {}));
}

TEST(ExactGed, SpecExamples) {
  const auto g = random_graph(5, 0.5, 2, 1);
  EXPECT_EQ(exact_ged(g, g, kMuta).value, 0.0);
  EXPECT_EQ(exact_ged(make_graph("a", {"a"}, {}), make_graph("b", {"b"}, {}), kMuta).value, 2.0);
  const auto path = make_graph("p", {"a", "b"}, {{0, 1, "x"}});
  const auto isolated = make_graph("i", {"a", "b"}, {});
  const auto result = exact_ged(path, isolated, kMuta);
  EXPECT_EQ(result.value, 1.0);
  EXPECT_EQ(result.witness.cost(), 1.0);
}

TEST(ExactGed, MatchesReferenceAndWitnessIsOptimal) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = random_graph(seed % 6, 0.5, 2, seed);
    const auto h = random_graph((seed / 6) % 6, 0.5, 2, seed + 13);
    const auto result = exact_ged(g, h, kMuta);
    EXPECT_NEAR(result.value, reference_ged(g, h, kMuta), 1e-9);
    EXPECT_NEAR(reference_cost(g, h, result.witness, kMuta), result.value, 1e-9);
  }
}

TEST(ExactGed, PermutedCopyIsZero) {
  const auto g = random_graph(6, 0.5, 3, 4);
  const std::vector<NodeId> perm{5, 3, 1, 0, 2, 4};
  const auto copy = permute_graph(g, perm).first;
  EXPECT_EQ(exact_ged(g, copy, kMuta).value, 0.0);
}

TEST(ExactGed, SymmetricCostsGiveSymmetricDistance) {
  const TableCosts symmetric(CostTable{{{{"a", "b"}, 0.7}, {{"b", "a"}, 0.7}}, {}, {}, 1.3, 0.8, 0.8},
                             CostTable{{}, {}, {}, 0.4, 0.6, 0.6});
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto g = random_graph(1 + seed % 5, 0.5, 3, seed);
    const auto h = random_graph(1 + (seed / 3) % 5, 0.5, 3, seed + 31);
    EXPECT_NEAR(exact_ged(g, h, symmetric).value, exact_ged(h, g, symmetric).value, 1e-9);
  }
}

TEST(ExactGed, GuardAppliesToGraphs) {
  const auto g = random_graph(7, 0.3, 2, 1);
  const auto h = random_graph(6, 0.3, 2, 2);
  EXPECT_THROW(exact_ged(g, h, kMuta), SizeGuardError);
}

}  // namespace
