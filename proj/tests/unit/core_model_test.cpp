#include <gtest/gtest.h>

#include <numeric>

#include "ged/errors.hpp"
#include "ged/exact.hpp"
#include "ged/instance.hpp"
#include "test_support.hpp"

using namespace ged;
using namespace ged::testing;

namespace {

const ConstantCosts kMuta(3, 1, 1);

TEST(LabeledGraph, RejectsSelfLoopsDuplicatesAndBadIndices) {
  LabeledGraph g("g");
  g.add_node("a");
  g.add_node("b");
  g.add_edge(0, 1, "x");
  EXPECT_THROW(g.add_edge(1, 0, "y"), StructuralError);
  EXPECT_THROW(g.add_edge(1, 1, "y"), StructuralError);
  EXPECT_THROW(g.add_edge(0, 2, "y"), StructuralError);
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_TRUE(g.is_consistent());
}

TEST(LabeledGraph, AdjacencyMatchesEdgeSet) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = random_graph(9, 0.4, 3, seed);
    ASSERT_TRUE(g.is_consistent());
    std::size_t degree_sum = 0;
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
      degree_sum += g.neighbors(u).size();
      for (const Incidence& inc : g.neighbors(u)) {
        EXPECT_TRUE(g.has_edge(u, inc.neighbor));
        EXPECT_TRUE(g.has_edge(inc.neighbor, u));
      }
    }
    EXPECT_EQ(degree_sum, 2 * g.num_edges());
  }
}

TEST(ConstantCosts, EqualLabelsAreFree) {
  EXPECT_EQ(kMuta.node_sub("a", "a"), 0.0);
  EXPECT_EQ(kMuta.node_sub("a", "b"), 3.0);
  EXPECT_EQ(kMuta.edge_sub("1", "1"), 0.0);
  EXPECT_EQ(kMuta.edge_del("1"), 1.0);
  EXPECT_THROW(ConstantCosts(-1, 1, 1), ParameterError);
  EXPECT_THROW(ConstantCosts(std::numeric_limits<double>::infinity(), 1, 1), ParameterError);
}

TEST(CostModels, ParsesSpecs) {
  const auto constant = make_cost_model("constant:2,1,0.5");
  EXPECT_EQ(constant->node_sub("a", "b"), 2.0);
  EXPECT_EQ(constant->edge_ins("x"), 0.5);
  EXPECT_THROW(make_cost_model("constant:1,2"), ParameterError);
  EXPECT_THROW(make_cost_model("constant:1,2,x"), ParameterError);
  EXPECT_THROW(make_cost_model("other:1"), ParameterError);
  EXPECT_THROW(make_cost_model("table:/nonexistent/file.json"), ParameterError);
}

TEST(TableCosts, LooksUpEntriesAndDefaults) {
  const auto costs = parse_cost_table(R"({
    "node": {"sub": [["C", "N", 2.5]], "del": {"C": 4}, "ins": {"N": 1.5},
             "default": {"sub": 9, "del": 1, "ins": 1}},
    "edge": {"sub": [["1", "2", 0.5]], "symmetric": false, "default": {"del": 2, "ins": 3}}
  })");
  EXPECT_EQ(costs->node_sub("C", "N"), 2.5);
  EXPECT_EQ(costs->node_sub("N", "C"), 2.5);
  EXPECT_EQ(costs->node_sub("C", "O"), 9.0);
  EXPECT_EQ(costs->node_sub("O", "O"), 0.0);
  EXPECT_EQ(costs->node_del("C"), 4.0);
  EXPECT_EQ(costs->node_del("N"), 1.0);
  EXPECT_EQ(costs->node_ins("N"), 1.5);
  EXPECT_EQ(costs->edge_sub("1", "2"), 0.5);
  EXPECT_THROW(costs->edge_sub("2", "1"), ParameterError);
  EXPECT_EQ(costs->edge_del("7"), 2.0);
  EXPECT_EQ(costs->edge_ins("7"), 3.0);
  EXPECT_THROW(parse_cost_table(R"({"node": {"del": {"a": -1}}})"), ParameterError);
  EXPECT_THROW(parse_cost_table("{not json"), ParameterError);
}

TEST(NodeMap, FromAssignmentsAndQueries) {
  const std::vector<Assignment> list{{0, 1}, {1, kDummy}, {kDummy, 0}};
  const NodeMap map = NodeMap::from_assignments(2, 2, list);
  EXPECT_EQ(map.image(0), 1u);
  EXPECT_EQ(map.preimage(1), 0u);
  EXPECT_EQ(map.image(1), kDummy);
  EXPECT_EQ(map.preimage(0), kDummy);
  EXPECT_EQ(map.size(), 3u);
  EXPECT_EQ(map.substitutions(), 1u);
  EXPECT_TRUE(map.contains({1, kDummy}));
  EXPECT_FALSE(map.contains({1, 0}));
  EXPECT_EQ(map.assignments(), list);
  EXPECT_EQ(to_string(Assignment{0, kDummy}), "(1,eps)");
  const std::vector<Assignment> clash{{0, 1}, {1, 1}};
  EXPECT_THROW(NodeMap::from_assignments(2, 2, clash), StructuralError);
}

TEST(NodeMap, DummyPairFlagCountsAsAssignment) {
  NodeMap map = NodeMap::identity(2, 2);
  EXPECT_EQ(map.size(), 2u);
  map.set_dummy_pair(true);
  EXPECT_EQ(map.size(), 3u);
  EXPECT_TRUE(map.assignments().back().is_dummy_pair());
  EXPECT_TRUE(map.contains({kDummy, kDummy}));
}

TEST(InducedCost, IdenticalGraphsIdentityMapIsZero) {
  const auto g = random_graph(6, 0.5, 3, 1);
  NodeMap map = NodeMap::identity(6, 6);
  EXPECT_EQ(induced_cost(g, g, map, kMuta), 0.0);
  ASSERT_TRUE(map.cached_cost().has_value());
  EXPECT_EQ(*map.cached_cost(), 0.0);
}

TEST(InducedCost, SingleEdgeDeletion) {
  const auto g = make_graph("g", {"a", "b"}, {{0, 1, "x"}});
  const auto h = make_graph("h", {"a", "b"}, {});
  NodeMap map = NodeMap::identity(2, 2);
  EXPECT_EQ(induced_cost(g, h, map, kMuta), 1.0);
  EXPECT_EQ(exact_ged(g, h, kMuta).value, 1.0);
}

TEST(InducedCost, DeletePlusInsert) {
  const auto g = make_graph("g", {"a"}, {});
  const auto h = make_graph("h", {"b"}, {});
  NodeMap map(1, 1);
  EXPECT_EQ(induced_cost(g, h, map, kMuta), 2.0);
  EXPECT_EQ(reference_ged(g, h, kMuta), 2.0);
}

TEST(InducedCost, ShapeMismatchIsStructuralError) {
  const auto g = make_graph("g", {"a", "b"}, {});
  NodeMap map(1, 2);
  EXPECT_THROW(induced_cost(g, g, map, kMuta), StructuralError);
}

TEST(InducedCost, MatchesReferenceOnRandomMaps) {
  const TableCosts table(CostTable{{{{"a", "b"}, 0.7}, {{"b", "a"}, 1.3}}, {{"a", 2.0}}, {{"c", 0.25}}, 1.1, 0.9, 1.2},
                         CostTable{{{{"1", "2"}, 0.3}}, {}, {}, 2.2, 0.6, 0.4});
  Rng rng(11);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = random_graph(1 + seed % 7, 0.5, 3, seed);
    const auto h = random_graph(1 + (seed * 5) % 8, 0.4, 3, seed + 1000);
    for (const EditCostModel* costs : {static_cast<const EditCostModel*>(&kMuta), static_cast<const EditCostModel*>(&table)}) {
      const GedInstance instance(g, h, *costs);
      for (int rep = 0; rep < 10; ++rep) {
        const NodeMap map = random_node_map(g.num_nodes(), h.num_nodes(), rng);
        const double got = compute_induced_cost(instance, map);
        EXPECT_NEAR(got, reference_cost(g, h, map, *costs), 1e-9);
        EXPECT_GE(got, 0.0);
      }
    }
  }
}

TEST(InducedCost, InvariantUnderEdgeInsertionOrder) {
  const auto g = random_graph(7, 0.5, 3, 5);
  const auto h = random_graph(6, 0.5, 3, 6);
  LabeledGraph reversed(g.id());
  for (NodeId u = 0; u < g.num_nodes(); ++u) reversed.add_node(g.node_label(u));
  const auto edges = g.edges();
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) reversed.add_edge(it->second, it->first, it->label);
  ASSERT_EQ(reversed, g);
  Rng rng(3);
  for (int rep = 0; rep < 50; ++rep) {
    NodeMap a = random_node_map(7, 6, rng);
    NodeMap b = a;
    EXPECT_NEAR(induced_cost(g, h, a, kMuta), induced_cost(reversed, h, b, kMuta), 1e-12);
  }
}

TEST(InducedCost, BoundedBelowByExactWithEqualityAttained) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto g = random_graph(1 + seed % 5, 0.5, 2, seed);
    const auto h = random_graph(1 + (seed / 2) % 5, 0.5, 2, seed + 77);
    const GedInstance instance(g, h, kMuta);
    const double ged = reference_ged(g, h, kMuta);
    bool attained = false;
    reference_node_maps(g.num_nodes(), h.num_nodes(), [&](const NodeMap& map) {
      const double c = compute_induced_cost(instance, map);
      EXPECT_GE(c, ged - 1e-9);
      attained |= std::abs(c - ged) < 1e-9;
    });
    EXPECT_TRUE(attained);
  }
}

TEST(ValidateNodeMap, AcceptsValidRejectsBroken) {
  const auto g = make_graph("g", {"a", "b"}, {});
  EXPECT_TRUE(validate_node_map(g, g, NodeMap::identity(2, 2)));
  EXPECT_FALSE(validate_node_map(g, g, NodeMap::from_arrays({1, kDummy}, {kDummy, kDummy})));
  EXPECT_FALSE(validate_node_map(g, g, NodeMap::from_arrays({0, 0}, {0, kDummy})));
  EXPECT_FALSE(validate_node_map(g, g, NodeMap::identity(2, 3)));
  EXPECT_FALSE(validate_node_map(g, g, NodeMap::from_arrays({5, kDummy}, {kDummy, kDummy})));
}

TEST(PermuteGraph, IdentityPermutation) {
  const auto g = random_graph(5, 0.5, 3, 2);
  const std::vector<NodeId> perm{0, 1, 2, 3, 4};
  const auto [copy, witness] = permute_graph(g, perm);
  EXPECT_EQ(copy, g);
  EXPECT_EQ(witness, NodeMap::identity(5, 5));
}

TEST(PermuteGraph, ReversedPathIsIsomorphic) {
  const auto path = make_graph("p", {"a", "b", "c"}, {{0, 1, "x"}, {1, 2, "y"}});
  const std::vector<NodeId> perm{2, 1, 0};
  auto [copy, witness] = permute_graph(path, perm);
  EXPECT_EQ(copy.node_label(2), "a");
  EXPECT_TRUE(copy.has_edge(2, 1));
  EXPECT_TRUE(copy.has_edge(1, 0));
  EXPECT_EQ(induced_cost(path, copy, witness, kMuta), 0.0);
}

TEST(PermuteGraph, RandomWitnessCostsZero) {
  Rng rng(99);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = random_graph(3 + seed % 12, 0.35, 4, seed);
    std::vector<NodeId> perm(g.num_nodes());
    std::iota(perm.begin(), perm.end(), NodeId{0});
    rng.shuffle(std::span<NodeId>(perm));
    auto [copy, witness] = permute_graph(g, perm);
    EXPECT_TRUE(validate_node_map(g, copy, witness));
    EXPECT_EQ(induced_cost(g, copy, witness, kMuta), 0.0);
  }
}

TEST(PermuteGraph, RejectsNonBijection) {
  const auto g = random_graph(3, 0.5, 2, 1);
  const std::vector<NodeId> bad{0, 0, 1};
  EXPECT_THROW(permute_graph(g, bad), ParameterError);
  const std::vector<NodeId> short_perm{0, 1};
  EXPECT_THROW(permute_graph(g, short_perm), ParameterError);
}

}  // namespace
