#include <gtest/gtest.h>

#include <numeric>

#include "detpart/coarsening.hpp"
#include "detpart/metrics.hpp"
#include "detpart/refinement.hpp"
#include "support/generators.hpp"
#include "support/reference.hpp"

namespace detpart {
namespace {

constexpr Policy kPolicies[] = {Policy::LDH, Policy::HDH, Policy::LWD, Policy::HWD, Policy::RAND};

Weight weight_sum(std::span<const Weight> w) { return std::accumulate(w.begin(), w.end(), Weight{0}); }

void expect_level_invariants(const Hypergraph& fine, const CoarseningLevel& level) {
  const Hypergraph& coarse = level.coarse;
  EXPECT_TRUE(validate(coarse).empty());
  ASSERT_EQ(level.node_parent.size(), fine.num_nodes());
  std::vector<bool> hit(coarse.num_nodes(), false);
  for (NodeId p : level.node_parent) {
    ASSERT_LT(p, coarse.num_nodes());
    hit[p] = true;
  }
  EXPECT_TRUE(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
  EXPECT_EQ(coarse.total_node_weight(), fine.total_node_weight());
  EXPECT_EQ(weight_sum(coarse.node_weights()), weight_sum(fine.node_weights()));
  for (HedgeId e = 0; e < coarse.num_hedges(); ++e) EXPECT_GE(coarse.degree(e), 2u);
  for (HedgeId e = 0; e < fine.num_hedges(); ++e) {
    std::set<NodeId> parents;
    for (NodeId v : fine.pins(e)) parents.insert(level.node_parent[v]);
    EXPECT_EQ(level.hedge_parent[e] == kDroppedHedge, parents.size() <= 1);
  }
}

TEST(CoarsenOnce, NineNodeExampleKeepsOnlyTheBridge) {
  const Hypergraph fine = testing::nine_node_example();
  const CoarseningLevel level = coarsen_once(fine, Policy::LDH);
  expect_level_invariants(fine, level);
  EXPECT_EQ(level.coarse.num_hedges(), 1u);
  EXPECT_EQ(level.hedge_parent, (std::vector<HedgeId>{kDroppedHedge, 0, kDroppedHedge}));
  // {0,1,2} and {6,7,8} merge; 3, 4, 5 match the bridge and merge too.
  EXPECT_EQ(level.node_parent, (std::vector<NodeId>{0, 0, 0, 1, 1, 1, 2, 2, 2}));
  const auto pins = level.coarse.pins(0);
  EXPECT_EQ(std::vector<NodeId>(pins.begin(), pins.end()), (std::vector<NodeId>{0, 1, 2}));
}

TEST(CoarsenOnce, IsolatedNodesSelfMerge) {
  const Hypergraph fine = Hypergraph::from_hedges(5, {}, {}, {1, 2, 3, 4, 5});
  const CoarseningLevel level = coarsen_once(fine, Policy::LDH);
  EXPECT_EQ(level.coarse.num_nodes(), 5u);
  EXPECT_EQ(level.coarse.num_hedges(), 0u);
  EXPECT_EQ(level.node_parent, (std::vector<NodeId>{0, 1, 2, 3, 4}));
  EXPECT_EQ(level.coarse.node_weight(3), 4u);
}

TEST(CoarsenOnce, SingletonJoinsLightestGroupInItsHedge) {
  // Node 4 matches e2 = {1,3,4} alone (e2 is the only hedge it has); nodes
  // 0,1 form group A (weight 2) via e0 and 2,3 group B (weight 5) via e1.
  const Hypergraph fine =
      Hypergraph::from_hedges(5, {{0, 1}, {2, 3}, {1, 3, 4}}, {}, {1, 1, 2, 3, 7});
  const CoarseningLevel level = coarsen_once(fine, Policy::LDH);
  EXPECT_EQ(level.node_parent, (std::vector<NodeId>{0, 0, 1, 1, 0}));
  EXPECT_EQ(level.coarse.node_weight(0), 9u);
  EXPECT_EQ(level.coarse.node_weight(1), 5u);
}

TEST(CoarsenOnce, RandomTwelveNodeConservation) {
  testing::Rng rng(12);
  for (int round = 0; round < 200; ++round) {
    testing::RandomSpec spec;
    spec.min_nodes = spec.max_nodes = 12;
    const Hypergraph fine = testing::random_hypergraph(rng, spec);
    for (Policy policy : kPolicies) {
      const CoarseningLevel level = coarsen_once(fine, policy);
      expect_level_invariants(fine, level);
      EXPECT_EQ(level.coarse.total_node_weight(), 12u);
    }
  }
}

TEST(CoarsenOnce, MatchesSerialReference) {
  testing::Rng rng(77);
  Executor ex(4, 1);
  for (int round = 0; round < 300; ++round) {
    const Hypergraph fine = testing::small_random(rng);
    for (Policy policy : kPolicies) {
      const CoarseningLevel level = coarsen_once(fine, policy);
      const reference::Contraction ref = reference::coarsen(fine, policy);
      ASSERT_EQ(level.node_parent, ref.parent);
      ASSERT_EQ(level.hedge_parent, ref.hedge_parent);
      const Hypergraph expected = Hypergraph::from_hedges(ref.coarse_node_weights.size(), ref.coarse_hedges,
                                                          ref.coarse_hedge_weights, ref.coarse_node_weights);
      ASSERT_EQ(level.coarse, expected);
      ASSERT_EQ(coarsen_once(fine, policy, ex), level);
    }
  }
}

TEST(CoarsenOnce, ProjectionPreservesCut) {
  testing::Rng rng(31);
  for (int round = 0; round < 200; ++round) {
    const Hypergraph fine = testing::small_random(rng);
    const CoarseningLevel level = coarsen_once(fine, Policy::RAND);
    for (int trial = 0; trial < 5; ++trial) {
      const Partition coarse = testing::random_bipartition(rng, level.coarse);
      const Partition lifted = project(coarse, level, fine);
      EXPECT_EQ(cut(fine, lifted), cut(level.coarse, coarse));
      EXPECT_EQ(lifted.part_weight(0), coarse.part_weight(0));
    }
  }
}

TEST(CoarsenChain, StopsAtCap) {
  const Hypergraph g = testing::netlist_like(3, 2000, 2000);
  Params params;
  params.coarse_to = 1;
  EXPECT_EQ(coarsen_chain(g, params).depth(), 1u);
  params.coarse_to = 3;
  EXPECT_EQ(coarsen_chain(g, params).depth(), 3u);
}

TEST(CoarsenChain, NoHedgesMeansNoLevels) {
  const Hypergraph g = Hypergraph::from_hedges(7, {});
  const MultilevelHierarchy chain = coarsen_chain(g, Params{});
  EXPECT_EQ(chain.depth(), 0u);
  EXPECT_EQ(&chain.coarsest(), &g);
}

TEST(CoarsenChain, LevelsShrinkAndConserveWeight) {
  testing::Rng rng(4);
  for (int round = 0; round < 50; ++round) {
    testing::RandomSpec spec;
    spec.min_nodes = 20;
    spec.max_nodes = 200;
    spec.max_hedges = 200;
    spec.max_node_weight = 5;
    const Hypergraph g = testing::random_hypergraph(rng, spec);
    const MultilevelHierarchy chain = coarsen_chain(g, Params{});
    EXPECT_LE(chain.depth(), 25u);
    for (std::size_t i = 1; i <= chain.depth(); ++i) {
      EXPECT_LT(chain.graph(i).num_nodes(), chain.graph(i - 1).num_nodes());
      EXPECT_EQ(chain.graph(i).total_node_weight(), g.total_node_weight());
      expect_level_invariants(chain.graph(i - 1), chain.levels()[i - 1]);
    }
    // Stopped because of the cap, a hedge-free graph, or a fixpoint.
    if (chain.depth() < 25 && chain.coarsest().num_hedges() > 0) {
      EXPECT_EQ(coarsen_once(chain.coarsest(), Policy::LDH).coarse.num_nodes(), chain.coarsest().num_nodes());
    }
  }
}

}  // namespace
}  // namespace detpart
