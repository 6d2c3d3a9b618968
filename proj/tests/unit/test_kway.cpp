#include <gtest/gtest.h>

#include <set>

#include "detpart/errors.hpp"
#include "detpart/kway.hpp"
#include "detpart/metrics.hpp"
#include "support/generators.hpp"

namespace detpart {
namespace {

std::vector<PartId> parts_of(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

unsigned ceil_log2(unsigned k) {
  unsigned levels = 0;
  while ((1u << levels) < k) ++levels;
  return levels;
}

TEST(Bipartition, SingleNode) {
  const Hypergraph h = Hypergraph::from_hedges(1, {});
  const BipartitionResult r = bipartition(h, Params{});
  EXPECT_EQ(parts_of(r.partition), (std::vector<PartId>{0}));
}

TEST(Bipartition, TwoCliquesSplitCleanly) {
  std::vector<std::vector<NodeId>> hedges;
  for (NodeId base : {0u, 6u}) {
    for (NodeId a = 0; a < 6; ++a) {
      for (NodeId b = a + 1; b < 6; ++b) hedges.push_back({base + a, base + b});
    }
  }
  const Hypergraph h = Hypergraph::from_hedges(12, hedges);
  const BipartitionResult r = bipartition(h, Params{});
  EXPECT_EQ(cut(h, r.partition), 0u);
  EXPECT_EQ(r.partition.part_weight(0), 6u);
  EXPECT_TRUE(r.balanced);
}

TEST(Bipartition, ReportedStateIsConsistent) {
  testing::Rng rng(17);
  for (int round = 0; round < 100; ++round) {
    testing::RandomSpec spec;
    spec.min_nodes = 2;
    spec.max_nodes = 150;
    spec.max_hedges = 200;
    const Hypergraph h = testing::random_hypergraph(rng, spec);
    const BipartitionResult r = bipartition(h, Params{});
    Partition fresh = r.partition;
    fresh.recompute_weights(h.node_weights());
    EXPECT_EQ(fresh, r.partition);
    const bool feasible = 2 * balance_cap(h.total_node_weight(), 2, Params{}.epsilon) >= h.total_node_weight();
    EXPECT_EQ(r.balanced, feasible);
    EXPECT_EQ(imbalance(r.partition).balanced(Params{}.epsilon), feasible);
  }
}

TEST(Kway, OnePartIsAllZeros) {
  const Hypergraph h = testing::nine_node_example();
  Params params;
  params.k = 1;
  const KwayResult r = kway_partition(h, params);
  EXPECT_EQ(parts_of(r.partition), std::vector<PartId>(9, 0));
  EXPECT_EQ(r.bisection_levels, 0u);
}

TEST(Kway, FourIsolatedNodes) {
  const Hypergraph h = Hypergraph::from_hedges(4, {});
  Params params;
  params.k = 4;
  const KwayResult r = kway_partition(h, params);
  EXPECT_EQ(std::set<PartId>(r.partition.parts().begin(), r.partition.parts().end()).size(), 4u);
  EXPECT_EQ(cut(h, r.partition), 0u);
}

TEST(Kway, MorePartsThanNodes) {
  Params params;
  params.k = 5;
  EXPECT_THROW(kway_partition(Hypergraph::from_hedges(4, {}), params), InvalidParams);
}

TEST(Kway, ThreeWaySchedule) {
  const Hypergraph h = testing::netlist_like(5, 300, 300);
  Params params;
  params.k = 3;
  std::vector<std::size_t> per_level;
  PipelineObserver observer;
  observer.on_bisection_level = [&](unsigned, std::size_t subgraphs) { per_level.push_back(subgraphs); };
  const KwayResult r = kway_partition(h, params, Executor::serial(), &observer);
  EXPECT_EQ(r.bisection_levels, 2u);
  EXPECT_EQ(per_level, (std::vector<std::size_t>{1, 1}));
  // Parts 0 and 1 come from the 2-part side of a 2:1 split.
  EXPECT_LE(r.partition.part_weight(2), balance_cap(300, 3, params.epsilon));
  EXPECT_GE(r.partition.part_weight(0) + r.partition.part_weight(1), 180u);
}

TEST(Kway, LevelCountAndPartCoverage) {
  const Hypergraph h = testing::netlist_like(9, 500, 500);
  for (PartId k : {2u, 3u, 4u, 5u, 7u, 8u, 16u}) {
    Params params;
    params.k = k;
    const KwayResult r = kway_partition(h, params);
    EXPECT_EQ(r.bisection_levels, ceil_log2(k)) << "k=" << k;
    const Weight cap = balance_cap(h.total_node_weight(), k, params.epsilon);
    for (PartId i = 0; i < k; ++i) {
      EXPECT_GT(r.partition.part_weight(i), 0u) << "k=" << k << " part " << i;
      EXPECT_LE(r.partition.part_weight(i), cap) << "k=" << k << " part " << i;
    }
  }
}

TEST(Kway, TwoWayEqualsBipartition) {
  const Hypergraph h = testing::netlist_like(11, 400, 400);
  const KwayResult k2 = kway_partition(h, Params{});
  EXPECT_EQ(k2.partition, bipartition(h, Params{}).partition);
  EXPECT_EQ(k2.bisection_levels, 1u);
}

TEST(Kway, TinyGraphsUseEveryPart) {
  testing::Rng rng(23);
  for (int round = 0; round < 200; ++round) {
    testing::RandomSpec spec;
    spec.min_nodes = 1;
    spec.max_nodes = 20;
    const Hypergraph h = testing::random_hypergraph(rng, spec);
    Params params;
    params.k = static_cast<PartId>(testing::uniform(rng, 1, h.num_nodes()));
    const KwayResult r = kway_partition(h, params);
    const std::set<PartId> used(r.partition.parts().begin(), r.partition.parts().end());
    EXPECT_EQ(used.size(), params.k);
    EXPECT_EQ(r.bisection_levels, ceil_log2(params.k));
  }
}

TEST(Kway, IdenticalAcrossThreadCounts) {
  const Hypergraph h = testing::netlist_like(13, 6000, 6000);
  for (PartId k : {2u, 5u}) {
    for (Policy policy : {Policy::LDH, Policy::RAND}) {
      Params params;
      params.k = k;
      params.policy = policy;
      const Partition base = kway_partition(h, params).partition;
      for (unsigned threads : {2u, 4u, 8u}) {
        Executor ex(threads, 32);
        EXPECT_EQ(kway_partition(h, params, ex).partition, base);
      }
    }
  }
}

TEST(InducedSubgraph, KeepsInternalHedges) {
  const Hypergraph g = Hypergraph::from_hedges(6, {{0, 1}, {1, 4}, {3, 4, 5}, {4}, {3, 5}}, {1, 2, 3, 4, 5},
                                               {1, 2, 3, 4, 5, 6});
  const std::vector<NodeId> nodes{1, 3, 4, 5};
  const Hypergraph sub = induced_subgraph(g, nodes);
  EXPECT_TRUE(validate(sub).empty());
  EXPECT_EQ(sub.num_nodes(), 4u);
  ASSERT_EQ(sub.num_hedges(), 3u);
  EXPECT_EQ(sub.hedge_weight(0), 2u);
  EXPECT_EQ(std::vector<NodeId>(sub.pins(1).begin(), sub.pins(1).end()), (std::vector<NodeId>{1, 2, 3}));
  EXPECT_EQ(sub.hedge_weight(2), 5u);
  EXPECT_EQ(sub.node_weight(0), 2u);
  EXPECT_EQ(sub.total_node_weight(), 17u);
}

}  // namespace
}  // namespace detpart
