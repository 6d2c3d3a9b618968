#include <gtest/gtest.h>

#include <algorithm>

#include "detpart/errors.hpp"
#include "detpart/hypergraph.hpp"
#include "support/generators.hpp"

namespace detpart {
namespace {

using testing::Rng;

TEST(Validate, EmptyGraphIsValid) {
  const Hypergraph h;
  EXPECT_EQ(h.num_nodes(), 0u);
  EXPECT_EQ(h.num_hedges(), 0u);
  EXPECT_TRUE(validate(h).empty());
}

TEST(Validate, MissingDualEntryIsReported) {
  // Hyperedge 0 = {0, 3}, but node 3 does not list hyperedge 0.
  const Hypergraph h = Hypergraph::from_raw({0, 2}, {0, 3}, {0, 1, 1, 1, 1}, {0}, {1}, {1, 1, 1, 1});
  const auto report = validate(h);
  EXPECT_NE(std::find(report.begin(), report.end(), "dual inconsistency at (0,3)"), report.end());
}

TEST(Validate, SixNodeExampleIsValid) {
  const Hypergraph h = testing::six_node_example();
  EXPECT_TRUE(validate(h).empty());
  ASSERT_EQ(h.num_hedges(), 4u);
  const auto h1 = h.pins(0);
  EXPECT_EQ(std::vector<NodeId>(h1.begin(), h1.end()), (std::vector<NodeId>{0, 2, 5}));
}

TEST(Validate, ZeroWeightsAndBadPinsAreReported) {
  const Hypergraph zero = Hypergraph::from_raw({0, 2}, {0, 1}, {0, 1, 2}, {0, 0}, {0}, {1, 0});
  EXPECT_EQ(validate(zero).size(), 2u);
  const Hypergraph unsorted = Hypergraph::from_raw({0, 2}, {1, 0}, {0, 1, 2}, {0, 0}, {1}, {1, 1});
  EXPECT_FALSE(validate(unsorted).empty());
}

TEST(Hypergraph, DuplicatePinsCollapse) {
  const Hypergraph h = Hypergraph::from_hedges(3, {{2, 0, 2, 0}, {1}});
  EXPECT_EQ(h.degree(0), 2u);
  EXPECT_EQ(h.pins(0)[0], 0u);
  EXPECT_EQ(h.pins(0)[1], 2u);
  EXPECT_EQ(h.node_degree(1), 1u);
  EXPECT_EQ(h.total_node_weight(), 3u);
  EXPECT_TRUE(validate(h).empty());
}

TEST(Hypergraph, PinOutOfRangeThrows) {
  EXPECT_THROW(Hypergraph::from_hedges(2, {{0, 2}}), MalformedInput);
}

TEST(Transpose, SingleEdge) {
  const Incidence t = transpose(std::vector<std::size_t>{0, 2}, std::vector<std::uint32_t>{0, 1}, 2);
  EXPECT_EQ(t.offsets, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(t.ids, (std::vector<std::uint32_t>{0, 0}));
}

TEST(Transpose, SharedNode) {
  const Incidence t = transpose(std::vector<std::size_t>{0, 2, 4}, std::vector<std::uint32_t>{0, 2, 1, 2}, 3);
  ASSERT_EQ(t.offsets.size(), 4u);
  EXPECT_EQ(std::vector<std::uint32_t>(t.ids.begin() + t.offsets[2], t.ids.begin() + t.offsets[3]),
            (std::vector<std::uint32_t>{0, 1}));
}

TEST(Transpose, OutOfRangeThrows) {
  EXPECT_THROW(transpose(std::vector<std::size_t>{0, 1}, std::vector<std::uint32_t>{5}, 3), MalformedInput);
}

TEST(Transpose, IsAnInvolution) {
  Rng rng(11);
  for (int round = 0; round < 200; ++round) {
    testing::RandomSpec spec;
    spec.min_nodes = spec.max_nodes = 10;
    spec.min_hedges = spec.max_hedges = 8;
    const Hypergraph h = testing::random_hypergraph(rng, spec);
    const Incidence forward{{h.hedge_offsets().begin(), h.hedge_offsets().end()},
                            {h.hedge_pins().begin(), h.hedge_pins().end()}};
    const Incidence dual = transpose(forward.offsets, forward.ids, h.num_nodes());
    EXPECT_EQ(dual.offsets, std::vector<std::size_t>(h.node_offsets().begin(), h.node_offsets().end()));
    EXPECT_EQ(transpose(dual.offsets, dual.ids, h.num_hedges()), forward);
    EXPECT_TRUE(validate(h).empty());
  }
}

TEST(Partition, ConstructionChecksIds) {
  const std::vector<Weight> w{1, 2, 3};
  EXPECT_THROW(Partition({0, 2, 1}, 2, w), InvalidParams);
  EXPECT_THROW(Partition({0, 1}, 2, w), InvalidParams);
  EXPECT_THROW(Partition({0, 0, 0}, 0, w), InvalidParams);
  const Partition p({0, 1, 1}, 2, w);
  EXPECT_EQ(p.part_weight(0), 1u);
  EXPECT_EQ(p.part_weight(1), 5u);
  EXPECT_EQ(p.total_weight(), 6u);
}

TEST(Partition, IncrementalWeightsMatchRecompute) {
  Rng rng(5);
  for (int round = 0; round < 100; ++round) {
    const Hypergraph h = testing::small_random(rng);
    const PartId k = static_cast<PartId>(testing::uniform(rng, 1, 4));
    Partition p(h, k);
    for (int step = 0; step < 50; ++step) {
      const auto v = static_cast<NodeId>(testing::uniform(rng, 0, h.num_nodes() - 1));
      p.move(v, static_cast<PartId>(testing::uniform(rng, 0, k - 1)), h.node_weight(v));
    }
    Partition fresh = p;
    fresh.recompute_weights(h.node_weights());
    EXPECT_EQ(fresh, p);
    EXPECT_EQ(p.total_weight(), h.total_node_weight());
  }
}

}  // namespace
}  // namespace detpart
