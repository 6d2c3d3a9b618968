#include "detpart/coarsening.hpp"

#include <algorithm>

#include "detpart/matching.hpp"

namespace detpart {

CoarseningLevel coarsen_once(const Hypergraph& fine, Policy policy, Executor& ex) {
  const std::size_t n = fine.num_nodes();
  const std::size_t m = fine.num_hedges();
  const MatchingState match = compute_matching(fine, policy, ex);

  // Matched-set size and weight per hyperedge. Only pins can be matched to a
  // hyperedge, so scanning pins finds every member.
  std::vector<std::uint32_t> set_size(m, 0);
  std::vector<Weight> set_weight(m, 0);
  ex.for_each(m, [&](std::size_t e) {
    std::uint32_t size = 0;
    Weight weight = 0;
    for (NodeId v : fine.pins(static_cast<HedgeId>(e))) {
      if (match.node_hedge[v] == e) {
        ++size;
        weight += fine.node_weight(v);
      }
    }
    set_size[e] = size;
    set_weight[e] = weight;
  });

  std::vector<NodeId> group_id(m, kInvalidNode);
  NodeId num_groups = 0;
  for (std::size_t e = 0; e < m; ++e) {
    if (set_size[e] > 1) group_id[e] = num_groups++;
  }

  auto group_of = [&](NodeId v) -> NodeId {
    const HedgeId e = match.node_hedge[v];
    return e == kInvalidHedge ? kInvalidNode : group_id[e];
  };

  // Resolve each node against the merged groups; kInvalidNode = self merge.
  std::vector<NodeId> parent(n, kInvalidNode);
  ex.for_each(n, [&](std::size_t vi) {
    const auto v = static_cast<NodeId>(vi);
    const HedgeId e = match.node_hedge[v];
    if (e == kInvalidHedge) return;
    if (group_id[e] != kInvalidNode) {
      parent[v] = group_id[e];
      return;
    }
    NodeId best = kInvalidNode;
    Weight best_weight = 0;
    for (NodeId u : fine.pins(e)) {
      const NodeId g = group_of(u);
      if (g == kInvalidNode) continue;
      const Weight w = set_weight[match.node_hedge[u]];
      if (best == kInvalidNode || w < best_weight || (w == best_weight && g < best)) {
        best = g;
        best_weight = w;
      }
    }
    parent[v] = best;
  });

  NodeId next_id = num_groups;
  for (std::size_t v = 0; v < n; ++v) {
    if (parent[v] == kInvalidNode) parent[v] = next_id++;
  }
  const std::size_t num_coarse = next_id;

  std::vector<Weight> coarse_weight(num_coarse, 0);
  for (std::size_t v = 0; v < n; ++v) coarse_weight[parent[v]] += fine.node_weight(static_cast<NodeId>(v));

  // Coarse hyperedges: distinct parent sets, counted first, then written.
  std::vector<std::size_t> coarse_degree(m, 0);
  ex.for_range(m, [&](std::size_t b, std::size_t end) {
    std::vector<NodeId> buf;
    for (std::size_t e = b; e < end; ++e) {
      buf.clear();
      for (NodeId v : fine.pins(static_cast<HedgeId>(e))) buf.push_back(parent[v]);
      std::sort(buf.begin(), buf.end());
      const std::size_t distinct = std::unique(buf.begin(), buf.end()) - buf.begin();
      coarse_degree[e] = distinct > 1 ? distinct : 0;
    }
  });

  CoarseningLevel level;
  level.hedge_parent.assign(m, kDroppedHedge);
  std::vector<std::size_t> offsets{0};
  std::vector<std::size_t> fine_start(m, 0);
  std::vector<Weight> hedge_weights;
  HedgeId num_coarse_hedges = 0;
  for (std::size_t e = 0; e < m; ++e) {
    if (coarse_degree[e] == 0) continue;
    level.hedge_parent[e] = num_coarse_hedges++;
    fine_start[e] = offsets.back();
    offsets.push_back(offsets.back() + coarse_degree[e]);
    hedge_weights.push_back(fine.hedge_weight(static_cast<HedgeId>(e)));
  }

  std::vector<NodeId> pins(offsets.back());
  ex.for_range(m, [&](std::size_t b, std::size_t end) {
    std::vector<NodeId> buf;
    for (std::size_t e = b; e < end; ++e) {
      if (level.hedge_parent[e] == kDroppedHedge) continue;
      buf.clear();
      for (NodeId v : fine.pins(static_cast<HedgeId>(e))) buf.push_back(parent[v]);
      std::sort(buf.begin(), buf.end());
      buf.erase(std::unique(buf.begin(), buf.end()), buf.end());
      std::copy(buf.begin(), buf.end(), pins.begin() + fine_start[e]);
    }
  });

  Incidence dual = transpose(offsets, pins, num_coarse);
  level.coarse = Hypergraph::from_raw(std::move(offsets), std::move(pins), std::move(dual.offsets),
                                      std::move(dual.ids), std::move(hedge_weights),
                                      std::move(coarse_weight));
  level.node_parent = std::move(parent);
  return level;
}

MultilevelHierarchy coarsen_chain(const Hypergraph& g, const Params& params, Executor& ex) {
  MultilevelHierarchy hierarchy(g);
  while (hierarchy.depth() < params.coarse_to) {
    const Hypergraph& fine = hierarchy.coarsest();
    if (fine.num_hedges() == 0) break;
    CoarseningLevel level = coarsen_once(fine, params.policy, ex);
    if (level.coarse.num_nodes() == fine.num_nodes()) break;
    hierarchy.push(std::move(level));
  }
  return hierarchy;
}

}  // namespace detpart
