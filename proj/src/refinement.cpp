#include "detpart/refinement.hpp"

#include <algorithm>

#include "detpart/errors.hpp"

namespace detpart {

Partition project(const Partition& coarse, const CoarseningLevel& level, const Hypergraph& fine) {
  std::vector<PartId> parts(fine.num_nodes());
  for (std::size_t v = 0; v < parts.size(); ++v) parts[v] = coarse[level.node_parent[v]];
  return Partition(std::move(parts), coarse.k(), fine.node_weights());
}

void refine(const Hypergraph& h, Partition& p, unsigned iters, Executor& ex, RefineTrace* trace) {
  if (p.k() != 2) throw InvalidParams("refine expects a bipartition");
  std::vector<NodeId> movable[2];
  for (unsigned round = 0; round < iters; ++round) {
    const std::vector<Gain> gains = compute_gains(h, p, ex);
    movable[0].clear();
    movable[1].clear();
    for (NodeId v = 0; v < h.num_nodes(); ++v) {
      if (gains[v] >= 0) movable[p[v]].push_back(v);
    }
    const std::size_t swaps = std::min(movable[0].size(), movable[1].size());
    if (swaps == 0) break;
    for (auto& list : movable) ex.sort(list, GainOrder{&gains});

    if (trace) {
      trace->swaps_per_round.push_back(swaps);
      for (const auto& list : movable) {
        for (std::size_t i = 0; i < swaps; ++i) trace->flips.emplace_back(list[i], gains[list[i]]);
      }
    }
    for (PartId side = 0; side < 2; ++side) {
      for (std::size_t i = 0; i < swaps; ++i) {
        const NodeId v = movable[side][i];
        p.move(v, 1 - side, h.node_weight(v));
      }
    }
  }
}

RebalanceReport rebalance(const Hypergraph& h, Partition& p, const BisectionTarget& target, Executor& ex) {
  if (p.k() != 2) throw InvalidParams("rebalance expects a bipartition");
  RebalanceReport report;
  if (target.satisfied(p)) return report;

  // At most one side can exceed its cap while the caps sum to at least the
  // total; moves never overload the light side, so `heavy` stays fixed.
  const PartId heavy = p.part_weight(0) > target.max_weight[0] ? 0 : 1;
  const PartId light = 1 - heavy;
  const std::size_t batch = batch_size(h.num_nodes());

  std::vector<NodeId> candidates;
  while (!target.satisfied(p)) {
    const std::vector<Gain> gains = compute_gains(h, p, ex);
    candidates.clear();
    for (NodeId v = 0; v < h.num_nodes(); ++v) {
      if (p[v] == heavy) candidates.push_back(v);
    }
    ex.sort(candidates, GainOrder{&gains});

    std::size_t moved = 0;
    for (NodeId v : candidates) {
      if (moved == batch || target.satisfied(p)) break;
      if (p.part_weight(light) + h.node_weight(v) > target.max_weight[light]) continue;
      p.move(v, light, h.node_weight(v));
      ++moved;
    }
    report.moves += moved;
    if (moved == 0) break;
  }
  report.balanced = target.satisfied(p);
  return report;
}

RebalanceReport rebalance(const Hypergraph& h, Partition& p, Fraction epsilon, Executor& ex) {
  return rebalance(h, p, BisectionTarget::even(h.total_node_weight(), epsilon), ex);
}

}  // namespace detpart
