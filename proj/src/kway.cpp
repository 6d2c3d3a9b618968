#include "detpart/kway.hpp"

#include <algorithm>
#include <numeric>

#include "detpart/errors.hpp"
#include "detpart/metrics.hpp"
#include "detpart/refinement.hpp"

namespace detpart {

BipartitionResult bipartition(const Hypergraph& g, const Params& params, const BisectionTarget& target,
                              Executor& ex, const PipelineObserver* observer) {
  const MultilevelHierarchy hierarchy = coarsen_chain(g, params, ex);
  if (observer && observer->on_hierarchy) observer->on_hierarchy(hierarchy);

  // Node weight is conserved by coarsening, so the same caps apply at every level.
  Partition p = initial_partition(hierarchy.coarsest(), target, ex);
  for (std::size_t depth = hierarchy.depth();; --depth) {
    const Hypergraph& graph = hierarchy.graph(depth);
    if (depth < hierarchy.depth()) p = project(p, hierarchy.levels()[depth], graph);
    refine(graph, p, params.refine_iters, ex);
    rebalance(graph, p, target, ex);
    if (depth == 0) break;
  }

  BipartitionResult result;
  result.coarsening_levels = hierarchy.depth();
  result.balanced = target.satisfied(p);
  result.partition = std::move(p);
  return result;
}

BipartitionResult bipartition(const Hypergraph& g, const Params& params, Executor& ex,
                              const PipelineObserver* observer) {
  return bipartition(g, params, BisectionTarget::even(g.total_node_weight(), params.epsilon), ex, observer);
}

Hypergraph induced_subgraph(const Hypergraph& g, std::span<const NodeId> nodes) {
  std::vector<NodeId> local(g.num_nodes(), kInvalidNode);
  for (std::size_t i = 0; i < nodes.size(); ++i) local[nodes[i]] = static_cast<NodeId>(i);

  std::vector<HedgeId> touched;
  for (NodeId v : nodes) {
    const auto hedges = g.incident_hedges(v);
    touched.insert(touched.end(), hedges.begin(), hedges.end());
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

  std::vector<std::size_t> offsets{0};
  std::vector<NodeId> pins;
  std::vector<Weight> hedge_weights;
  for (HedgeId e : touched) {
    const auto fine_pins = g.pins(e);
    if (fine_pins.size() < 2) continue;
    const bool inside = std::all_of(fine_pins.begin(), fine_pins.end(),
                                    [&](NodeId v) { return local[v] != kInvalidNode; });
    if (!inside) continue;
    // Local ids keep the original order, so pins stay sorted.
    for (NodeId v : fine_pins) pins.push_back(local[v]);
    offsets.push_back(pins.size());
    hedge_weights.push_back(g.hedge_weight(e));
  }

  std::vector<Weight> node_weights(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) node_weights[i] = g.node_weight(nodes[i]);

  Incidence dual = transpose(offsets, pins, nodes.size());
  return Hypergraph::from_raw(std::move(offsets), std::move(pins), std::move(dual.offsets),
                              std::move(dual.ids), std::move(hedge_weights), std::move(node_weights));
}

namespace {

struct Pending {
  PartId first_part = 0;
  PartId parts = 1;
  std::vector<NodeId> nodes;  // ascending original ids
};

// Each side must keep at least as many nodes as final parts it still owes.
void ensure_node_counts(const Hypergraph& h, Partition& p, const std::array<std::uint64_t, 2>& need,
                        Executor& ex) {
  for (PartId side = 0; side < 2; ++side) {
    std::size_t have = 0;
    for (NodeId v = 0; v < h.num_nodes(); ++v) have += p[v] == side;
    if (have >= need[side]) continue;
    const std::vector<Gain> gains = compute_gains(h, p, ex);
    std::vector<NodeId> donors;
    for (NodeId v = 0; v < h.num_nodes(); ++v) {
      if (p[v] != side) donors.push_back(v);
    }
    std::sort(donors.begin(), donors.end(), GainOrder{&gains});
    for (std::size_t i = 0; have < need[side] && i < donors.size(); ++i, ++have) {
      p.move(donors[i], side, h.node_weight(donors[i]));
    }
  }
}

}  // namespace

KwayResult kway_partition(const Hypergraph& g, const Params& params, Executor& ex,
                          const PipelineObserver* observer) {
  params.check();
  if (params.k > g.num_nodes()) throw InvalidParams("more parts than nodes");

  KwayResult result;
  std::vector<PartId> parts(g.num_nodes(), 0);

  const Weight part_cap = balance_cap(g.total_node_weight(), params.k, params.epsilon);
  std::vector<Pending> active;
  if (params.k > 1) {
    Pending all{0, params.k, std::vector<NodeId>(g.num_nodes())};
    std::iota(all.nodes.begin(), all.nodes.end(), NodeId{0});
    active.push_back(std::move(all));
  }

  while (!active.empty()) {
    ++result.bisection_levels;
    if (observer && observer->on_bisection_level) {
      observer->on_bisection_level(result.bisection_levels, active.size());
    }

    std::vector<Pending> next;
    for (const Pending& task : active) {
      // The first level works on the input itself so that k = 2 is a plain bisection.
      const bool whole = result.bisection_levels == 1;
      const Hypergraph sub = whole ? Hypergraph{} : induced_subgraph(g, task.nodes);
      const Hypergraph& graph = whole ? g : sub;

      const std::array<std::uint64_t, 2> share{(task.parts + 1) / 2, task.parts / 2};
      const Weight w = graph.total_node_weight();
      BisectionTarget target{share, {}};
      for (int i = 0; i < 2; ++i) {
        target.max_weight[i] =
            std::min(scaled_cap(w, share[i], task.parts, params.epsilon), part_cap * share[i]);
      }
      // Caps relative to this subgraph can round below its weight on tiny
      // inputs; the global per-part caps are then the only constraint.
      if (target.max_weight[0] + target.max_weight[1] < w) {
        target.max_weight = {part_cap * share[0], part_cap * share[1]};
      }

      BipartitionResult split = bipartition(graph, params, target, ex, observer);
      ensure_node_counts(graph, split.partition, share, ex);
      result.coarsening_levels = std::max(result.coarsening_levels, split.coarsening_levels);

      Pending side[2] = {{task.first_part, static_cast<PartId>(share[0]), {}},
                         {static_cast<PartId>(task.first_part + share[0]), static_cast<PartId>(share[1]), {}}};
      for (std::size_t i = 0; i < task.nodes.size(); ++i) {
        side[split.partition[static_cast<NodeId>(i)]].nodes.push_back(task.nodes[i]);
      }
      for (auto& s : side) {
        for (NodeId v : s.nodes) parts[v] = s.first_part;
        if (s.parts > 1) next.push_back(std::move(s));
      }
    }
    active = std::move(next);
  }

  result.partition = Partition(std::move(parts), params.k, g.node_weights());
  return result;
}

}  // namespace detpart
