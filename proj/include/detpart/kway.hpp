#pragma once

#include <functional>

#include "detpart/coarsening.hpp"
#include "detpart/executor.hpp"
#include "detpart/hypergraph.hpp"
#include "detpart/initial_partition.hpp"
#include "detpart/params.hpp"

namespace detpart {

/// Hooks for tests and tooling; every member is optional.
struct PipelineObserver {
  /// Called with each hierarchy after it is built, before refinement.
  std::function<void(const MultilevelHierarchy&)> on_hierarchy;
  /// Called once per executed bisection level with the level number (1-based)
  /// and the number of subgraphs bisected at that level.
  std::function<void(unsigned level, std::size_t subgraphs)> on_bisection_level;
};

struct BipartitionResult {
  Partition partition;
  std::size_t coarsening_levels = 0;
  bool balanced = false;
};

/// Multilevel bisection: coarsen, split the coarsest graph, then refine and
/// rebalance at every level on the way back to `g`.
BipartitionResult bipartition(const Hypergraph& g, const Params& params, const BisectionTarget& target,
                              Executor& ex = Executor::serial(), const PipelineObserver* observer = nullptr);

/// Even bisection under params.epsilon.
BipartitionResult bipartition(const Hypergraph& g, const Params& params, Executor& ex = Executor::serial(),
                              const PipelineObserver* observer = nullptr);

struct KwayResult {
  Partition partition;
  unsigned bisection_levels = 0;
  /// Deepest coarsening hierarchy built by any bisection.
  std::size_t coarsening_levels = 0;
};

/// Level-synchronous recursive bisection into params.k parts.
///
/// A subgraph that must end up in k_j parts is split ceil(k_j/2) : floor(k_j/2);
/// side 0 takes the lower part ids. Subgraphs at a level are the induced
/// hypergraphs of the current parts with ids compacted in ascending order;
/// hyperedges that leave the part or keep fewer than two pins are dropped.
///
/// Throws InvalidParams when k exceeds the node count.
KwayResult kway_partition(const Hypergraph& g, const Params& params, Executor& ex = Executor::serial(),
                          const PipelineObserver* observer = nullptr);

/// Induced sub-hypergraph on `nodes` (ascending original ids), keeping only
/// hyperedges whose pins all lie in `nodes` and that have two or more pins.
Hypergraph induced_subgraph(const Hypergraph& g, std::span<const NodeId> nodes);

}  // namespace detpart
