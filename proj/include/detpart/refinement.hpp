#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "detpart/coarsening.hpp"
#include "detpart/executor.hpp"
#include "detpart/hypergraph.hpp"
#include "detpart/initial_partition.hpp"

namespace detpart {

/// Lifts a partition of level.coarse onto the finer graph it was built from.
Partition project(const Partition& coarse, const CoarseningLevel& level, const Hypergraph& fine);

/// Optional instrumentation for refine().
struct RefineTrace {
  /// Every flipped node with the gain it had when its round was sorted.
  std::vector<std::pair<NodeId, Gain>> flips;
  /// Nodes flipped per side in each executed round.
  std::vector<std::size_t> swaps_per_round;
};

/// Gain-ordered swap refinement of a bipartition. Each round computes gains
/// once, collects the nodes with gain >= 0 on each side ordered by gain then
/// id, and flips the first min(|L0|, |L1|) of both lists. Gains are not
/// updated inside a round. A round with nothing to swap ends refinement.
void refine(const Hypergraph& h, Partition& p, unsigned iters, Executor& ex = Executor::serial(),
            RefineTrace* trace = nullptr);

struct RebalanceReport {
  bool balanced = true;
  std::size_t moves = 0;
};

/// Moves nodes off the overweight side until `target` holds. Candidates are
/// ordered by gain then id; gains are recomputed after every ceil(sqrt(n))
/// moves and the loop stops on the move that restores balance. A node whose
/// move would overload the receiving side is skipped. When no node can move,
/// the partition is left as is and the report says balanced = false.
RebalanceReport rebalance(const Hypergraph& h, Partition& p, const BisectionTarget& target,
                          Executor& ex = Executor::serial());

/// Even bisection bound (1 + epsilon) * total / 2.
RebalanceReport rebalance(const Hypergraph& h, Partition& p, Fraction epsilon,
                          Executor& ex = Executor::serial());

}  // namespace detpart
