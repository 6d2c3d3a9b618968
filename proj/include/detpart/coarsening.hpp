#pragma once

#include <functional>
#include <vector>

#include "detpart/executor.hpp"
#include "detpart/hypergraph.hpp"
#include "detpart/params.hpp"

namespace detpart {

/// Marks a fine hyperedge whose pins all collapsed into one coarse node.
inline constexpr HedgeId kDroppedHedge = kInvalidHedge;

/// One contraction step: fine-to-coarse maps and the coarse graph.
struct CoarseningLevel {
  std::vector<NodeId> node_parent;
  std::vector<HedgeId> hedge_parent;
  Hypergraph coarse;

  bool operator==(const CoarseningLevel&) const = default;
};

/// Contracts every multi-node matching group into one node.
///
/// Groups with two or more members become coarse nodes, numbered in
/// hyperedge-id order. A node that is alone in its matched hyperedge joins
/// the lightest group node found among that hyperedge's pins (weights taken
/// before any singleton joins, ties to the smaller coarse id), or stays on
/// its own when there is none. Nodes left on their own, including degree-0
/// nodes, are numbered after the groups in fine-id order.
///
/// A fine hyperedge survives iff its pins map to two or more coarse nodes;
/// it keeps its weight and coarse hyperedges follow fine-id order.
CoarseningLevel coarsen_once(const Hypergraph& fine, Policy policy, Executor& ex = Executor::serial());

/// Chain of contractions from an original graph down to the coarsest one.
/// Does not own the original, which must outlive the hierarchy.
class MultilevelHierarchy {
 public:
  explicit MultilevelHierarchy(const Hypergraph& original) : original_(original) {}

  const Hypergraph& original() const noexcept { return original_.get(); }
  const std::vector<CoarseningLevel>& levels() const noexcept { return levels_; }
  std::size_t depth() const noexcept { return levels_.size(); }

  /// Graph at depth i: 0 is the original, depth() the coarsest.
  const Hypergraph& graph(std::size_t i) const noexcept {
    return i == 0 ? original_.get() : levels_[i - 1].coarse;
  }
  const Hypergraph& coarsest() const noexcept { return graph(levels_.size()); }

  void push(CoarseningLevel level) { levels_.push_back(std::move(level)); }

 private:
  std::reference_wrapper<const Hypergraph> original_;
  std::vector<CoarseningLevel> levels_;
};

/// Applies coarsen_once until `params.coarse_to` levels exist, a step leaves
/// the node count unchanged (that step is discarded), or no hyperedge is left.
MultilevelHierarchy coarsen_chain(const Hypergraph& g, const Params& params,
                                  Executor& ex = Executor::serial());

}  // namespace detpart
