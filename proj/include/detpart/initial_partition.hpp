#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "detpart/executor.hpp"
#include "detpart/hypergraph.hpp"
#include "detpart/params.hpp"

namespace detpart {

/// Balance goal of one bisection. Side i should hold `share[i]` of
/// share[0] + share[1] equal slices of the weight and must not exceed
/// `max_weight[i]`.
struct BisectionTarget {
  std::array<std::uint64_t, 2> share{1, 1};
  std::array<Weight, 2> max_weight{0, 0};

  /// Even split: both sides capped at floor((1 + epsilon) * total / 2).
  static BisectionTarget even(Weight total, Fraction epsilon);

  bool satisfied(const Partition& p) const noexcept {
    return p.part_weight(0) <= max_weight[0] && p.part_weight(1) <= max_weight[1];
  }
};

/// Cut decrease if each node alone moved to the other side. For a hyperedge
/// of weight w with n_i pins on side i, a pin on side i gains +w when it is
/// the only one there and -w when the hyperedge lies entirely on side i.
/// Throws InvalidParams unless p.k() == 2.
std::vector<Gain> compute_gains(const Hypergraph& h, const Partition& p, Executor& ex = Executor::serial());

/// Number of nodes moved per gain recomputation: ceil(sqrt(n)).
std::size_t batch_size(std::size_t n) noexcept;

/// Deterministic order for move candidates: gain descending, then id.
struct GainOrder {
  const std::vector<Gain>* gains;
  bool operator()(NodeId a, NodeId b) const noexcept {
    const Gain ga = (*gains)[a];
    const Gain gb = (*gains)[b];
    return ga != gb ? ga > gb : a < b;
  }
};

/// Grows side 0 from empty. Each round recomputes gains and moves the
/// ceil(sqrt(n)) best nodes of side 1 until side 0 reaches its target share
/// of the total weight.
Partition initial_partition(const Hypergraph& coarsest, const BisectionTarget& target,
                            Executor& ex = Executor::serial());

}  // namespace detpart
