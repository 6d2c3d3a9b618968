#pragma once

#include "detpart/executor.hpp"
#include "detpart/hypergraph.hpp"
#include "detpart/params.hpp"

namespace detpart {

/// Number of distinct parts among the pins of `e`.
PartId lambda(const Hypergraph& h, HedgeId e, const Partition& p);

/// Weighted connectivity cut: sum over hyperedges of weight * (lambda - 1).
Weight cut(const Hypergraph& h, const Partition& p, Executor& ex = Executor::serial());

/// Largest part weight w that satisfies k * w <= (1 + epsilon) * total, i.e.
/// floor((1 + epsilon) * total / k), computed exactly.
Weight balance_cap(Weight total, PartId k, Fraction epsilon);

/// Largest w with w <= (1 + epsilon) * total * share / parts, exactly.
Weight scaled_cap(Weight total, std::uint64_t share, std::uint64_t parts, Fraction epsilon);

struct BalanceReport {
  Weight max_part_weight = 0;
  Weight total_weight = 0;
  PartId k = 1;

  /// (1 + epsilon) * total / k as an exact fraction.
  Fraction bound(Fraction epsilon) const;
  bool balanced(Fraction epsilon) const;
};

BalanceReport imbalance(const Partition& p);

}  // namespace detpart
