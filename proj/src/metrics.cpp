#include "detpart/metrics.hpp"

#include <algorithm>
#include <atomic>

namespace detpart {

namespace {

using Wide = unsigned __int128;

// Distinct part count of one hyperedge; `seen` is scratch indexed by part id
// and is restored to all-false on return.
PartId count_parts(const Hypergraph& h, HedgeId e, const Partition& p, std::vector<char>& seen) {
  PartId distinct = 0;
  const auto pins = h.pins(e);
  for (NodeId v : pins) {
    if (!seen[p[v]]) {
      seen[p[v]] = 1;
      ++distinct;
    }
  }
  for (NodeId v : pins) seen[p[v]] = 0;
  return distinct;
}

}  // namespace

PartId lambda(const Hypergraph& h, HedgeId e, const Partition& p) {
  std::vector<char> seen(p.k(), 0);
  return count_parts(h, e, p, seen);
}

Weight cut(const Hypergraph& h, const Partition& p, Executor& ex) {
  std::atomic<Weight> total{0};
  ex.for_range(h.num_hedges(), [&](std::size_t b, std::size_t end) {
    std::vector<char> seen(p.k(), 0);
    Weight local = 0;
    for (std::size_t e = b; e < end; ++e) {
      const auto id = static_cast<HedgeId>(e);
      const PartId spans = count_parts(h, id, p, seen);
      if (spans > 1) local += h.hedge_weight(id) * (spans - 1);
    }
    total.fetch_add(local, std::memory_order_relaxed);
  });
  return total.load();
}

Weight scaled_cap(Weight total, std::uint64_t share, std::uint64_t parts, Fraction epsilon) {
  const Wide numer = static_cast<Wide>(total) * share * (epsilon.den + epsilon.num);
  const Wide denom = static_cast<Wide>(parts) * epsilon.den;
  return static_cast<Weight>(numer / denom);
}

Weight balance_cap(Weight total, PartId k, Fraction epsilon) {
  return scaled_cap(total, 1, k, epsilon);
}

Fraction BalanceReport::bound(Fraction epsilon) const {
  return {total_weight * (epsilon.den + epsilon.num), static_cast<std::uint64_t>(k) * epsilon.den};
}

bool BalanceReport::balanced(Fraction epsilon) const {
  return static_cast<Wide>(max_part_weight) * k * epsilon.den <=
         static_cast<Wide>(total_weight) * (epsilon.den + epsilon.num);
}

BalanceReport imbalance(const Partition& p) {
  BalanceReport r;
  r.k = p.k();
  for (Weight w : p.part_weights()) {
    r.max_part_weight = std::max(r.max_part_weight, w);
    r.total_weight += w;
  }
  return r;
}

}  // namespace detpart
