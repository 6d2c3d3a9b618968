#include "detpart/initial_partition.hpp"

#include <algorithm>
#include <cmath>

#include "detpart/errors.hpp"
#include "detpart/metrics.hpp"

namespace detpart {

BisectionTarget BisectionTarget::even(Weight total, Fraction epsilon) {
  const Weight cap = balance_cap(total, 2, epsilon);
  return {{1, 1}, {cap, cap}};
}

std::vector<Gain> compute_gains(const Hypergraph& h, const Partition& p, Executor& ex) {
  if (p.k() != 2) throw InvalidParams("move gains are defined for bipartitions only");

  std::vector<std::uint32_t> on_side1(h.num_hedges());
  ex.for_each(h.num_hedges(), [&](std::size_t e) {
    std::uint32_t count = 0;
    for (NodeId v : h.pins(static_cast<HedgeId>(e))) count += p[v];
    on_side1[e] = count;
  });

  std::vector<Gain> gains(h.num_nodes());
  ex.for_each(h.num_nodes(), [&](std::size_t vi) {
    const auto v = static_cast<NodeId>(vi);
    const bool side1 = p[v] == 1;
    Gain g = 0;
    for (HedgeId e : h.incident_hedges(v)) {
      const std::size_t degree = h.degree(e);
      const std::size_t same = side1 ? on_side1[e] : degree - on_side1[e];
      const auto w = static_cast<Gain>(h.hedge_weight(e));
      // Both hold for a single-pin hyperedge, whose gain is then 0.
      if (same == 1) g += w;
      if (same == degree) g -= w;
    }
    gains[v] = g;
  });
  return gains;
}

std::size_t batch_size(std::size_t n) noexcept {
  auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while (r * r < n) ++r;
  return r;
}

Partition initial_partition(const Hypergraph& coarsest, const BisectionTarget& target, Executor& ex) {
  const std::size_t n = coarsest.num_nodes();
  std::vector<PartId> sides(n, 1);
  Partition p(std::move(sides), 2, coarsest.node_weights());

  const std::size_t batch = batch_size(n);
  const auto total = static_cast<unsigned __int128>(coarsest.total_node_weight());
  const std::uint64_t slices = target.share[0] + target.share[1];
  auto below_target = [&] {
    return static_cast<unsigned __int128>(p.part_weight(0)) * slices < total * target.share[0];
  };

  std::vector<NodeId> candidates;
  while (below_target()) {
    const std::vector<Gain> gains = compute_gains(coarsest, p, ex);
    candidates.clear();
    for (NodeId v = 0; v < n; ++v) {
      if (p[v] == 1) candidates.push_back(v);
    }
    if (candidates.empty()) break;
    const std::size_t take = std::min(batch, candidates.size());
    std::partial_sort(candidates.begin(), candidates.begin() + take, candidates.end(), GainOrder{&gains});
    for (std::size_t i = 0; i < take; ++i) p.move(candidates[i], 0, coarsest.node_weight(candidates[i]));
  }
  return p;
}

}  // namespace detpart
