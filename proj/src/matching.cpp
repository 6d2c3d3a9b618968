#include "detpart/matching.hpp"

#include <algorithm>

namespace detpart {

Key hedge_priority(Policy policy, const Hypergraph& h, HedgeId e) noexcept {
  switch (policy) {
    case Policy::LDH: return h.degree(e);
    case Policy::HDH: return kMaxKey - h.degree(e);
    case Policy::LWD: return h.hedge_weight(e);
    case Policy::HWD: return kMaxKey - h.hedge_weight(e);
    case Policy::RAND: return splitmix64(e);
  }
  return kKeySentinel;
}

MatchingState compute_matching(const Hypergraph& h, Policy policy, Executor& ex) {
  const std::size_t n = h.num_nodes();
  const std::size_t m = h.num_hedges();
  MatchingState s;
  s.hedge_priority.resize(m);
  s.hedge_rand.resize(m);
  s.node_priority.assign(n, kKeySentinel);
  s.node_rand.assign(n, kKeySentinel);
  s.node_hedge.assign(n, kInvalidHedge);

  ex.for_each(m, [&](std::size_t e) {
    const auto id = static_cast<HedgeId>(e);
    s.hedge_priority[e] = hedge_priority(policy, h, id);
    s.hedge_rand[e] = splitmix64(e);
  });

  // Each node pulls from its incident hyperedges, so every cell has a single
  // writer and the three passes reduce to independent per-node minima.
  ex.for_each(n, [&](std::size_t v) {
    const auto hedges = h.incident_hedges(static_cast<NodeId>(v));
    Key priority = kKeySentinel;
    for (HedgeId e : hedges) priority = std::min(priority, s.hedge_priority[e]);
    Key rand = kKeySentinel;
    for (HedgeId e : hedges) {
      if (s.hedge_priority[e] == priority) rand = std::min(rand, s.hedge_rand[e]);
    }
    HedgeId chosen = kInvalidHedge;
    for (HedgeId e : hedges) {
      if (s.hedge_rand[e] == rand) chosen = std::min(chosen, e);
    }
    s.node_priority[v] = priority;
    s.node_rand[v] = rand;
    s.node_hedge[v] = chosen;
  });
  return s;
}

std::vector<MatchGroup> groups_of(const MatchingState& m, const Hypergraph& h) {
  std::vector<std::size_t> count(h.num_hedges() + 1, 0);
  for (HedgeId e : m.node_hedge) {
    if (e != kInvalidHedge) ++count[e];
  }
  std::vector<MatchGroup> groups;
  std::vector<std::size_t> slot(h.num_hedges(), 0);
  for (HedgeId e = 0; e < h.num_hedges(); ++e) {
    if (count[e] == 0) continue;
    slot[e] = groups.size();
    groups.push_back({e, {}});
    groups.back().members.reserve(count[e]);
  }
  for (NodeId v = 0; v < m.node_hedge.size(); ++v) {
    const HedgeId e = m.node_hedge[v];
    if (e != kInvalidHedge) groups[slot[e]].members.push_back(v);
  }
  return groups;
}

}  // namespace detpart
