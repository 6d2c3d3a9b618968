#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "detpart/executor.hpp"
#include "detpart/hypergraph.hpp"
#include "detpart/params.hpp"

namespace detpart {

using Key = std::uint64_t;

/// "Unassigned" marker for priority and hash keys.
inline constexpr Key kKeySentinel = std::numeric_limits<Key>::max();
/// Largest key a policy can produce; complemented policies subtract from it.
inline constexpr Key kMaxKey = kKeySentinel - 1;

/// splitmix64 finalizer. Bit-exact, used as the only hash in the library.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  std::uint64_t z = x + 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Priority key of hyperedge `e` under `policy`; smaller wins.
Key hedge_priority(Policy policy, const Hypergraph& h, HedgeId e) noexcept;

/// Per-node outcome of the multi-node matching plus the per-hyperedge keys
/// it was derived from. Degree-0 nodes keep all three sentinels.
struct MatchingState {
  std::vector<Key> node_priority;
  std::vector<Key> node_rand;
  std::vector<HedgeId> node_hedge;
  std::vector<Key> hedge_priority;
  std::vector<Key> hedge_rand;

  bool operator==(const MatchingState&) const = default;
};

/// Matches every node of degree >= 1 to one incident hyperedge:
///   priority = min incident hedge priority,
///   rand     = min hedge hash among incident hedges with that priority,
///   hedge    = min hedge id among incident hedges whose hash equals rand.
/// Each field is a min-reduction over a fixed set, so the result does not
/// depend on thread count or scheduling.
MatchingState compute_matching(const Hypergraph& h, Policy policy, Executor& ex = Executor::serial());

struct MatchGroup {
  HedgeId hedge = kInvalidHedge;
  std::vector<NodeId> members;

  bool operator==(const MatchGroup&) const = default;
};

/// Nodes grouped by matched hyperedge, groups ordered by hyperedge id and
/// members ascending. Unmatched nodes appear in no group.
std::vector<MatchGroup> groups_of(const MatchingState& m, const Hypergraph& h);

}  // namespace detpart
