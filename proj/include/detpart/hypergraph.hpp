#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace detpart {

using NodeId = std::uint32_t;
using HedgeId = std::uint32_t;
using PartId = std::uint32_t;
using Weight = std::uint64_t;
using Gain = std::int64_t;

inline constexpr NodeId kInvalidNode = std::numeric_limits<NodeId>::max();
inline constexpr HedgeId kInvalidHedge = std::numeric_limits<HedgeId>::max();

/// One side of a CSR incidence structure: `ids[offsets[i] .. offsets[i+1])`
/// are the neighbours of row i.
struct Incidence {
  std::vector<std::size_t> offsets;
  std::vector<std::uint32_t> ids;

  bool operator==(const Incidence&) const = default;
};

/// Exact transpose of a CSR incidence. Rows of the result list their ids in
/// strictly increasing order whenever the input has no duplicate pins.
/// Throws MalformedInput when an id is >= num_cols.
Incidence transpose(std::span<const std::size_t> offsets, std::span<const std::uint32_t> ids,
                    std::size_t num_cols);

/// Immutable hypergraph stored as a dual CSR: pins per hyperedge and
/// incident hyperedges per node, with positive integer weights on both.
class Hypergraph {
 public:
  Hypergraph() : hedge_offsets_{0}, node_offsets_{0} {}

  /// Builds from a hyperedge CSR. Pins inside each hyperedge are sorted and
  /// duplicates collapsed. Empty weight vectors mean unit weights.
  Hypergraph(std::size_t num_nodes, std::vector<std::size_t> hedge_offsets,
             std::vector<NodeId> hedge_pins, std::vector<Weight> hedge_weights = {},
             std::vector<Weight> node_weights = {});

  /// Convenience builder from per-hyperedge pin lists.
  static Hypergraph from_hedges(std::size_t num_nodes,
                                const std::vector<std::vector<NodeId>>& hedges,
                                std::vector<Weight> hedge_weights = {},
                                std::vector<Weight> node_weights = {});

  /// Takes all arrays verbatim, with no normalisation and no checks. Used to
  /// build graphs whose dual is already known, and to exercise validate().
  static Hypergraph from_raw(std::vector<std::size_t> hedge_offsets, std::vector<NodeId> hedge_pins,
                             std::vector<std::size_t> node_offsets,
                             std::vector<HedgeId> node_hedges, std::vector<Weight> hedge_weights,
                             std::vector<Weight> node_weights);

  std::size_t num_nodes() const noexcept { return node_weights_.size(); }
  std::size_t num_hedges() const noexcept { return hedge_weights_.size(); }
  std::size_t num_pins() const noexcept { return hedge_pins_.size(); }

  std::span<const NodeId> pins(HedgeId e) const noexcept {
    return {hedge_pins_.data() + hedge_offsets_[e], hedge_offsets_[e + 1] - hedge_offsets_[e]};
  }
  std::span<const HedgeId> incident_hedges(NodeId v) const noexcept {
    return {node_hedges_.data() + node_offsets_[v], node_offsets_[v + 1] - node_offsets_[v]};
  }
  std::size_t degree(HedgeId e) const noexcept { return hedge_offsets_[e + 1] - hedge_offsets_[e]; }
  std::size_t node_degree(NodeId v) const noexcept { return node_offsets_[v + 1] - node_offsets_[v]; }

  Weight node_weight(NodeId v) const noexcept { return node_weights_[v]; }
  Weight hedge_weight(HedgeId e) const noexcept { return hedge_weights_[e]; }
  Weight total_node_weight() const noexcept { return total_node_weight_; }

  std::span<const std::size_t> hedge_offsets() const noexcept { return hedge_offsets_; }
  std::span<const NodeId> hedge_pins() const noexcept { return hedge_pins_; }
  std::span<const std::size_t> node_offsets() const noexcept { return node_offsets_; }
  std::span<const HedgeId> node_hedges() const noexcept { return node_hedges_; }
  std::span<const Weight> node_weights() const noexcept { return node_weights_; }
  std::span<const Weight> hedge_weights() const noexcept { return hedge_weights_; }

  bool operator==(const Hypergraph& other) const;

 private:
  std::vector<std::size_t> hedge_offsets_;
  std::vector<NodeId> hedge_pins_;
  std::vector<std::size_t> node_offsets_;
  std::vector<HedgeId> node_hedges_;
  std::vector<Weight> hedge_weights_;
  std::vector<Weight> node_weights_;
  Weight total_node_weight_ = 0;
};

/// Lists every violated structural invariant; empty when the graph is valid.
std::vector<std::string> validate(const Hypergraph& h);

/// Assignment of every node to one of k parts, with aggregate part weights
/// kept in sync by move().
class Partition {
 public:
  Partition() = default;

  /// All nodes in part 0.
  Partition(const Hypergraph& h, PartId k);

  /// Throws InvalidParams when an id is >= k or sizes disagree.
  Partition(std::vector<PartId> parts, PartId k, std::span<const Weight> node_weights);

  PartId k() const noexcept { return k_; }
  std::size_t size() const noexcept { return parts_.size(); }
  PartId operator[](NodeId v) const noexcept { return parts_[v]; }
  std::span<const PartId> parts() const noexcept { return parts_; }
  Weight part_weight(PartId i) const noexcept { return part_weights_[i]; }
  std::span<const Weight> part_weights() const noexcept { return part_weights_; }
  Weight total_weight() const noexcept;

  void move(NodeId v, PartId to, Weight node_weight) noexcept {
    part_weights_[parts_[v]] -= node_weight;
    part_weights_[to] += node_weight;
    parts_[v] = to;
  }

  /// Rebuilds part weights from scratch.
  void recompute_weights(std::span<const Weight> node_weights);

  bool operator==(const Partition&) const = default;

 private:
  std::vector<PartId> parts_;
  std::vector<Weight> part_weights_;
  PartId k_ = 0;
};

}  // namespace detpart
