#include "detpart/hypergraph.hpp"

#include <algorithm>
#include <numeric>

#include "detpart/errors.hpp"

namespace detpart {

Incidence transpose(std::span<const std::size_t> offsets, std::span<const std::uint32_t> ids,
                    std::size_t num_cols) {
  Incidence out;
  out.offsets.assign(num_cols + 1, 0);
  for (std::uint32_t id : ids) {
    if (id >= num_cols) {
      throw MalformedInput("id " + std::to_string(id) + " out of range (" +
                           std::to_string(num_cols) + " columns)");
    }
    ++out.offsets[id + 1];
  }
  std::partial_sum(out.offsets.begin(), out.offsets.end(), out.offsets.begin());

  // Rows are visited in ascending order, so every output row comes out sorted.
  out.ids.resize(ids.size());
  std::vector<std::size_t> cursor(out.offsets.begin(), out.offsets.end() - 1);
  const std::size_t rows = offsets.empty() ? 0 : offsets.size() - 1;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t i = offsets[r]; i < offsets[r + 1]; ++i) {
      out.ids[cursor[ids[i]]++] = static_cast<std::uint32_t>(r);
    }
  }
  return out;
}

Hypergraph::Hypergraph(std::size_t num_nodes, std::vector<std::size_t> hedge_offsets,
                       std::vector<NodeId> hedge_pins, std::vector<Weight> hedge_weights,
                       std::vector<Weight> node_weights) {
  if (hedge_offsets.empty()) hedge_offsets.push_back(0);
  const std::size_t num_hedges = hedge_offsets.size() - 1;
  if (hedge_offsets.front() != 0 || hedge_offsets.back() != hedge_pins.size()) {
    throw MalformedInput("hyperedge offsets do not span the pin array");
  }
  if (hedge_weights.empty()) hedge_weights.assign(num_hedges, 1);
  if (node_weights.empty()) node_weights.assign(num_nodes, 1);
  if (hedge_weights.size() != num_hedges) throw MalformedInput("hyperedge weight count mismatch");
  if (node_weights.size() != num_nodes) throw MalformedInput("node weight count mismatch");

  // Sort and deduplicate each hyperedge, compacting in place.
  std::size_t write = 0;
  for (std::size_t e = 0; e < num_hedges; ++e) {
    const std::size_t b = hedge_offsets[e];
    const std::size_t end = hedge_offsets[e + 1];
    if (end < b) throw MalformedInput("hyperedge offsets are not monotone");
    std::sort(hedge_pins.begin() + b, hedge_pins.begin() + end);
    const auto last = std::unique(hedge_pins.begin() + b, hedge_pins.begin() + end);
    hedge_offsets[e] = write;
    write = std::move(hedge_pins.begin() + b, last, hedge_pins.begin() + write) - hedge_pins.begin();
  }
  hedge_offsets[num_hedges] = write;
  hedge_pins.resize(write);

  Incidence dual = transpose(hedge_offsets, hedge_pins, num_nodes);
  hedge_offsets_ = std::move(hedge_offsets);
  hedge_pins_ = std::move(hedge_pins);
  node_offsets_ = std::move(dual.offsets);
  node_hedges_ = std::move(dual.ids);
  hedge_weights_ = std::move(hedge_weights);
  node_weights_ = std::move(node_weights);
  total_node_weight_ = std::accumulate(node_weights_.begin(), node_weights_.end(), Weight{0});
}

Hypergraph Hypergraph::from_hedges(std::size_t num_nodes,
                                   const std::vector<std::vector<NodeId>>& hedges,
                                   std::vector<Weight> hedge_weights,
                                   std::vector<Weight> node_weights) {
  std::vector<std::size_t> offsets{0};
  std::vector<NodeId> pins;
  for (const auto& e : hedges) {
    pins.insert(pins.end(), e.begin(), e.end());
    offsets.push_back(pins.size());
  }
  return Hypergraph(num_nodes, std::move(offsets), std::move(pins), std::move(hedge_weights),
                    std::move(node_weights));
}

Hypergraph Hypergraph::from_raw(std::vector<std::size_t> hedge_offsets,
                                std::vector<NodeId> hedge_pins,
                                std::vector<std::size_t> node_offsets,
                                std::vector<HedgeId> node_hedges,
                                std::vector<Weight> hedge_weights,
                                std::vector<Weight> node_weights) {
  Hypergraph h;
  h.hedge_offsets_ = std::move(hedge_offsets);
  h.hedge_pins_ = std::move(hedge_pins);
  h.node_offsets_ = std::move(node_offsets);
  h.node_hedges_ = std::move(node_hedges);
  h.hedge_weights_ = std::move(hedge_weights);
  h.node_weights_ = std::move(node_weights);
  h.total_node_weight_ = std::accumulate(h.node_weights_.begin(), h.node_weights_.end(), Weight{0});
  return h;
}

bool Hypergraph::operator==(const Hypergraph& o) const {
  return hedge_offsets_ == o.hedge_offsets_ && hedge_pins_ == o.hedge_pins_ &&
         node_offsets_ == o.node_offsets_ && node_hedges_ == o.node_hedges_ &&
         hedge_weights_ == o.hedge_weights_ && node_weights_ == o.node_weights_;
}

namespace {

bool check_offsets(std::span<const std::size_t> offsets, std::size_t rows, std::size_t entries,
                   const char* name, std::vector<std::string>& report) {
  if (offsets.size() != rows + 1) {
    report.push_back(std::string(name) + " offsets have wrong length");
    return false;
  }
  if (offsets.front() != 0 || offsets.back() != entries) {
    report.push_back(std::string(name) + " offsets do not span the entry array");
    return false;
  }
  for (std::size_t i = 0; i < rows; ++i) {
    if (offsets[i] > offsets[i + 1]) {
      report.push_back(std::string(name) + " offsets not monotone at " + std::to_string(i));
      return false;
    }
  }
  return true;
}

std::string pin_label(std::size_t e, std::size_t v) {
  return "(" + std::to_string(e) + "," + std::to_string(v) + ")";
}

}  // namespace

std::vector<std::string> validate(const Hypergraph& h) {
  std::vector<std::string> report;
  const std::size_t n = h.node_weights().size();
  const std::size_t m = h.hedge_weights().size();

  if (h.hedge_pins().size() != h.node_hedges().size()) {
    report.push_back("pin count differs between hyperedge and node incidence");
  }
  const bool hedges_ok = check_offsets(h.hedge_offsets(), m, h.hedge_pins().size(), "hyperedge", report);
  const bool nodes_ok = check_offsets(h.node_offsets(), n, h.node_hedges().size(), "node", report);

  for (std::size_t v = 0; v < n; ++v) {
    if (h.node_weights()[v] == 0) report.push_back("node " + std::to_string(v) + " has zero weight");
  }
  for (std::size_t e = 0; e < m; ++e) {
    if (h.hedge_weights()[e] == 0) report.push_back("hyperedge " + std::to_string(e) + " has zero weight");
  }
  if (!hedges_ok || !nodes_ok) return report;

  auto contains = [](std::span<const std::uint32_t> row, std::uint32_t x) {
    return std::find(row.begin(), row.end(), x) != row.end();
  };

  for (std::size_t e = 0; e < m; ++e) {
    const auto pins = h.pins(static_cast<HedgeId>(e));
    if (pins.empty()) report.push_back("hyperedge " + std::to_string(e) + " is empty");
    for (std::size_t i = 0; i < pins.size(); ++i) {
      if (pins[i] >= n) {
        report.push_back("pin " + pin_label(e, pins[i]) + " references a missing node");
        continue;
      }
      if (i > 0 && pins[i] <= pins[i - 1]) {
        report.push_back("hyperedge " + std::to_string(e) + " pins not strictly increasing");
      }
      if (!contains(h.incident_hedges(pins[i]), static_cast<std::uint32_t>(e))) {
        report.push_back("dual inconsistency at " + pin_label(e, pins[i]));
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    const auto hedges = h.incident_hedges(static_cast<NodeId>(v));
    for (std::size_t i = 0; i < hedges.size(); ++i) {
      if (hedges[i] >= m) {
        report.push_back("node " + std::to_string(v) + " references missing hyperedge " +
                         std::to_string(hedges[i]));
        continue;
      }
      if (i > 0 && hedges[i] <= hedges[i - 1]) {
        report.push_back("node " + std::to_string(v) + " hyperedges not strictly increasing");
      }
      if (!contains(h.pins(hedges[i]), static_cast<std::uint32_t>(v))) {
        report.push_back("dual inconsistency at " + pin_label(hedges[i], v));
      }
    }
  }
  return report;
}

Partition::Partition(const Hypergraph& h, PartId k)
    : parts_(h.num_nodes(), 0), part_weights_(k, 0), k_(k) {
  if (k == 0) throw InvalidParams("partition needs k >= 1");
  part_weights_[0] = h.total_node_weight();
}

Partition::Partition(std::vector<PartId> parts, PartId k, std::span<const Weight> node_weights)
    : parts_(std::move(parts)), k_(k) {
  if (k == 0) throw InvalidParams("partition needs k >= 1");
  if (parts_.size() != node_weights.size()) throw InvalidParams("partition size differs from node count");
  for (std::size_t v = 0; v < parts_.size(); ++v) {
    if (parts_[v] >= k) {
      throw InvalidParams("node " + std::to_string(v) + " has part id " + std::to_string(parts_[v]) +
                          " >= k=" + std::to_string(k));
    }
  }
  recompute_weights(node_weights);
}

Weight Partition::total_weight() const noexcept {
  return std::accumulate(part_weights_.begin(), part_weights_.end(), Weight{0});
}

void Partition::recompute_weights(std::span<const Weight> node_weights) {
  part_weights_.assign(k_, 0);
  for (std::size_t v = 0; v < parts_.size(); ++v) part_weights_[parts_[v]] += node_weights[v];
}

}  // namespace detpart
