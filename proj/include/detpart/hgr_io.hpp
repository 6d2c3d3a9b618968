#pragma once

#include <filesystem>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>

#include "detpart/hypergraph.hpp"

namespace detpart {

/// Weight layout announced by the optional third header field of an .hgr
/// file: absent = unweighted, 1 = hyperedge weights, 10 = node weights,
/// 11 = both.
struct HgrFormat {
  bool hedge_weights = false;
  bool node_weights = false;

  /// Accepts exactly 1, 10 and 11; anything else is rejected.
  static std::optional<HgrFormat> decode(std::uint64_t fmt) noexcept;
  /// 0 means "no fmt field".
  std::uint64_t encode() const noexcept;
};

/// Reads an hMetis hypergraph. Node ids in the file are 1-based; duplicate
/// pins within a line are collapsed. Throws ParseError with a line number.
Hypergraph parse_hgr(std::istream& in);
Hypergraph read_hgr_file(const std::filesystem::path& path);

/// Writes `h` in .hgr form, emitting weights only when some weight is not 1.
void write_hgr(const Hypergraph& h, std::ostream& out);

/// One decimal part id per line, node order, newline terminated.
void write_partition(const Partition& p, std::ostream& out);

/// Inverse of write_partition. Throws ParseError on a wrong line count or an
/// id >= k.
Partition parse_partition(std::istream& in, std::span<const Weight> node_weights, PartId k);
Partition parse_partition(std::istream& in, std::size_t num_nodes, PartId k);

}  // namespace detpart
