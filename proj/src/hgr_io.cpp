#include "detpart/hgr_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "detpart/errors.hpp"

namespace detpart {

std::optional<HgrFormat> HgrFormat::decode(std::uint64_t fmt) noexcept {
  switch (fmt) {
    case 1: return HgrFormat{true, false};
    case 10: return HgrFormat{false, true};
    case 11: return HgrFormat{true, true};
    default: return std::nullopt;
  }
}

std::uint64_t HgrFormat::encode() const noexcept {
  return (node_weights ? 10 : 0) + (hedge_weights ? 1 : 0);
}

namespace {

/// Line reader that tracks 1-based line numbers and splits on blanks/tabs.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next line that is not a comment; false at end of input.
  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first != std::string::npos && line[first] == '%') continue;
      return true;
    }
    return false;
  }

  std::size_t line_no() const noexcept { return line_no_; }

  std::vector<std::uint64_t> numbers(std::string_view line) const {
    std::vector<std::uint64_t> out;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      if (i == line.size()) break;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      std::uint64_t value = 0;
      const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
      if (ec != std::errc{} || ptr != line.data() + j) {
        throw ParseError(line_no_, "non-numeric token '" + std::string(line.substr(i, j - i)) + "'");
      }
      out.push_back(value);
      i = j;
    }
    return out;
  }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

}  // namespace

Hypergraph parse_hgr(std::istream& in) {
  LineReader reader(in);
  std::string line;

  bool have_header = false;
  while (reader.next(line)) {
    if (!is_blank(line)) {
      have_header = true;
      break;
    }
  }
  if (!have_header) throw ParseError(reader.line_no(), "missing header line");

  const auto header = reader.numbers(line);
  if (header.size() < 2 || header.size() > 3) {
    throw ParseError(reader.line_no(), "header must be 'numHedges numNodes [fmt]'");
  }
  const std::uint64_t num_hedges = header[0];
  const std::uint64_t num_nodes = header[1];
  if (num_nodes >= kInvalidNode || num_hedges >= kInvalidHedge) {
    throw ParseError(reader.line_no(), "hypergraph too large");
  }
  HgrFormat fmt;
  if (header.size() == 3) {
    const auto decoded = HgrFormat::decode(header[2]);
    if (!decoded) throw ParseError(reader.line_no(), "unknown fmt value " + std::to_string(header[2]));
    fmt = *decoded;
  }

  std::vector<std::size_t> offsets{0};
  std::vector<NodeId> pins;
  std::vector<Weight> hedge_weights;
  offsets.reserve(num_hedges + 1);
  hedge_weights.reserve(num_hedges);

  for (std::uint64_t e = 0; e < num_hedges; ++e) {
    if (!reader.next(line)) {
      throw ParseError(reader.line_no() + 1, "wrong line count: expected " + std::to_string(num_hedges) +
                                                 " hyperedge lines, found " + std::to_string(e));
    }
    const auto tokens = reader.numbers(line);
    std::size_t first = 0;
    Weight weight = 1;
    if (fmt.hedge_weights) {
      if (tokens.empty()) throw ParseError(reader.line_no(), "empty hyperedge line");
      weight = tokens[0];
      if (weight == 0) throw ParseError(reader.line_no(), "hyperedge weight must be positive");
      first = 1;
    }
    if (tokens.size() <= first) throw ParseError(reader.line_no(), "empty hyperedge line");
    for (std::size_t i = first; i < tokens.size(); ++i) {
      if (tokens[i] < 1 || tokens[i] > num_nodes) {
        throw ParseError(reader.line_no(), "node id " + std::to_string(tokens[i]) + " out of [1, " +
                                               std::to_string(num_nodes) + "]");
      }
      pins.push_back(static_cast<NodeId>(tokens[i] - 1));
    }
    offsets.push_back(pins.size());
    hedge_weights.push_back(weight);
  }

  std::vector<Weight> node_weights;
  if (fmt.node_weights) {
    node_weights.reserve(num_nodes);
    for (std::uint64_t v = 0; v < num_nodes; ++v) {
      if (!reader.next(line)) {
        throw ParseError(reader.line_no() + 1, "wrong line count: expected " + std::to_string(num_nodes) +
                                                   " node weight lines, found " + std::to_string(v));
      }
      const auto tokens = reader.numbers(line);
      if (tokens.size() != 1) throw ParseError(reader.line_no(), "node weight line needs exactly one value");
      if (tokens[0] == 0) throw ParseError(reader.line_no(), "node weight must be positive");
      node_weights.push_back(tokens[0]);
    }
  }

  while (reader.next(line)) {
    if (!is_blank(line)) throw ParseError(reader.line_no(), "wrong line count: unexpected trailing content");
  }

  return Hypergraph(num_nodes, std::move(offsets), std::move(pins), std::move(hedge_weights),
                    std::move(node_weights));
}

Hypergraph read_hgr_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return parse_hgr(in);
}

void write_hgr(const Hypergraph& h, std::ostream& out) {
  const auto weighted = [](std::span<const Weight> w) {
    return std::any_of(w.begin(), w.end(), [](Weight x) { return x != 1; });
  };
  HgrFormat fmt{weighted(h.hedge_weights()), weighted(h.node_weights())};

  std::string buf = std::to_string(h.num_hedges()) + ' ' + std::to_string(h.num_nodes());
  if (fmt.encode() != 0) buf += ' ' + std::to_string(fmt.encode());
  buf += '\n';
  for (HedgeId e = 0; e < h.num_hedges(); ++e) {
    bool first = true;
    if (fmt.hedge_weights) {
      buf += std::to_string(h.hedge_weight(e));
      first = false;
    }
    for (NodeId v : h.pins(e)) {
      if (!first) buf += ' ';
      buf += std::to_string(v + 1);
      first = false;
    }
    buf += '\n';
  }
  if (fmt.node_weights) {
    for (NodeId v = 0; v < h.num_nodes(); ++v) {
      buf += std::to_string(h.node_weight(v));
      buf += '\n';
    }
  }
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!out) throw std::runtime_error("write failed");
}

void write_partition(const Partition& p, std::ostream& out) {
  std::string buf;
  buf.reserve(p.size() * 3);
  char digits[16];
  for (PartId id : p.parts()) {
    const auto [end, ec] = std::to_chars(digits, digits + sizeof digits, id);
    buf.append(digits, end);
    buf += '\n';
  }
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!out) throw std::runtime_error("write failed");
}

Partition parse_partition(std::istream& in, std::span<const Weight> node_weights, PartId k) {
  LineReader reader(in);
  std::string line;
  std::vector<PartId> parts;
  parts.reserve(node_weights.size());
  while (reader.next(line)) {
    if (is_blank(line)) {
      // Only trailing blank lines are tolerated.
      std::string rest;
      while (reader.next(rest)) {
        if (!is_blank(rest)) throw ParseError(reader.line_no(), "blank line inside partition file");
      }
      break;
    }
    const auto tokens = reader.numbers(line);
    if (tokens.size() != 1) throw ParseError(reader.line_no(), "expected exactly one part id");
    if (tokens[0] >= k) {
      throw ParseError(reader.line_no(),
                       "part id " + std::to_string(tokens[0]) + " >= k=" + std::to_string(k));
    }
    if (parts.size() == node_weights.size()) {
      throw ParseError(reader.line_no(), "wrong line count: more than " +
                                             std::to_string(node_weights.size()) + " lines");
    }
    parts.push_back(static_cast<PartId>(tokens[0]));
  }
  if (parts.size() != node_weights.size()) {
    throw ParseError(reader.line_no(), "wrong line count: expected " + std::to_string(node_weights.size()) +
                                           " lines, found " + std::to_string(parts.size()));
  }
  return Partition(std::move(parts), k, node_weights);
}

Partition parse_partition(std::istream& in, std::size_t num_nodes, PartId k) {
  const std::vector<Weight> unit(num_nodes, 1);
  return parse_partition(in, unit, k);
}

}  // namespace detpart
