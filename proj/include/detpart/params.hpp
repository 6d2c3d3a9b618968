#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "detpart/hypergraph.hpp"

namespace detpart {

/// Hyperedge ordering used by the multi-node matching. Every policy maps a
/// hyperedge to a key where smaller means higher priority.
enum class Policy { LDH, HDH, LWD, HWD, RAND };

std::string_view to_string(Policy p) noexcept;
std::optional<Policy> parse_policy(std::string_view name) noexcept;

/// Non-negative exact fraction num/den. The imbalance parameter is kept in
/// this form so balance checks never depend on floating point rounding.
struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  /// Parses a plain decimal such as "0.1", "3" or ".25". No sign, no exponent.
  static std::optional<Fraction> parse_decimal(std::string_view text) noexcept;

  std::string to_string() const;
  bool operator==(const Fraction&) const = default;
};

struct Params {
  Policy policy = Policy::LDH;
  unsigned coarse_to = 25;
  unsigned refine_iters = 2;
  Fraction epsilon{1, 10};
  PartId k = 2;

  /// Throws InvalidParams on out-of-range values.
  void check() const;
};

}  // namespace detpart
