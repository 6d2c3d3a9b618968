#include "detpart/params.hpp"

#include <array>
#include <charconv>

#include "detpart/errors.hpp"

namespace detpart {

namespace {
constexpr std::array<std::pair<Policy, std::string_view>, 5> kPolicyNames{{
    {Policy::LDH, "LDH"},
    {Policy::HDH, "HDH"},
    {Policy::LWD, "LWD"},
    {Policy::HWD, "HWD"},
    {Policy::RAND, "RAND"},
}};
}  // namespace

std::string_view to_string(Policy p) noexcept {
  for (const auto& [policy, name] : kPolicyNames) {
    if (policy == p) return name;
  }
  return "?";
}

std::optional<Policy> parse_policy(std::string_view name) noexcept {
  for (const auto& [policy, text] : kPolicyNames) {
    if (text == name) return policy;
  }
  return std::nullopt;
}

std::optional<Fraction> Fraction::parse_decimal(std::string_view text) noexcept {
  const auto dot = text.find('.');
  const std::string_view whole = text.substr(0, dot);
  const std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (whole.empty() && frac.empty()) return std::nullopt;
  // 18 significant digits keep num and den within 64 bits.
  if (whole.size() + frac.size() > 18) return std::nullopt;
  for (char c : whole) {
    if (c < '0' || c > '9') return std::nullopt;
  }
  for (char c : frac) {
    if (c < '0' || c > '9') return std::nullopt;
  }

  std::uint64_t w = 0;
  std::uint64_t f = 0;
  if (!whole.empty()) std::from_chars(whole.data(), whole.data() + whole.size(), w);
  if (!frac.empty()) std::from_chars(frac.data(), frac.data() + frac.size(), f);
  std::uint64_t den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;

  Fraction out{w * den + f, den};
  // Strip common powers of ten so "0.10" and "0.1" compare equal.
  while (out.den > 1 && out.num % 10 == 0) {
    out.num /= 10;
    out.den /= 10;
  }
  return out;
}

std::string Fraction::to_string() const {
  std::string out = std::to_string(num / den);
  std::uint64_t rem = num % den;
  if (rem == 0) return out;
  out += '.';
  // Exact for decimal denominators; other denominators are cut at 12 digits.
  for (int digits = 0; rem != 0 && digits < 12; ++digits) {
    const unsigned __int128 scaled = static_cast<unsigned __int128>(rem) * 10;
    out += static_cast<char>('0' + static_cast<int>(scaled / den));
    rem = static_cast<std::uint64_t>(scaled % den);
  }
  return out;
}

void Params::check() const {
  if (coarse_to < 1) throw InvalidParams("coarse-to must be >= 1");
  if (k < 1) throw InvalidParams("k must be >= 1");
  if (epsilon.den == 0) throw InvalidParams("epsilon denominator is zero");
}

}  // namespace detpart
