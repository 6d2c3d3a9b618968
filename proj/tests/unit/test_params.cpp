#include <gtest/gtest.h>

#include "detpart/errors.hpp"
#include "detpart/params.hpp"

namespace detpart {
namespace {

TEST(Policy, NamesRoundTrip) {
  for (Policy p : {Policy::LDH, Policy::HDH, Policy::LWD, Policy::HWD, Policy::RAND}) {
    EXPECT_EQ(parse_policy(to_string(p)), p);
  }
  EXPECT_FALSE(parse_policy("ldh").has_value());
  EXPECT_FALSE(parse_policy("").has_value());
}

TEST(Fraction, ParseDecimal) {
  EXPECT_EQ(Fraction::parse_decimal("0.1"), (Fraction{1, 10}));
  EXPECT_EQ(Fraction::parse_decimal("0.10"), (Fraction{1, 10}));
  EXPECT_EQ(Fraction::parse_decimal("3"), (Fraction{3, 1}));
  EXPECT_EQ(Fraction::parse_decimal(".25"), (Fraction{25, 100}));
  EXPECT_EQ(Fraction::parse_decimal("2."), (Fraction{2, 1}));
  EXPECT_EQ(Fraction::parse_decimal("0"), (Fraction{0, 1}));
  for (const char* bad : {"", ".", "-0.1", "1e-2", "0.1x", " 0.1", "1.2.3", "1234567890123456789"}) {
    EXPECT_FALSE(Fraction::parse_decimal(bad).has_value()) << bad;
  }
}

TEST(Fraction, ToString) {
  EXPECT_EQ((Fraction{1, 10}).to_string(), "0.1");
  EXPECT_EQ((Fraction{11, 2}).to_string(), "5.5");
  EXPECT_EQ((Fraction{110, 2}).to_string(), "55");
  EXPECT_EQ((Fraction{1, 3}).to_string(), "0.333333333333");
  EXPECT_EQ(Fraction::parse_decimal("0.125")->to_string(), "0.125");
}

TEST(Params, Defaults) {
  const Params p;
  EXPECT_EQ(p.policy, Policy::LDH);
  EXPECT_EQ(p.coarse_to, 25u);
  EXPECT_EQ(p.refine_iters, 2u);
  EXPECT_EQ(p.epsilon, (Fraction{1, 10}));
  EXPECT_EQ(p.k, 2u);
  EXPECT_NO_THROW(p.check());
}

TEST(Params, Check) {
  Params p;
  p.k = 0;
  EXPECT_THROW(p.check(), InvalidParams);
  p = Params{};
  p.coarse_to = 0;
  EXPECT_THROW(p.check(), InvalidParams);
  p = Params{};
  p.refine_iters = 0;
  EXPECT_NO_THROW(p.check());
}

}  // namespace
}  // namespace detpart
