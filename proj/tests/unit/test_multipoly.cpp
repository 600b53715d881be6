#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "permcycle/multipoly.hpp"

using namespace permcycle;

namespace {
const MultiPoly t = MultiPoly::marker(Marker::t);
const MultiPoly u = MultiPoly::marker(Marker::u);
const MultiPoly x = MultiPoly::marker(Marker::x);
const MultiPoly y = MultiPoly::marker(Marker::y);
}  // namespace

TEST(MultiPoly, Arithmetic) {
  EXPECT_EQ(t * (t + 1), t * t + t);
  EXPECT_TRUE(((x * y + t) * MultiPoly(0)).is_zero());
  EXPECT_EQ((MultiPoly(1) + t) * (t + t * t), t + 2 * t * t + t * t * t);
  EXPECT_TRUE((t - t).is_zero());
  EXPECT_EQ((t + u).term_count(), 2u);
  EXPECT_EQ((t * t * u).to_string(), "t^2*u");
  EXPECT_EQ((MultiPoly(1) - 3 * x * y * y).to_string(), "1 - 3*x*y^2");
  EXPECT_EQ(MultiPoly().to_string(), "0");
}

TEST(MultiPoly, NoZeroTermsStored) {
  MultiPoly p = t + u;
  p -= u;
  EXPECT_EQ(p.term_count(), 1u);
  p.add_term({1, 0, 0, 0}, -1);
  EXPECT_TRUE(p.is_zero());
}

TEST(MultiPoly, OverflowIsAnError) {
  const auto big = std::numeric_limits<std::int64_t>::max();
  EXPECT_THROW(MultiPoly(big) + MultiPoly(1), OverflowError);
  EXPECT_THROW(MultiPoly(big) * MultiPoly(2), OverflowError);
  EXPECT_THROW(-MultiPoly(std::numeric_limits<std::int64_t>::min()), OverflowError);
  EXPECT_THROW(MultiPoly::marker(Marker::y, 40000) * MultiPoly::marker(Marker::y, 40000), OverflowError);

  // The same product is fine with unbounded coefficients.
  const BigMultiPoly wide = convert<BigInt>(MultiPoly(big)) * BigMultiPoly(2);
  EXPECT_EQ(wide.coefficient({}), BigInt(big) * 2);
}

TEST(Specialize, Examples) {
  EXPECT_EQ(specialize(t + 3 * t * t * u + t * t * t * u * u * u, {Marker::u}), t + 3 * t * t + t * t * t);
  EXPECT_TRUE(specialize(MultiPoly(), MarkerSet::all()).is_zero());
  EXPECT_EQ(specialize(t * x * y * y, {Marker::x, Marker::y}), t);
  EXPECT_EQ(total(t + 3 * t * t * u + t * t * t), 5);
}

TEST(Properties, RingLaws) {
  std::mt19937 rng(7);
  auto random_poly = [&rng]() {
    MultiPoly p;
    for (int i = 0; i < 5; ++i) {
      Exponents e{};
      for (auto& k : e) k = static_cast<std::uint16_t>(rng() % 3);
      p.add_term(e, static_cast<std::int64_t>(rng() % 11) - 5);
    }
    return p;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const MultiPoly a = random_poly(), b = random_poly(), c = random_poly();
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) * c, a * c + b * c);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(total(a * b), total(a) * total(b));
    ASSERT_EQ(specialize(a * b, {Marker::u}), specialize(a, {Marker::u}) * specialize(b, {Marker::u}));
  }
}
