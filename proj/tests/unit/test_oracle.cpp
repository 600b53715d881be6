#include <gtest/gtest.h>

#include "oracles.hpp"
#include "permcycle/oracle.hpp"
#include "permcycle/series.hpp"

using namespace permcycle;

namespace {
const MultiPoly t = MultiPoly::marker(Marker::t);
const MultiPoly u = MultiPoly::marker(Marker::u);
const MultiPoly x = MultiPoly::marker(Marker::x);
const MultiPoly y = MultiPoly::marker(Marker::y);
}  // namespace

TEST(Enumerate, Examples) {
  const auto three = enumerate_class(ClassId::class312_4321, 3);
  std::vector<std::string> text;
  for (const auto& p : three) text.push_back(p.to_string());
  EXPECT_EQ(text, (std::vector<std::string>{"123", "132", "213", "231", "321"}));

  const auto empty = enumerate_class(DistributionQuery{std::nullopt, 0, false});
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_TRUE(empty[0].empty());

  EXPECT_EQ(enumerate_class(DistributionQuery{ClassId::class321_4123, 4, true}).size(), 6u);
}

TEST(Enumerate, SizeCap) {
  EXPECT_THROW(enumerate_class(ClassId::class312_4321, 12), ResourceLimitError);
  EXPECT_THROW(distribution(ClassId::class312_4321, 5, false, OracleConfig{4, 1}), ResourceLimitError);
  EXPECT_THROW(distribution(ClassId::class312_4321, -1), PreconditionError);
}

TEST(Distribution, Examples) {
  const MultiPoly d = distribution(ClassId::class312_4321, 3);
  EXPECT_EQ(specialize(d, {Marker::u, Marker::x, Marker::y}), t + 3 * t * t + t * t * t);
  EXPECT_EQ(specialize(d, {Marker::x, Marker::y}), t + 3 * t * t * u + t * t * t * u * u * u);

  const MultiPoly e = specialize(distribution(ClassId::class321_4123, 3), {Marker::u});
  EXPECT_EQ(e, t * x * x * y * y + t * x * y * y + 2 * t * t * x * y + t * t * t);
  EXPECT_EQ(distribution(DistributionQuery{std::nullopt, 0, false}), MultiPoly(1));
}

TEST(CountCyclic, Examples) {
  EXPECT_EQ(count_cyclic(ClassId::class312_4321, 6), 5);
  EXPECT_EQ(count_cyclic(ClassId::class321_4123, 5), 6);
  EXPECT_EQ(count_cyclic(ClassId::class312_4321, 1), 1);
  EXPECT_EQ(count_cyclic(ClassId::class321_4123, 1), 1);
}

TEST(Oracle, UnrankMatchesSuccessorOrder) {
  for (int n = 0; n <= 6; ++n) {
    const auto all = reference::all_permutations(n);
    for (std::size_t r = 0; r < all.size(); ++r) ASSERT_EQ(detail::unrank_lex(n, r), all[r]);
  }
}

TEST(Oracle, ShortcutFilterMatchesPatternSearch) {
  for (int n = 0; n <= 8; ++n)
    for (const auto& v : reference::all_permutations(n)) {
      ASSERT_EQ(detail::in_class_fast(v, ClassId::class312_4321), reference::avoids_all(v, reference::patterns_312_4321));
      ASSERT_EQ(detail::in_class_fast(v, ClassId::class321_4123), reference::avoids_all(v, reference::patterns_321_4123));
    }
}

TEST(Oracle, EnumerationMatchesReference) {
  for (int n = 0; n <= 8; ++n) {
    const auto ref = reference::class_members(n, reference::patterns_321_4123);
    const auto got = enumerate_class(ClassId::class321_4123, n);
    ASSERT_EQ(got.size(), ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i)
      ASSERT_EQ(std::vector<int>(got[i].values().begin(), got[i].values().end()), ref[i]);
  }
}

TEST(Oracle, MahonianOverAllPermutations) {
  for (int n = 0; n <= 7; ++n) {
    const MultiPoly inv_only =
        specialize(distribution(DistributionQuery{std::nullopt, n, false}), {Marker::t, Marker::u, Marker::x});
    const auto expected = reference::mahonian(n);
    for (std::size_t j = 0; j < expected.size(); ++j)
      ASSERT_EQ(inv_only.coefficient({0, 0, 0, static_cast<std::uint16_t>(j)}), expected[j]) << n << " " << j;
    ASSERT_EQ(inv_only.term_count(), expected.size());
  }
}

TEST(Oracle, ShardCountDoesNotMatter) {
  for (int n : {0, 1, 2, 5, 8}) {
    for (bool inv : {false, true}) {
      const DistributionQuery q{ClassId::class312_4321, n, inv};
      const MultiPoly one_shard = distribution(q, OracleConfig{11, 1});
      EXPECT_EQ(distribution(q, OracleConfig{11, 3}), one_shard);
      EXPECT_EQ(distribution(q, OracleConfig{11, 8}), one_shard);
    }
  }
}

TEST(Oracle, AgreesWithGeneratingFunctionsUpToEight) {
  const int max_n = 8;
  for (GfName g : all_gf_names) {
    const auto series = expand(builtin_gf(g), max_n);
    for (int n = 1; n <= max_n; ++n) {
      const MultiPoly oracle = specialize(
          distribution(DistributionQuery{gf_class(g), n, gf_counts_involutions(g)}), gf_markers(g).complement());
      ASSERT_EQ(oracle, series.coeffs[static_cast<std::size_t>(n)]) << gf_letter(g) << " n=" << n;
    }
  }
}
