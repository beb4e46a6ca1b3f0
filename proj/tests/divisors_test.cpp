#include <gtest/gtest.h>

#include <cmath>

#include "herglotz/divisors.hpp"
#include "support/build.hpp"
#include "support/gen.hpp"

using namespace herglotz;
using fx::P;
using fx::Z;

namespace {

DivisorFn rational_divisor(std::initializer_list<std::pair<long, int>> pts) {
  std::vector<DivisorPoint> v;
  for (auto [x, m] : pts) v.push_back({RealAlgebraic(Rat(x)), m});
  return DivisorFn::from_points(std::move(v));
}

DivisorFn sqrt2_divisor() { return divisor_of((Z * Z - 2) / (Z * Z * Z)); }

// Independent brute force: every contiguous run of support points, summed directly.
int brute_order(const DivisorFn& d) {
  const auto v = d.values();
  int best = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    int s = 0;
    for (std::size_t j = i; j < v.size(); ++j) {
      s += v[j];
      best = std::max(best, std::abs(s));
    }
  }
  return best;
}

// Brute force through interval_sum with rational endpoints between support points.
int brute_order_by_intervals(const DivisorFn& d) {
  const auto& s = d.support();
  if (s.empty()) return 0;
  std::vector<Rat> cuts{s.front().point.value() - 1};
  for (std::size_t k = 1; k < s.size(); ++k) cuts.push_back((s[k - 1].point.value() + s[k].point.value()) / 2);
  cuts.push_back(s.back().point.value() + 1);
  int best = 0;
  for (std::size_t i = 0; i < cuts.size(); ++i)
    for (std::size_t j = i + 1; j < cuts.size(); ++j) best = std::max(best, std::abs(interval_sum(d, cuts[i], cuts[j])));
  return best;
}

}  // namespace

TEST(DivisorOf, KnownExamples) {
  const DivisorFn a = divisor_of((Z - 1) / Z);
  EXPECT_EQ(a, rational_divisor({{0, -1}, {1, 1}}));

  const DivisorFn b = sqrt2_divisor();
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(b.values(), (std::vector<int>{1, -3, 1}));
  EXPECT_NEAR(b.support()[0].point.approx(), -std::sqrt(2.0), 1e-12);
  EXPECT_EQ(b.support()[1].point.value(), 0);
  EXPECT_NEAR(b.support()[2].point.approx(), std::sqrt(2.0), 1e-12);

  EXPECT_TRUE(divisor_of(RatFn(1)).empty());
}

TEST(DivisorOf, Errors) {
  try {
    divisor_of(RatFn(1) / (Z * Z + 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonRealRoots);
  }
  try {
    divisor_of(RatFn());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroFunction);
  }
}

TEST(IntervalSum, KnownExamples) {
  const DivisorFn a = rational_divisor({{0, -1}, {1, 1}});
  EXPECT_EQ(interval_sum(a, -1, Rat(1, 2)), -1);
  EXPECT_EQ(interval_sum(sqrt2_divisor(), -2, 2), -1);
  EXPECT_EQ(interval_sum(sqrt2_divisor(), 5, 9), 0);
  EXPECT_EQ(interval_sum(sqrt2_divisor(), Rat(1, 2), Rat(3, 2)), 1);
  try {
    interval_sum(a, 0, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EndpointOnSupport);
  }
}

TEST(InterlacingOrder, KnownExamples) {
  EXPECT_EQ(min_interlacing_order(rational_divisor({{-1, 1}, {0, -1}, {1, 1}})), 1);
  EXPECT_EQ(min_interlacing_order(rational_divisor({{0, 2}})), 2);
  EXPECT_EQ(min_interlacing_order(sqrt2_divisor()), 3);
  EXPECT_EQ(brute_order(sqrt2_divisor()), 3);
  EXPECT_EQ(min_interlacing_order(DivisorFn()), 0);

  EXPECT_FALSE(is_n_interlacing(rational_divisor({{0, 2}}), 1));
  EXPECT_TRUE(is_n_interlacing(rational_divisor({{0, 2}}), 2));
  EXPECT_TRUE(is_n_interlacing(DivisorFn(), 1));
  EXPECT_FALSE(is_n_interlacing(sqrt2_divisor(), 2));
}

TEST(InterlacingOrder, WitnessAttainsOrder) {
  const DivisorFn d = sqrt2_divisor();
  const OrderWitness w = order_witness(d);
  EXPECT_EQ(std::abs(w.sum), 3);
  EXPECT_EQ(interval_sum(d, w.a, w.b), w.sum);
}

TEST(Colouring, KnownExamples) {
  const DivisorFn d = rational_divisor({{0, 2}, {1, -1}});
  const auto parts = colour_decompose(d);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], rational_divisor({{0, 1}}));
  EXPECT_EQ(parts[1], rational_divisor({{0, 1}, {1, -1}}));

  const DivisorFn one = rational_divisor({{-1, 1}, {0, -1}, {1, 1}});
  const auto same = colour_decompose(one);
  ASSERT_EQ(same.size(), 1u);
  EXPECT_EQ(same[0], one);

  EXPECT_TRUE(colour_decompose(DivisorFn()).empty());
}

TEST(Colouring, AlgebraicSupport) {
  const DivisorFn d = sqrt2_divisor();
  const auto parts = colour_decompose(d);
  ASSERT_EQ(parts.size(), 3u);
  DivisorFn sum;
  for (const auto& p : parts) {
    EXPECT_TRUE(is_n_interlacing(p, 1));
    sum = sum + p;
  }
  EXPECT_EQ(sum, d);
}

// ---- properties -------------------------------------------------------------

TEST(Properties, ColouringPartsAndSum) {
  gen::Rng rng(21);
  for (int t = 0; t < 300; ++t) {
    const DivisorFn d = gen::divisor(rng, 40, 6);
    const int n = min_interlacing_order(d);
    EXPECT_EQ(n, brute_order(d));
    const auto parts = colour_decompose(d);
    ASSERT_EQ(static_cast<int>(parts.size()), n);
    DivisorFn sum;
    for (const auto& p : parts) {
      EXPECT_LE(brute_order(p), 1);
      for (int v : p.values()) EXPECT_EQ(std::abs(v), 1);
      sum = sum + p;
    }
    EXPECT_EQ(sum, d);
  }
}

TEST(Properties, OrderMatchesIntervalBruteForce) {
  gen::Rng rng(22);
  for (int t = 0; t < 100; ++t) {
    const DivisorFn d = gen::divisor(rng, 15, 6);
    EXPECT_EQ(min_interlacing_order(d), brute_order_by_intervals(d));
  }
}

TEST(Properties, SumOfInterlacingDivisors) {
  gen::Rng rng(23);
  for (int t = 0; t < 200; ++t) {
    const DivisorFn a = gen::divisor(rng, 12, 4), b = gen::divisor(rng, 12, 4);
    const int na = min_interlacing_order(a), nb = min_interlacing_order(b);
    EXPECT_TRUE(is_n_interlacing(a + b, na + nb));
  }
}

TEST(Properties, DivisorOfProductIsSum) {
  gen::Rng rng(24);
  for (int t = 0; t < 60; ++t) {
    const RatFn f = gen::real_rooted_fn(rng, 4), g = gen::real_rooted_fn(rng, 4);
    EXPECT_EQ(divisor_of(f * g), divisor_of(f) + divisor_of(g));
  }
}
