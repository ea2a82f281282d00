#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <limits>
#include <random>

#include "a22/identities.hpp"
#include "a22/qseries.hpp"
#include "support.hpp"

using namespace a22;

namespace {
TruncatedSeries poly(std::vector<int> c, int order) {
  TruncatedSeries s(order);
  for (std::size_t i = 0; i < c.size() && static_cast<int>(i) <= order; ++i) s[static_cast<int>(i)] = c[i];
  return s;
}
}  // namespace

TEST_CASE("series arithmetic") {
  const auto one = TruncatedSeries::one(10);
  const auto a = poly({3, -1, 4, 1, -5}, 10);
  CHECK(mul(one, a) == a);
  CHECK(mul(poly({1, 1}, 10), poly({1, -1}, 10)) == poly({1, 0, -1}, 10));

  auto g = TruncatedSeries::one(10);
  g.divide_by_one_minus(3);
  CHECK(mul(g, poly({1, 0, 0, -1}, 10)) == one);
  auto h = TruncatedSeries::one(10);
  h.multiply_by_one_plus(4);
  CHECK(h == poly({1, 0, 0, 0, 1}, 10));

  std::mt19937 rng(4);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int i = 0; i < 50; ++i) {
    std::vector<int> x(12), y(12);
    for (auto& v : x) v = coeff(rng);
    for (auto& v : y) v = coeff(rng);
    CHECK(mul(poly(x, 11), poly(y, 11)) == mul(poly(y, 11), poly(x, 11)));
  }

  CHECK_THROWS_AS(mul(TruncatedSeries(4), TruncatedSeries(5)), std::invalid_argument);
  CHECK_THROWS_AS(TruncatedSeries(-1), std::invalid_argument);
}

TEST_CASE("product coefficients") {
  const auto pm = product_pm1_mod6(20);
  CHECK(pm[0] == 1);
  CHECK(pm[1] == 1);
  CHECK(pm[6] == 2);
  CHECK(pm[9] == 3);
  const auto odd = product_distinct_odd(20);
  CHECK(odd[0] == 1);
  CHECK(odd[1] == 1);
  CHECK(odd[2] == 0);
  CHECK(odd[8] == 2);
}

TEST_CASE("products against restricted-partition DP and explicit enumeration") {
  const int N = 100;
  const auto pm_dp = test::restricted_partition_counts(N, [](int k) { return k % 6 == 1 || k % 6 == 5; }, N);
  const auto odd_dp = test::restricted_partition_counts(N, [](int k) { return k % 2 == 1; }, 1);
  const auto pm = product_pm1_mod6(N);
  const auto odd = product_distinct_odd(N);
  const auto pm_brute = pm1_mod6_counts(N, 1);
  const auto odd_brute = distinct_odd_counts(N, 1);
  for (int n = 0; n <= N; ++n) {
    CHECK(pm[n] == pm_dp[n]);
    CHECK(odd[n] == odd_dp[n]);
    CHECK(pm[n] == pm_brute[n]);
    CHECK(odd[n] == odd_brute[n]);
  }
}

TEST_CASE("comparison reports the first difference") {
  auto a = product_pm1_mod6(30);
  auto b = a;
  CHECK(equal_up_to(a, b, 30));
  b[17] += 1;
  const auto c = equal_up_to(a, b, 30);
  CHECK_FALSE(c);
  CHECK(c.exponent == 17);
  CHECK(c.right == c.left + 1);
  CHECK(equal_up_to(a, b, 16));
  CHECK_THROWS_AS(equal_up_to(a, product_pm1_mod6(10), 20), std::invalid_argument);
}

TEST_CASE("exact arithmetic past 64 bits") {
  // prod 1/(1 - q^n) over n = +-1 (mod 6), times the inverse factors, is 1.
  const int N = 2000;
  auto s = product_pm1_mod6(N);
  bool wide = false;
  for (int n = 0; n <= N; ++n) wide = wide || s[n] > BigInt(std::numeric_limits<std::uint64_t>::max());
  CHECK(wide);
  for (int k = 1; k <= N; ++k) {
    if (k % 6 != 1 && k % 6 != 5) continue;
    TruncatedSeries f = TruncatedSeries::one(N);
    f[k] = -1;
    s = mul(s, f);
  }
  CHECK(s == TruncatedSeries::one(N));
}
