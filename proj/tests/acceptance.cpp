// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>

#include "a22/embeddings.hpp"
#include "a22/enumerate.hpp"
#include "a22/identities.hpp"
#include "a22/leading_terms.hpp"
#include "a22/qseries.hpp"
#include "a22/specialize.hpp"
#include "support.hpp"

using namespace a22;

namespace {

constexpr double kEmbeddingBudgetSeconds = 1.0;
constexpr double kIdentityBudgetSeconds = 60.0;
constexpr int kTheoremAMaxN = 300;
constexpr int kTwoColorMaxN = 200;
constexpr int kOrderCases = 10000;
constexpr int kTranslationCases = 10000;
constexpr int kBijectionLimit = 1000;
constexpr int kSeriesOracleMaxN = 100;
constexpr int kManyWorkers = 8;

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
  std::printf("criterion %d: %s  %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  failures += !ok;
}

template <class F>
double seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

void embedding_sums_criteria() {
  ResidueClassSums r3, r5;
  const double t = seconds([&] {
    r3 = embedding_sums(3);
    r5 = embedding_sums(5);
  });
  bool ok = r3 == r5;
  std::string sums;
  std::int64_t half = 0, integer = 0;
  for (auto c : kDegreeClasses) {
    const auto v = r3[c];
    sums += (sums.empty() ? "" : ",") + std::to_string(v);
    ok = ok && v == (is_half_integer_class(c) ? 81 : 80);
    (is_half_integer_class(c) ? half : integer) = v;
  }
  report(1, ok && t < kEmbeddingBudgetSeconds, "sums " + sums + " at radii 3 and 5 in " + fmt(t));
  report(2, half + integer == 161 && kHalfIntegerClassSum + kIntegerClassSum == kRelationSpaceDimension,
         std::to_string(half) + "+" + std::to_string(integer) + "=" + std::to_string(half + integer));
}

std::string identity_criterion(int id, Identity which, int max_n) {
  VerificationReport r;
  const double t = seconds([&] { r = verify_identity(which, max_n, 1); });
  report(id, r.ok() && t < kIdentityBudgetSeconds,
         std::string(name(which)) + " up to " + std::to_string(max_n) + ", " +
             std::to_string(r.mismatches.size()) + " mismatches in " + fmt(t));
  return r.to_json(false);
}

void rule_table_criterion() {
  const std::vector<std::string> expected = {
      "specialization: (2,1)",
      "sum modulus: 16",
      "parts: all positive integers",
      "forbidden part: 2",
      "minimum difference: 5",
      "difference 5 => sum != +-1, +-5, +-7 (mod 16)",
      "difference 6 => sum != +-2, +-6 (mod 16)",
      "difference 7 => sum != +-3 (mod 16)",
      "difference 8 => sum != +-4 (mod 16)",
  };
  const auto lines = derive_rule_table(Specialization(2, 1)).render();
  report(5, lines == expected, std::to_string(lines.size()) + " lines, minimum difference 5, four clauses");
}

void pattern_table_criterion() {
  const auto& table = leading_terms();
  bool rows_ok = pattern_templates().size() == 54;
  for (const auto& t : pattern_templates()) {
    int realized = 0;
    for (int s = 0; s < t.shape_count; ++s) {
      const auto off = offsets(t.shapes[s]);
      realized += ColoredPart{t.first_color, off.first}.parity_ok() &&
                  ColoredPart{t.second_color, off.second}.parity_ok();
    }
    rows_ok = rows_ok && realized == 1;
  }
  int twisted = 0, untwisted = 0;
  for (int a = 1; a <= 8; ++a) {
    for (int b = a; b <= 8; ++b) {
      const auto sa = ColorIndex(a).sector();
      if (sa != ColorIndex(b).sector()) continue;
      const HalfInt d = sa == Sector::twisted ? HalfInt::halves(-5) : HalfInt::integer(-2);
      if (!table.is_forbidden_pair(ColoredPart{a, d}, ColoredPart{b, d})) continue;
      (sa == Sector::twisted ? twisted : untwisted)++;
    }
  }
  report(6, table.size() == 54 && rows_ok && twisted == 15 && untwisted == 6,
         std::to_string(table.size()) + " families, one per printed row, gap-0 multisets " +
             std::to_string(twisted) + "+" + std::to_string(untwisted));
}

void property_criterion(const std::string& a1, const std::string& b1) {
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> len(0, 4), shift(-6, 6);

  bool order_ok = true;
  for (int i = 0; i < kOrderCases; ++i) {
    const int l = len(rng);
    const auto a = test::random_partition(rng, l, -4, 0);
    const auto b = test::random_partition(rng, l, -4, 0);
    const auto c = test::random_partition(rng, len(rng), -4, 0);
    const auto ab = compare(a, b);
    order_ok = order_ok && ((ab == 0) == (a == b)) && ((ab < 0) == (compare(b, a) > 0));
    const auto& lo = ab <= 0 ? a : b;
    const auto& hi = ab <= 0 ? b : a;
    order_ok = order_ok && compare(c * lo, c * hi) <= 0;
  }

  bool translation_ok = true;
  for (int i = 0; i < kTranslationCases; ++i) {
    const auto pi = test::random_partition(rng, 2 + i % 3, -6, 0);
    const int m = shift(rng);
    translation_ok = translation_ok && count_embeddings(pi) == count_embeddings(translate(pi, m));
    if (pi.length() >= 2) {
      translation_ok = translation_ok && leading_terms().is_forbidden_pair(pi[0], pi[1]) ==
                                             leading_terms().is_forbidden_pair(pi[0].shifted(m), pi[1].shifted(m));
    }
  }

  const Specialization s21(2, 1);
  std::map<std::int64_t, int> hits;
  for (const auto& p : admitted_parts(s21, kBijectionLimit, true)) ++hits[weight(p, s21)];
  bool bijection_ok = hits.size() == kBijectionLimit && hits.begin()->first == 1 &&
                      hits.rbegin()->first == kBijectionLimit;
  for (const auto& [v, n] : hits) bijection_ok = bijection_ok && n == 1;

  const int N = kSeriesOracleMaxN;
  const auto pm = product_pm1_mod6(N);
  const auto odd = product_distinct_odd(N);
  const auto pm_brute = pm1_mod6_counts(N, 1);
  const auto odd_brute = distinct_odd_counts(N, 1);
  const auto pm_dp = test::restricted_partition_counts(N, [](int k) { return k % 6 == 1 || k % 6 == 5; }, N);
  const auto odd_dp = test::restricted_partition_counts(N, [](int k) { return k % 2 == 1; }, 1);
  bool series_ok = true;
  for (int n = 0; n <= N; ++n) {
    series_ok = series_ok && pm[n] == pm_brute[n] && pm[n] == pm_dp[n] && odd[n] == odd_brute[n] &&
                odd[n] == odd_dp[n];
  }

  const bool parallel_ok =
      verify_identity(Identity::theorem_a, kTheoremAMaxN, kManyWorkers).to_json(false) == a1 &&
      verify_identity(Identity::theorem_3_1, kTwoColorMaxN, kManyWorkers).to_json(false) == b1;

  std::string detail;
  const auto add = [&](const char* label, bool ok) {
    detail += std::string(detail.empty() ? "" : ", ") + label + (ok ? " ok" : " FAILED");
  };
  add("order", order_ok);
  add("translation", translation_ok);
  add("bijection 1..1000", bijection_ok);
  add("series vs brute force", series_ok);
  add("1 vs 8 workers", parallel_ok);
  report(7, order_ok && translation_ok && bijection_ok && series_ok && parallel_ok, detail);
}

}  // namespace

int main() {
  embedding_sums_criteria();
  const auto a1 = identity_criterion(3, Identity::theorem_a, kTheoremAMaxN);
  const auto b1 = identity_criterion(4, Identity::theorem_3_1, kTwoColorMaxN);
  rule_table_criterion();
  pattern_table_criterion();
  property_criterion(a1, b1);
  std::printf("%s\n", failures == 0 ? "all criteria PASS" : "some criteria FAILED");
  return failures == 0 ? 0 : 1;
}
