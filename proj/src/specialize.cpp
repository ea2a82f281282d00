#include "a22/specialize.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include "a22/leading_terms.hpp"

namespace a22 {

Specialization::Specialization(int s0, int s1) : s0_(s0), s1_(s1) {
  if (s0 < 0 || s1 < 0) throw std::invalid_argument("specialization entries must be nonnegative");
  if (std::gcd(s0, s1) != 1) {
    throw std::invalid_argument("specialization (" + std::to_string(s0) + "," +
                                std::to_string(s1) + ") is not coprime");
  }
}

Specialization parse_specialization(std::string_view text) {
  const auto comma = text.find(',');
  auto parse = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
      throw std::invalid_argument("malformed specialization '" + std::string(text) +
                                  "', expected S0,S1");
    }
    return v;
  };
  if (comma == std::string_view::npos) {
    throw std::invalid_argument("malformed specialization '" + std::string(text) +
                                "', expected S0,S1");
  }
  return Specialization(parse(text.substr(0, comma)), parse(text.substr(comma + 1)));
}

std::string to_string(const Specialization& s) {
  return std::to_string(s.s0()) + "," + std::to_string(s.s1());
}

std::int64_t weight(const ColoredPart& p, const Specialization& s) {
  if (!p.parity_ok() || !in_P_minus(p)) {
    throw std::domain_error("part " + to_string(p) + " is outside P_minus");
  }
  const std::int64_t m = s.modulus();
  const std::int64_t s0 = s.s0();
  const std::int64_t s1 = s.s1();
  const int c = p.color.value();
  if (c <= 5) {
    // X_c(-k-1/2), k >= 0
    const std::int64_t k = (-p.degree.twice - 1) / 2;
    return s0 + (c - 1) * s1 + k * m;
  }
  // X6(-k-1), X7(-k-1), X8(-k)
  const std::int64_t j = -p.degree.twice / 2;
  switch (c) {
    case 6: return -s1 + j * m;
    case 7: return j * m;
    default: return s1 + j * m;
  }
}

int color_class(const ColoredPart& p) {
  const int c = p.color.value();
  return c == 1 || c == 5 ? 2 : 1;
}

WeightedPart specialize(const ColoredPart& p, const Specialization& s) {
  return {weight(p, s), color_class(p), p};
}

std::vector<ColoredPart> admitted_parts(const Specialization& s, std::int64_t max_weight,
                                        bool include_excluded_initial) {
  std::vector<std::pair<std::int64_t, ColoredPart>> found;
  // weight = -m*degree + charge*s1 with |charge| <= 2 and 2*s1 <= m/2, so parts of
  // weight <= max_weight have degree >= -(max_weight/m + 1/2).
  const int depth = static_cast<int>(max_weight / std::max(1, s.modulus())) + 2;
  for (int twice = 0; twice >= -2 * depth; --twice) {
    for (int c = 1; c <= ColorIndex::kCount; ++c) {
      const ColoredPart p{c, HalfInt{twice}};
      if (!p.parity_ok() || !in_P_minus(p)) continue;
      if (!include_excluded_initial && p == kExcludedInitialPart) continue;
      const auto w = weight(p, s);
      if (w <= max_weight) found.emplace_back(w, p);
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return canonical_order(a.second, b.second) > 0;
  });
  std::vector<ColoredPart> out;
  out.reserve(found.size());
  for (const auto& [w, p] : found) out.push_back(p);
  return out;
}

std::int64_t min_admitted_weight(const Specialization& s) {
  // Weight decreases with degree, so the minimum sits on the top degree layer.
  std::int64_t best = weight(ColoredPart{8, HalfInt{}}, s);
  for (int c = 2; c <= 5; ++c) best = std::min(best, weight(ColoredPart{c, HalfInt{-1}}, s));
  for (int c = 6; c <= 8; ++c) best = std::min(best, weight(ColoredPart{c, HalfInt{-2}}, s));
  return best;
}

bool check_injectivity(const Specialization& s, std::int64_t bound) {
  std::set<std::pair<std::int64_t, int>> seen;
  for (const auto& p : admitted_parts(s, bound, true)) {
    if (!seen.emplace(weight(p, s), color_class(p)).second) return false;
  }
  return true;
}

bool values_injective(const Specialization& s, std::int64_t bound) {
  std::set<std::int64_t> seen;
  for (const auto& p : admitted_parts(s, bound, true)) {
    if (!seen.insert(weight(p, s)).second) return false;
  }
  return true;
}

}  // namespace a22
