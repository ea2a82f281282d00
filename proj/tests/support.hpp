#pragma once

// Test-only generators and oracles. Nothing here calls into the lookup table,
// the weight formulas or the search kernel it is used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "a22/partition.hpp"

namespace a22::test {

inline ColoredPart random_part(std::mt19937& rng, int min_twice = -12, int max_twice = 4) {
  std::uniform_int_distribution<int> color(1, 8);
  std::uniform_int_distribution<int> twice(min_twice, max_twice);
  const int c = color(rng);
  int t = twice(rng);
  const bool want_integer = c >= 6;
  if ((t % 2 == 0) != want_integer) t += (t < max_twice ? 1 : -1);
  return ColoredPart{c, HalfInt{t}};
}

inline ColoredPartition random_partition(std::mt19937& rng, int length, int min_twice = -12,
                                         int max_twice = 4) {
  std::vector<ColoredPart> parts;
  for (int i = 0; i < length; ++i) parts.push_back(random_part(rng, min_twice, max_twice));
  return canonicalize(std::move(parts));
}

using PartKey = std::pair<int, int>;  // (twice degree, color)
using PairKey = std::pair<PartKey, PartKey>;

inline PartKey key(const ColoredPart& p) { return {p.degree.twice, p.color.value()}; }

inline PairKey pair_key(const ColoredPart& a, const ColoredPart& b) {
  auto x = key(a);
  auto y = key(b);
  if (y < x) std::swap(x, y);
  return {x, y};
}

/// Every concrete forbidden pair with j in [j_min, j_max], instantiated
/// straight from the printed color lists and shape strings.
inline std::set<PairKey> printed_pairs(int j_min, int j_max) {
  struct Block {
    std::vector<std::pair<int, int>> shapes;  // twice offsets
    std::string colors;
  };
  const std::vector<Block> blocks = {
      {{{-1, -1}, {-2, 0}}, "11,21,22,31,32,41,33,42,51,43,52,44,53,54,55"},
      {{{-3, -1}, {-2, -2}}, "11,12,13,66,14,76,15,77,86,25,87,35,88,45,55"},
      {{{-1, 0}}, "16,17,26,18,27,28,37,47,38,48,57,58"},
      {{{-2, -1}}, "61,71,62,63,72,73,64,74,65,84,75,85"},
  };
  std::set<PairKey> out;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i + 1 < b.colors.size(); i += 3) {
      const int c1 = b.colors[i] - '0';
      const int c2 = b.colors[i + 1] - '0';
      for (auto [o1, o2] : b.shapes) {
        for (int j = j_min; j <= j_max; ++j) {
          const ColoredPart p{c1, HalfInt{2 * j + o1}};
          const ColoredPart q{c2, HalfInt{2 * j + o2}};
          if (p.parity_ok() && q.parity_ok()) out.insert(pair_key(p, q));
        }
      }
    }
  }
  return out;
}

/// Degrees of every pair the oracle knows about lie in [2*j_min - 3, 2*j_max].
struct PrintedOracle {
  std::set<PairKey> pairs = printed_pairs(-60, 10);

  bool forbidden(const ColoredPart& a, const ColoredPart& b) const {
    return pairs.contains(pair_key(a, b));
  }

  bool difference_R(const ColoredPartition& pi) const {
    const auto parts = pi.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = i + 1; j < parts.size(); ++j) {
        if (forbidden(parts[i], parts[j])) return false;
      }
    }
    return true;
  }

  int embeddings(const ColoredPartition& pi) const {
    std::set<PairKey> seen;
    const auto parts = pi.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = i + 1; j < parts.size(); ++j) {
        if (forbidden(parts[i], parts[j])) seen.insert(pair_key(parts[i], parts[j]));
      }
    }
    return static_cast<int>(seen.size());
  }
};

inline const PrintedOracle& printed_oracle() {
  static const PrintedOracle oracle;
  return oracle;
}

/// Closed form of the specialized weight: -m * degree + charge(color) * s1,
/// charge = (-2, -1, 0, 1, 2, -1, 0, 1) for colors 1..8.
inline std::int64_t closed_form_weight(const ColoredPart& p, int s0, int s1) {
  static constexpr int kCharge[9] = {0, -2, -1, 0, 1, 2, -1, 0, 1};
  const std::int64_t m = 4 * s1 + 2 * s0;
  return -m * p.degree.twice / 2 + kCharge[p.color.value()] * s1;
}

/// Basis counts by plain subset recursion with all-pairs checks against the
/// printed oracle. Slow; only for small bounds.
inline std::vector<std::uint64_t> naive_basis_counts(int s0, int s1, int max_n) {
  std::vector<std::pair<std::int64_t, ColoredPart>> parts;
  for (int twice = 0; twice >= -2 * (max_n + 2); --twice) {
    for (int c = 1; c <= 8; ++c) {
      const ColoredPart p{c, HalfInt{twice}};
      if (!p.parity_ok()) continue;
      const bool p_minus = twice < 0 || (c == 8 && twice == 0);
      const bool excluded = c == 1 && twice == -1;
      if (!p_minus || excluded) continue;
      const auto w = closed_form_weight(p, s0, s1);
      if (w <= max_n) parts.emplace_back(w, p);
    }
  }
  std::vector<std::uint64_t> counts(max_n + 1, 0);
  const auto& oracle = printed_oracle();
  std::vector<ColoredPart> chosen;
  auto rec = [&](auto&& self, std::size_t next, std::int64_t total) -> void {
    ++counts[total];
    for (std::size_t i = next; i < parts.size(); ++i) {
      const auto& [w, p] = parts[i];
      if (total + w > max_n) continue;
      bool ok = true;
      for (const auto& q : chosen) ok = ok && !oracle.forbidden(p, q);
      if (!ok) continue;
      chosen.push_back(p);
      self(self, i + 1, total + w);
      chosen.pop_back();
    }
  };
  rec(rec, 0, 0);
  return counts;
}

/// Partitions of n with parts drawn from `allowed` (each part at most
/// `max_mult` times), by the standard bounded-part recurrence.
inline std::vector<std::uint64_t> restricted_partition_counts(int max_n, bool (*allowed)(int),
                                                              int max_mult) {
  std::vector<std::uint64_t> counts(max_n + 1, 0);
  counts[0] = 1;
  for (int k = 1; k <= max_n; ++k) {
    if (!allowed(k)) continue;
    std::vector<std::uint64_t> next(max_n + 1, 0);
    for (int n = 0; n <= max_n; ++n) {
      for (int mult = 0; mult <= max_mult && mult * k <= n; ++mult) next[n] += counts[n - mult * k];
    }
    counts = std::move(next);
  }
  return counts;
}

}  // namespace a22::test
