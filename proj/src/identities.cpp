#include "a22/identities.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <tuple>

#include "json.hpp"

#include "a22/enumerate.hpp"
#include "a22/leading_terms.hpp"

namespace a22 {

namespace {

bool congruent_pm(int sum, int r, int modulus) {
  const int s = sum % modulus;
  return s == r % modulus || s == (modulus - r) % modulus;
}

// All DFS counters below add one to counts[total] per visited partition and
// split the work by the largest part.

void theorem_a_walk(int upper, int total, int max_n, std::uint64_t* counts) {
  ++counts[total];
  for (int x = std::min(upper - 5, max_n - total); x >= 1; --x) {
    if (x == 2) continue;
    if (upper - x <= 8 && !theorem_a_pair_allowed(x, upper)) continue;
    theorem_a_walk(x, total + x, max_n, counts);
  }
}

bool two_color_part_valid(TwoColorPart p) {
  if (p.value < 1) return false;
  if (p.color == 1) return true;
  return p.color == 2 && p.value > 1 && (p.value % 6 == 1 || p.value % 6 == 5);
}

void theorem_3_1_walk(TwoColorPart upper, int total, int max_n, std::uint64_t* counts) {
  ++counts[total];
  for (int x = std::min(upper.value - 4, max_n - total); x >= 1; --x) {
    for (int color = 1; color <= 2; ++color) {
      const TwoColorPart lower{x, color};
      if (!two_color_part_valid(lower)) continue;
      if (upper.value - x <= 6 && !theorem_3_1_pair_allowed(lower, upper)) continue;
      theorem_3_1_walk(lower, total + x, max_n, counts);
    }
  }
}

void distinct_odd_walk(int upper, int total, int max_n, std::uint64_t* counts) {
  ++counts[total];
  int x = std::min(upper - 2, max_n - total);
  if (x % 2 == 0) --x;
  for (; x >= 1; x -= 2) distinct_odd_walk(x, total + x, max_n, counts);
}

void pm1_mod6_walk(int upper, int total, int max_n, std::uint64_t* counts) {
  ++counts[total];
  for (int x = std::min(upper, max_n - total); x >= 1; --x) {
    if (x % 6 == 1 || x % 6 == 5) pm1_mod6_walk(x, total + x, max_n, counts);
  }
}

void require_nonnegative(int max_n) {
  if (max_n < 0) throw std::domain_error("bound must be nonnegative, got " + std::to_string(max_n));
}

template <class Walk>
CountVector by_largest_part(int max_n, int workers, Walk walk) {
  require_nonnegative(max_n);
  auto counts = sum_over_tasks(static_cast<std::size_t>(max_n), max_n + 1, workers,
                               [&](std::size_t i, CountVector& local) {
                                 walk(static_cast<int>(i) + 1, local.data());
                               });
  counts[0] += 1;
  return counts;
}

nlohmann::json to_json_number(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) {
    return v.convert_to<std::uint64_t>();
  }
  return v.str();
}

}  // namespace

// ---------------------------------------------------------------------------

bool theorem_a_pair_allowed(int lower, int upper) {
  const int diff = upper - lower;
  const int sum = upper + lower;
  switch (diff) {
    case 5: return !(congruent_pm(sum, 1, 16) || congruent_pm(sum, 5, 16) || congruent_pm(sum, 7, 16));
    case 6: return !(congruent_pm(sum, 2, 16) || congruent_pm(sum, 6, 16));
    case 7: return !congruent_pm(sum, 3, 16);
    case 8: return !congruent_pm(sum, 4, 16);
    default: return diff > 8;
  }
}

CountVector theorem_a_counts(int max_n, int workers) {
  return by_largest_part(max_n, workers, [max_n](int largest, std::uint64_t* counts) {
    if (largest != 2) theorem_a_walk(largest, largest, max_n, counts);
  });
}

std::uint64_t theorem_a_count(int n) { return theorem_a_counts(n, 1)[n]; }

bool theorem_3_1_pair_allowed(TwoColorPart lower, TwoColorPart upper) {
  const int diff = upper.value - lower.value;
  const bool lower2 = lower.color == 2;
  const bool upper2 = upper.color == 2;
  switch (diff) {
    case 4: return !lower2 && !upper2 && !congruent_pm(upper.value + lower.value, 4, 12);
    case 5: return !lower2 && !upper2;
    case 6: return !(lower2 && upper2);
    default: return diff > 6;
  }
}

CountVector theorem_3_1_counts(int max_n, int workers) {
  return by_largest_part(max_n, workers, [max_n](int largest, std::uint64_t* counts) {
    for (int color = 1; color <= 2; ++color) {
      const TwoColorPart top{largest, color};
      if (two_color_part_valid(top)) theorem_3_1_walk(top, largest, max_n, counts);
    }
  });
}

std::uint64_t theorem_3_1_count(int n) { return theorem_3_1_counts(n, 1)[n]; }

CountVector distinct_odd_counts(int max_n, int workers) {
  return by_largest_part(max_n, workers, [max_n](int largest, std::uint64_t* counts) {
    if (largest % 2 == 1) distinct_odd_walk(largest, largest, max_n, counts);
  });
}

CountVector pm1_mod6_counts(int max_n, int workers) {
  return by_largest_part(max_n, workers, [max_n](int largest, std::uint64_t* counts) {
    if (largest % 6 == 1 || largest % 6 == 5) pm1_mod6_walk(largest, largest, max_n, counts);
  });
}

// ---------------------------------------------------------------------------

std::string format_residues(const std::vector<int>& residues, int modulus) {
  const std::set<int> set(residues.begin(), residues.end());
  std::string out;
  auto emit = [&](const std::string& item) {
    if (!out.empty()) out += ", ";
    out += item;
  };
  for (int r = 0; 2 * r <= modulus; ++r) {
    const int mirror = (modulus - r) % modulus;
    const bool has_r = set.contains(r);
    const bool has_mirror = set.contains(mirror);
    if (r == mirror) {
      if (has_r) emit(std::to_string(r));
    } else if (has_r && has_mirror) {
      emit("+-" + std::to_string(r));
    } else if (has_r) {
      emit(std::to_string(r));
    } else if (has_mirror) {
      emit(std::to_string(mirror));
    }
  }
  return out;
}

namespace {

struct PairType {
  int difference;
  int residue;
  int low_class;
  int high_class;
  auto operator<=>(const PairType&) const = default;
};

PairType pair_type(const ColoredPart& a, const ColoredPart& b, const Specialization& s) {
  const auto wa = weight(a, s);
  const auto wb = weight(b, s);
  int ca = color_class(a);
  int cb = color_class(b);
  const bool a_low = wa < wb || (wa == wb && ca <= cb);
  const auto lo = a_low ? wa : wb;
  const auto hi = a_low ? wb : wa;
  if (!a_low) std::swap(ca, cb);
  const int modulus = 2 * s.modulus();
  return {static_cast<int>(hi - lo), static_cast<int>((lo + hi) % modulus), ca, cb};
}

}  // namespace

RuleTable derive_rule_table(const Specialization& s) {
  if (min_admitted_weight(s) < 1) {
    throw UnsupportedSpecialization("specialization (" + to_string(s) +
                                    ") assigns a nonpositive weight to an admitted part");
  }
  const int m = s.modulus();
  if (!check_injectivity(s, 8 * static_cast<std::int64_t>(m))) {
    throw UnsupportedSpecialization("specialization (" + to_string(s) +
                                    ") does not separate parts by (value, color class)");
  }

  RuleTable table;
  table.spec = s;
  table.sum_modulus = 2 * m;
  table.uses_classes = !values_injective(s, 8 * static_cast<std::int64_t>(m));

  const auto excluded = specialize(kExcludedInitialPart, s);
  table.forbidden_parts.emplace_back(excluded.value, excluded.color_class);

  // Bulk parts, far enough from degree 0 that every translation class of a
  // nearby pair is represented.
  std::vector<ColoredPart> bulk;
  for (int twice = -24; twice <= -4; ++twice) {
    for (int c = 1; c <= ColorIndex::kCount; ++c) {
      const ColoredPart p{c, HalfInt{twice}};
      if (p.parity_ok()) bulk.push_back(p);
    }
  }

  std::set<int> residues_by_class[2];
  for (const auto& p : bulk) residues_by_class[color_class(p) - 1].insert(weight(p, s) % m);
  for (const auto& r : residues_by_class) table.class_residues.emplace_back(r.begin(), r.end());

  const auto& lt = leading_terms();
  const auto families = lt.families();
  std::set<PairType> forbidden;
  int max_rule_difference = 0;
  for (std::size_t f = 0; f < families.size(); ++f) {
    auto [a, b] = families[f].representative();
    const auto t = pair_type(a.shifted(-3), b.shifted(-3), s);
    table.rules.push_back({t.difference, t.residue, t.low_class, t.high_class, static_cast<int>(f)});
    forbidden.insert(t);
    max_rule_difference = std::max(max_rule_difference, t.difference);
  }
  std::sort(table.rules.begin(), table.rules.end(), [](const PairRule& x, const PairRule& y) {
    return std::tie(x.difference, x.low_class, x.high_class, x.residue) <
           std::tie(y.difference, y.low_class, y.high_class, y.residue);
  });

  std::set<PairType> realizable;
  for (std::size_t i = 0; i < bulk.size(); ++i) {
    for (std::size_t j = i; j < bulk.size(); ++j) {
      const auto t = pair_type(bulk[i], bulk[j], s);
      if (t.difference <= max_rule_difference) realizable.insert(t);
    }
  }

  // (difference, low class, high class) -> realizable / forbidden residues
  using ClassKey = std::tuple<int, int, int>;
  std::map<ClassKey, std::pair<std::set<int>, std::set<int>>> groups;
  for (const auto& t : realizable) {
    const int lc = table.uses_classes ? t.low_class : 0;
    const int hc = table.uses_classes ? t.high_class : 0;
    auto& g = groups[{t.difference, lc, hc}];
    g.first.insert(t.residue);
    if (forbidden.contains(t)) g.second.insert(t.residue);
  }

  std::map<int, bool> difference_blocked;
  for (const auto& [key, g] : groups) {
    const int d = std::get<0>(key);
    const bool blocked = g.first == g.second;
    auto [it, inserted] = difference_blocked.emplace(d, blocked);
    if (!inserted) it->second = it->second && blocked;
  }
  table.min_difference = max_rule_difference + 1;
  for (const auto& [d, blocked] : difference_blocked) {
    if (blocked) {
      table.always_forbidden_differences.push_back(d);
    } else {
      table.min_difference = std::min(table.min_difference, d);
    }
  }

  for (const auto& [key, g] : groups) {
    const auto [d, lc, hc] = key;
    if (difference_blocked[d] || g.second.empty()) continue;
    table.clauses.push_back(
        {d, lc, hc, std::vector<int>(g.second.begin(), g.second.end()), g.first == g.second});
  }
  return table;
}

std::vector<std::string> RuleTable::render() const {
  const int m = spec.modulus();
  const std::string mod = " (mod " + std::to_string(sum_modulus) + ")";
  auto describe = [&](const std::vector<int>& residues) {
    return static_cast<int>(residues.size()) == m
               ? std::string("all positive integers")
               : format_residues(residues, m) + " (mod " + std::to_string(m) + ")";
  };

  std::vector<std::string> lines;
  lines.push_back("specialization: (" + to_string(spec) + ")");
  lines.push_back("sum modulus: " + std::to_string(sum_modulus));
  if (uses_classes) {
    lines.push_back("color 1 parts: " + describe(class_residues[0]));
    lines.push_back("color 2 parts: " + describe(class_residues[1]));
  } else {
    std::set<int> all;
    for (const auto& r : class_residues) all.insert(r.begin(), r.end());
    lines.push_back("parts: " + describe(std::vector<int>(all.begin(), all.end())));
  }
  for (const auto& [value, cls] : forbidden_parts) {
    lines.push_back("forbidden part: " + std::to_string(value) +
                    (uses_classes ? " (color " + std::to_string(cls) + ")" : std::string()));
  }
  lines.push_back("minimum difference: " + std::to_string(min_difference));
  for (const auto& c : clauses) {
    std::string line = "difference " + std::to_string(c.difference);
    if (uses_classes) {
      line += ", colors (" + std::to_string(c.low_class) + "," + std::to_string(c.high_class) + ")";
    }
    line += " => ";
    line += c.whole_class_forbidden
                ? std::string("forbidden")
                : "sum != " + format_residues(c.forbidden_residues, sum_modulus) + mod;
    lines.push_back(std::move(line));
  }
  return lines;
}

// ---------------------------------------------------------------------------

std::string_view name(Identity id) {
  return id == Identity::theorem_a ? "theorem-a" : "theorem-3-1";
}

Specialization specialization_of(Identity id) {
  return id == Identity::theorem_a ? Specialization(2, 1) : Specialization(1, 1);
}

std::string VerificationReport::to_json(bool include_duration) const {
  nlohmann::json doc;
  doc["identity"] = identity;
  doc["max_n"] = max_n;
  doc["pipelines"] = pipelines;
  auto& arrays = doc["counts"] = nlohmann::json::array();
  for (const auto& column : counts) {
    auto arr = nlohmann::json::array();
    for (const auto& v : column) arr.push_back(to_json_number(v));
    arrays.push_back(std::move(arr));
  }
  auto& bad = doc["mismatches"] = nlohmann::json::array();
  for (const auto& mm : mismatches) {
    bad.push_back({{"n", mm.n},
                   {"pipeline", mm.pipeline},
                   {"expected", to_json_number(mm.expected)},
                   {"got", to_json_number(mm.got)}});
  }
  doc["rule_semantics"] = rule_semantics;
  if (include_duration) doc["duration_ms"] = duration_ms;
  return doc.dump(2);
}

VerificationReport verify_identity(Identity id, int max_n, int workers) {
  require_nonnegative(max_n);
  const auto start = std::chrono::steady_clock::now();

  VerificationReport report;
  report.identity = std::string(name(id));
  report.max_n = max_n;
  report.pipelines = {"basis", "rules", "brute_force", "series"};

  const auto spec = specialization_of(id);
  const bool a = id == Identity::theorem_a;
  std::vector<CountVector> exact;
  exact.push_back(count_basis(spec, max_n, workers));
  exact.push_back(a ? theorem_a_counts(max_n, workers) : theorem_3_1_counts(max_n, workers));
  exact.push_back(a ? distinct_odd_counts(max_n, workers) : pm1_mod6_counts(max_n, workers));
  const auto series = a ? product_distinct_odd(max_n) : product_pm1_mod6(max_n);

  for (const auto& column : exact) report.counts.emplace_back(column.begin(), column.end());
  report.counts.emplace_back(series.coefficients().begin(), series.coefficients().end());

  for (int n = 0; n <= max_n; ++n) {
    for (std::size_t p = 0; p + 1 < report.counts.size(); ++p) {
      if (report.counts[p][n] != series[n]) {
        report.mismatches.push_back({n, report.pipelines[p], series[n], report.counts[p][n]});
      }
    }
  }

  report.rule_semantics =
      a ? "parts != 2; difference >= 5; difference 5 => sum != +-1, +-5, +-7 (mod 16); "
          "difference 6 => sum != +-2, +-6 (mod 16); difference 7 => sum != +-3 (mod 16); "
          "difference 8 => sum != +-4 (mod 16)"
        : "color-2 parts = +-1 (mod 6) and > 1; difference >= 4; difference 6 => not both parts "
          "of color 2; difference 5 => neither part of color 2; difference 4 => neither part of "
          "color 2 and sum != +-4 (mod 12)";

  report.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  return report;
}

}  // namespace a22
