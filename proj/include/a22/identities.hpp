#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "a22/parallel.hpp"
#include "a22/qseries.hpp"
#include "a22/specialize.hpp"

namespace a22 {

// ---------------------------------------------------------------------------
// Counters for the two identities as stated, independent of the basis search.
// ---------------------------------------------------------------------------

/// Consecutive parts lower < upper of the single-color identity: difference at
/// least 5, with sum exclusions mod 16 for differences 5 through 8.
bool theorem_a_pair_allowed(int lower, int upper);

/// Partitions of n into parts other than 2 whose consecutive parts satisfy
/// theorem_a_pair_allowed.
CountVector theorem_a_counts(int max_n, int workers = 0);
std::uint64_t theorem_a_count(int n);

struct TwoColorPart {
  int value;
  int color;  // 1 or 2
};

/// Consecutive parts of the two-color identity (lower.value < upper.value):
///   difference >= 4;
///   difference 6 => not both parts of color 2;
///   difference 5 => neither part of color 2;
///   difference 4 => neither part of color 2 and sum != +-4 (mod 12).
bool theorem_3_1_pair_allowed(TwoColorPart lower, TwoColorPart upper);

/// Two-color partitions of n whose color-2 parts are = +-1 (mod 6) and > 1 and
/// whose consecutive parts satisfy theorem_3_1_pair_allowed.
CountVector theorem_3_1_counts(int max_n, int workers = 0);
std::uint64_t theorem_3_1_count(int n);

/// Partitions into distinct odd parts, by explicit enumeration.
CountVector distinct_odd_counts(int max_n, int workers = 0);

/// Partitions into parts = +-1 (mod 6), by explicit enumeration.
CountVector pm1_mod6_counts(int max_n, int workers = 0);

// ---------------------------------------------------------------------------
// Rule tables: the leading-term families pushed through a specialization.
// ---------------------------------------------------------------------------

class UnsupportedSpecialization : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The image of one pattern family: the two weights differ by `difference` and
/// their sum is congruent to `residue` modulo twice the period.
struct PairRule {
  int difference;
  int residue;
  int low_class;   // color class of the smaller value
  int high_class;  // color class of the larger value
  int family;      // index into leading_terms().families()
};

/// Aggregated exclusions for one difference and one color-class pair (0 = any
/// class when plain values already identify parts).
struct DifferenceClause {
  int difference;
  int low_class;
  int high_class;
  std::vector<int> forbidden_residues;
  bool whole_class_forbidden;
};

struct RuleTable {
  Specialization spec{1, 1};
  int sum_modulus = 0;  // 2m
  bool uses_classes = false;
  // (value, class) of parts removed by the initial condition.
  std::vector<std::pair<std::int64_t, int>> forbidden_parts;
  // Residues modulo m realized by each color class, class 1 first.
  std::vector<std::vector<int>> class_residues;
  std::vector<PairRule> rules;
  int min_difference = 0;
  std::vector<int> always_forbidden_differences;
  std::vector<DifferenceClause> clauses;

  /// Human-readable lines; stable across runs.
  std::vector<std::string> render() const;
};

/// Throws UnsupportedSpecialization unless (weight, color class) identifies
/// parts and every admitted weight is positive.
RuleTable derive_rule_table(const Specialization& s);

/// "+-1, +-5, 8" style listing of a residue set modulo `modulus`.
std::string format_residues(const std::vector<int>& residues, int modulus);

// ---------------------------------------------------------------------------
// Multi-pipeline verification.
// ---------------------------------------------------------------------------

enum class Identity { theorem_a, theorem_3_1 };

std::string_view name(Identity id);  // "theorem-a", "theorem-3-1"
Specialization specialization_of(Identity id);

struct Mismatch {
  int n;
  std::string pipeline;
  BigInt expected;
  BigInt got;
};

struct VerificationReport {
  std::string identity;
  int max_n = 0;
  // basis, stated-rules, brute-force product side, q-series (the reference).
  std::vector<std::string> pipelines;
  std::vector<std::vector<BigInt>> counts;
  std::vector<Mismatch> mismatches;
  std::string rule_semantics;
  std::int64_t duration_ms = 0;

  bool ok() const { return mismatches.empty(); }

  /// Full report. `include_duration` = false gives run-independent output.
  std::string to_json(bool include_duration = true) const;
};

VerificationReport verify_identity(Identity id, int max_n, int workers = 0);

}  // namespace a22
