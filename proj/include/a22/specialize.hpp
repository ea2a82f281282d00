#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "a22/partition.hpp"

namespace a22 {

/// Specialization of type (s0, s1): a positive-integer weight for every part
/// of P_minus, with period m = 4*s1 + 2*s0 per unit of degree.
class Specialization {
 public:
  /// Throws std::invalid_argument unless s0, s1 >= 0 are coprime.
  Specialization(int s0, int s1);

  int s0() const { return s0_; }
  int s1() const { return s1_; }
  int modulus() const { return 4 * s1_ + 2 * s0_; }

  friend bool operator==(const Specialization&, const Specialization&) = default;

 private:
  int s0_;
  int s1_;
};

/// Parses "S0,S1".
Specialization parse_specialization(std::string_view text);
std::string to_string(const Specialization& s);

/// Throws std::domain_error if `p` is outside P_minus.
std::int64_t weight(const ColoredPart& p, const Specialization& s);

/// 2 for colors 1 and 5, 1 otherwise.
int color_class(const ColoredPart& p);

struct WeightedPart {
  std::int64_t value;
  int color_class;
  ColoredPart origin;
};

WeightedPart specialize(const ColoredPart& p, const Specialization& s);

/// Parts of P_minus with weight <= max_weight, by descending weight (ties in
/// reverse canonical order). X1(-1/2) is included only when asked.
std::vector<ColoredPart> admitted_parts(const Specialization& s, std::int64_t max_weight,
                                        bool include_excluded_initial = false);

/// Smallest weight over the parts admitted by the initial condition.
std::int64_t min_admitted_weight(const Specialization& s);

/// (value, color_class) is injective over parts of P_minus with weight <= bound.
bool check_injectivity(const Specialization& s, std::int64_t bound);

/// Plain values alone are injective over the same range.
bool values_injective(const Specialization& s, std::int64_t bound);

}  // namespace a22
