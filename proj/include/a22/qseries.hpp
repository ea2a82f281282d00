#pragma once

#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace a22 {

using BigInt = boost::multiprecision::cpp_int;

/// Power series in q with exact coefficients for exponents 0..order.
class TruncatedSeries {
 public:
  /// The zero series.
  explicit TruncatedSeries(int order);
  explicit TruncatedSeries(std::vector<BigInt> coefficients);

  static TruncatedSeries one(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& operator[](int n) const { return coeffs_[n]; }
  BigInt& operator[](int n) { return coeffs_[n]; }
  std::span<const BigInt> coefficients() const { return coeffs_; }

  /// In-place multiplication by 1/(1 - q^k), k >= 1.
  void divide_by_one_minus(int k);
  /// In-place multiplication by (1 + q^k), k >= 1.
  void multiply_by_one_plus(int k);

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// Cauchy product truncated at the common order; throws std::invalid_argument
/// when the orders differ.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// prod over n = +-1 (mod 6) of 1/(1 - q^n).
TruncatedSeries product_pm1_mod6(int order);

/// prod over n >= 1 of (1 + q^(2n-1)).
TruncatedSeries product_distinct_odd(int order);

struct SeriesComparison {
  bool equal = true;
  // First exponent where the coefficients differ, when !equal.
  int exponent = -1;
  BigInt left;
  BigInt right;

  explicit operator bool() const { return equal; }
};

/// Compares coefficients for exponents 0..n. Both orders must be >= n.
SeriesComparison equal_up_to(const TruncatedSeries& a, const TruncatedSeries& b, int n);

}  // namespace a22
