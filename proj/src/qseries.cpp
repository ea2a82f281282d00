#include "a22/qseries.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace a22 {

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  coeffs_.assign(order + 1, BigInt(0));
}

TruncatedSeries::TruncatedSeries(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::one(int order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

void TruncatedSeries::divide_by_one_minus(int k) {
  // b[n] = a[n] + b[n-k]
  for (std::size_t n = k; n < coeffs_.size(); ++n) coeffs_[n] += coeffs_[n - k];
}

void TruncatedSeries::multiply_by_one_plus(int k) {
  for (std::size_t n = coeffs_.size(); n-- > static_cast<std::size_t>(k);) {
    coeffs_[n] += coeffs_[n - k];
  }
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("series orders differ: " + std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()));
  }
  const int n = a.order();
  TruncatedSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

TruncatedSeries product_pm1_mod6(int order) {
  auto s = TruncatedSeries::one(order);
  for (int k = 1; k <= order; ++k) {
    if (k % 6 == 1 || k % 6 == 5) s.divide_by_one_minus(k);
  }
  return s;
}

TruncatedSeries product_distinct_odd(int order) {
  auto s = TruncatedSeries::one(order);
  for (int k = 1; k <= order; k += 2) s.multiply_by_one_plus(k);
  return s;
}

SeriesComparison equal_up_to(const TruncatedSeries& a, const TruncatedSeries& b, int n) {
  if (a.order() < n || b.order() < n) {
    throw std::invalid_argument("series order below comparison bound " + std::to_string(n));
  }
  for (int i = 0; i <= n; ++i) {
    if (a[i] != b[i]) return {false, i, a[i], b[i]};
  }
  return {};
}

}  // namespace a22
