#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace a22 {

/// A degree in (1/2)Z, stored as twice its value so arithmetic stays exact.
struct HalfInt {
  int twice = 0;

  static constexpr HalfInt integer(int v) { return HalfInt{2 * v}; }
  static constexpr HalfInt halves(int h) { return HalfInt{h}; }

  constexpr bool is_integer() const { return twice % 2 == 0; }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return {a.twice + b.twice}; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return {a.twice - b.twice}; }
  friend constexpr HalfInt operator-(HalfInt a) { return {-a.twice}; }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
};

std::string to_string(HalfInt d);

enum class Sector { twisted, untwisted };

/// Color of a generator X_c, c in 1..8. Colors 1..5 span the (-1)-eigenspace of
/// the diagram automorphism, colors 6..8 the fixed subalgebra.
class ColorIndex {
 public:
  static constexpr int kCount = 8;

  constexpr ColorIndex() = default;
  explicit ColorIndex(int value);

  constexpr int value() const { return value_; }
  constexpr Sector sector() const { return value_ <= 5 ? Sector::twisted : Sector::untwisted; }

  /// Position in the chain X5 < X4 < X8 < X3 < X7 < X2 < X6 < X1 (0 is smallest).
  int rank() const;

  friend constexpr bool operator==(ColorIndex, ColorIndex) = default;

 private:
  int value_ = 1;
};

/// One generator X_c(d). Parity is not enforced on construction; use
/// `parity_ok` or build a ColoredPartition through `canonicalize`.
struct ColoredPart {
  ColorIndex color;
  HalfInt degree;

  ColoredPart() = default;
  ColoredPart(ColorIndex c, HalfInt d) : color(c), degree(d) {}
  ColoredPart(int c, HalfInt d) : color(c), degree(d) {}

  bool parity_ok() const {
    return degree.is_integer() == (color.sector() == Sector::untwisted);
  }

  ColoredPart shifted(int m) const { return {color, degree + HalfInt::integer(m)}; }

  friend bool operator==(const ColoredPart&, const ColoredPart&) = default;
};

/// Canonical part order: nondecreasing degree, ties broken by color rank.
std::strong_ordering canonical_order(const ColoredPart& a, const ColoredPart& b);

struct CanonicalLess {
  bool operator()(const ColoredPart& a, const ColoredPart& b) const {
    return canonical_order(a, b) < 0;
  }
};

std::string to_string(const ColoredPart& p);

/// Parses `Xc(d)` where d is an integer or `n/2`.
ColoredPart parse_part(std::string_view text);

/// A finite multiset of colored parts held in canonical order.
class ColoredPartition {
 public:
  ColoredPartition() = default;

  std::span<const ColoredPart> parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  HalfInt degree() const { return degree_; }
  bool empty() const { return parts_.empty(); }

  const ColoredPart& operator[](std::size_t i) const { return parts_[i]; }

  /// Monoid product (multiset union).
  friend ColoredPartition operator*(const ColoredPartition& a, const ColoredPartition& b);

  friend bool operator==(const ColoredPartition& a, const ColoredPartition& b) {
    return a.parts_ == b.parts_;
  }

 private:
  friend ColoredPartition canonicalize(std::vector<ColoredPart> parts);

  std::vector<ColoredPart> parts_;
  HalfInt degree_;
};

/// Sorts `parts` into canonical order. Throws std::invalid_argument naming the
/// first part that breaks the parity law.
ColoredPartition canonicalize(std::vector<ColoredPart> parts);
ColoredPartition canonicalize(std::initializer_list<ColoredPart> parts);

/// The linear order on partitions: longer is smaller; then smaller degree is
/// smaller; then degree sequences compared from the largest part down; then
/// color sequences compared the same way.
std::strong_ordering compare(const ColoredPartition& pi, const ColoredPartition& kappa);

/// True iff `rho` is a sub-multiset of `pi`.
bool contains(const ColoredPartition& rho, const ColoredPartition& pi);

ColoredPartition translate(const ColoredPartition& pi, int m);

/// Parts separated by single spaces; the empty partition prints as `1`.
std::string to_string(const ColoredPartition& pi);
ColoredPartition parse_partition(std::string_view text);

}  // namespace a22

template <>
struct std::hash<a22::ColoredPart> {
  std::size_t operator()(const a22::ColoredPart& p) const noexcept {
    return std::hash<int>{}(p.degree.twice * 16 + p.color.value());
  }
};
