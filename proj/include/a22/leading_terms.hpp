#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "a22/partition.hpp"

namespace a22 {

/// The six two-part shapes in which forbidden patterns are printed. Each is a
/// pair of degree offsets relative to the integer parameter j.
enum class Shape { G1a, G1b, G2a, G2b, G3, G4 };

struct ShapeOffsets {
  HalfInt first;
  HalfInt second;
};

ShapeOffsets offsets(Shape s);
std::string_view name(Shape s);

/// One printed row of the pattern list: a block of one or two shapes and an
/// ordered color pair (i1, i2), where i1 sits at the first offset.
struct PatternTemplate {
  int block;  // 1..4
  std::array<Shape, 2> shapes;
  int shape_count;
  int first_color;
  int second_color;
};

/// The 54 printed rows, in print order.
std::span<const PatternTemplate> pattern_templates();

/// All pairs {X_low(d), X_high(d + gap)} for parity-valid d.
struct PatternFamily {
  ColorIndex low;
  ColorIndex high;
  HalfInt gap;  // 0, 1/2 or 1

  /// Parity of d, forced by the low color.
  bool low_degree_integral() const { return low.sector() == Sector::untwisted; }

  /// The instance whose low part has the largest parity-valid degree below 0.
  std::pair<ColoredPart, ColoredPart> representative() const;

  friend bool operator==(const PatternFamily&, const PatternFamily&) = default;
};

std::string to_string(const PatternFamily& f);

class LeadingTermTable {
 public:
  std::span<const PatternFamily> families() const { return families_; }
  std::size_t size() const { return families_.size(); }

  /// Symmetric in (a, b) and invariant under integer translation.
  bool is_forbidden_pair(const ColoredPart& a, const ColoredPart& b) const;

  /// Index into families() of the family containing {a, b}, or -1.
  int family_of(const ColoredPart& a, const ColoredPart& b) const;

  /// One JSON record per family: low_color, high_color, gap, low_degree_parity.
  std::string to_json() const;

 private:
  friend LeadingTermTable build_table();

  std::vector<PatternFamily> families_;
  // [gap in halves][lower-degree color][higher-degree color]; gap-0 entries symmetric.
  std::array<std::array<std::array<int, 9>, 9>, 3> index_{};
};

/// Instantiates every printed template at integer j, keeps the shapes whose
/// parts satisfy the parity law, and dedupes. Throws std::logic_error if a row
/// realizes zero or two families.
LeadingTermTable build_table();

/// Process-wide immutable table.
const LeadingTermTable& leading_terms();

/// No two-part sub-multiset of `pi` is a forbidden pair.
bool satisfies_difference_R(const ColoredPartition& pi,
                            const LeadingTermTable& table = leading_terms());

/// Degree < 0, or X8(0), or X1(-1/2).
bool in_P_minus(const ColoredPart& p);

/// Every part lies in P_minus and X1(-1/2) does not occur.
bool satisfies_initial(const ColoredPartition& pi);

inline const ColoredPart kExcludedInitialPart{1, HalfInt::halves(-1)};

}  // namespace a22
