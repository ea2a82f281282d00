#include "a22/leading_terms.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace a22 {

namespace {

constexpr HalfInt h(int halves) { return HalfInt::halves(halves); }

constexpr PatternTemplate row(int block, int colors) {
  constexpr std::array<std::array<Shape, 2>, 5> kShapes = {{
      {Shape::G1a, Shape::G1a},
      {Shape::G1a, Shape::G1b},
      {Shape::G2a, Shape::G2b},
      {Shape::G3, Shape::G3},
      {Shape::G4, Shape::G4},
  }};
  return PatternTemplate{block, kShapes[block], block <= 2 ? 2 : 1, colors / 10, colors % 10};
}

// Transcribed row by row in print order.
constexpr std::array<PatternTemplate, 54> kTemplates = {
    row(1, 11), row(1, 21), row(1, 22), row(1, 31), row(1, 32), row(1, 41), row(1, 33),
    row(1, 42), row(1, 51), row(1, 43), row(1, 52), row(1, 44), row(1, 53), row(1, 54),
    row(1, 55),
    row(2, 11), row(2, 12), row(2, 13), row(2, 66), row(2, 14), row(2, 76), row(2, 15),
    row(2, 77), row(2, 86), row(2, 25), row(2, 87), row(2, 35), row(2, 88), row(2, 45),
    row(2, 55),
    row(3, 16), row(3, 17), row(3, 26), row(3, 18), row(3, 27), row(3, 28), row(3, 37),
    row(3, 47), row(3, 38), row(3, 48), row(3, 57), row(3, 58),
    row(4, 61), row(4, 71), row(4, 62), row(4, 63), row(4, 72), row(4, 73), row(4, 64),
    row(4, 74), row(4, 65), row(4, 84), row(4, 75), row(4, 85),
};

}  // namespace

ShapeOffsets offsets(Shape s) {
  switch (s) {
    case Shape::G1a: return {h(-1), h(-1)};
    case Shape::G1b: return {h(-2), h(0)};
    case Shape::G2a: return {h(-3), h(-1)};
    case Shape::G2b: return {h(-2), h(-2)};
    case Shape::G3: return {h(-1), h(0)};
    case Shape::G4: return {h(-2), h(-1)};
  }
  throw std::logic_error("unknown shape");
}

std::string_view name(Shape s) {
  switch (s) {
    case Shape::G1a: return "(j-1/2, j-1/2)";
    case Shape::G1b: return "(j-1, j)";
    case Shape::G2a: return "(j-3/2, j-1/2)";
    case Shape::G2b: return "(j-1, j-1)";
    case Shape::G3: return "(j-1/2, j)";
    case Shape::G4: return "(j-1, j-1/2)";
  }
  return "?";
}

std::span<const PatternTemplate> pattern_templates() { return kTemplates; }

std::pair<ColoredPart, ColoredPart> PatternFamily::representative() const {
  const HalfInt d = low_degree_integral() ? HalfInt::integer(-1) : HalfInt::halves(-1);
  return {ColoredPart{low, d}, ColoredPart{high, d + gap}};
}

std::string to_string(const PatternFamily& f) {
  return "X" + std::to_string(f.low.value()) + "(d) X" + std::to_string(f.high.value()) + "(d+" +
         to_string(f.gap) + ")";
}

LeadingTermTable build_table() {
  LeadingTermTable table;
  for (auto& by_gap : table.index_) {
    for (auto& by_low : by_gap) by_low.fill(-1);
  }

  for (const auto& t : kTemplates) {
    int realized = 0;
    for (int s = 0; s < t.shape_count; ++s) {
      const auto off = offsets(t.shapes[s]);
      // Parity of j - 1/2 etc. does not depend on the integer j, so j = 0 decides.
      const ColoredPart first{t.first_color, off.first};
      const ColoredPart second{t.second_color, off.second};
      if (!first.parity_ok() || !second.parity_ok()) continue;
      ++realized;

      PatternFamily fam{first.color, second.color, off.second - off.first};
      if (fam.gap == HalfInt{} && fam.low.value() > fam.high.value()) std::swap(fam.low, fam.high);

      auto& slot = table.index_[fam.gap.twice][fam.low.value()][fam.high.value()];
      if (slot >= 0) continue;
      slot = static_cast<int>(table.families_.size());
      if (fam.gap == HalfInt{}) table.index_[0][fam.high.value()][fam.low.value()] = slot;
      table.families_.push_back(fam);
    }
    if (realized != 1) {
      throw std::logic_error("pattern row " + std::to_string(t.first_color) +
                             std::to_string(t.second_color) + " in block " +
                             std::to_string(t.block) + " realizes " + std::to_string(realized) +
                             " parity-consistent shapes");
    }
  }
  return table;
}

const LeadingTermTable& leading_terms() {
  static const LeadingTermTable table = build_table();
  return table;
}

int LeadingTermTable::family_of(const ColoredPart& a, const ColoredPart& b) const {
  const bool a_low = a.degree <= b.degree;
  const ColoredPart& lo = a_low ? a : b;
  const ColoredPart& hi = a_low ? b : a;
  const int gap = (hi.degree - lo.degree).twice;
  if (gap > 2) return -1;
  return index_[gap][lo.color.value()][hi.color.value()];
}

bool LeadingTermTable::is_forbidden_pair(const ColoredPart& a, const ColoredPart& b) const {
  return family_of(a, b) >= 0;
}

std::string LeadingTermTable::to_json() const {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& f : families_) {
    doc.push_back({{"low_color", f.low.value()},
                   {"high_color", f.high.value()},
                   {"gap", to_string(f.gap)},
                   {"low_degree_parity", f.low_degree_integral() ? "integer" : "half-integer"}});
  }
  return doc.dump(2);
}

bool satisfies_difference_R(const ColoredPartition& pi, const LeadingTermTable& table) {
  const auto parts = pi.parts();
  // Parts are sorted by degree and forbidden gaps never exceed 1.
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if ((parts[j].degree - parts[i].degree).twice > 2) break;
      if (table.is_forbidden_pair(parts[i], parts[j])) return false;
    }
  }
  return true;
}

bool in_P_minus(const ColoredPart& p) {
  return p.degree < HalfInt{} || p == ColoredPart{8, HalfInt{}} || p == kExcludedInitialPart;
}

bool satisfies_initial(const ColoredPartition& pi) {
  return std::all_of(pi.parts().begin(), pi.parts().end(),
                     [](const ColoredPart& p) { return in_P_minus(p) && !(p == kExcludedInitialPart); });
}

}  // namespace a22
