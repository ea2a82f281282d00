#include "a22/embeddings.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace a22 {

int count_embeddings(const ColoredPartition& pi, const LeadingTermTable& table) {
  const auto parts = pi.parts();
  // Canonical order makes equal sub-multisets produce equal (i, j) part pairs.
  std::vector<std::pair<ColoredPart, ColoredPart>> seen;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if ((parts[j].degree - parts[i].degree).twice > 2) break;
      if (!table.is_forbidden_pair(parts[i], parts[j])) continue;
      std::pair<ColoredPart, ColoredPart> rho{parts[i], parts[j]};
      if (std::find(seen.begin(), seen.end(), rho) == seen.end()) seen.push_back(rho);
    }
  }
  return static_cast<int>(seen.size());
}

int excess(const ColoredPartition& pi, const LeadingTermTable& table) {
  return std::max(count_embeddings(pi, table) - 1, 0);
}

std::string_view label(DegreeClass c) {
  switch (c) {
    case DegreeClass::minus5_2: return "3s-5/2";
    case DegreeClass::minus3_2: return "3s-3/2";
    case DegreeClass::minus1_2: return "3s-1/2";
    case DegreeClass::minus2: return "3s-2";
    case DegreeClass::minus1: return "3s-1";
    case DegreeClass::zero: return "3s";
  }
  return "?";
}

DegreeClass degree_class(HalfInt degree) {
  switch (((degree.twice % 6) + 6) % 6) {
    case 1: return DegreeClass::minus5_2;
    case 3: return DegreeClass::minus3_2;
    case 5: return DegreeClass::minus1_2;
    case 2: return DegreeClass::minus2;
    case 4: return DegreeClass::minus1;
    default: return DegreeClass::zero;
  }
}

bool is_half_integer_class(DegreeClass c) {
  return c == DegreeClass::minus5_2 || c == DegreeClass::minus3_2 || c == DegreeClass::minus1_2;
}

ResidueClassSums embedding_sums(int window_radius, const LeadingTermTable& table) {
  if (window_radius < 3) {
    throw std::invalid_argument("window radius must be at least 3");
  }
  std::vector<ColoredPart> parts;
  for (int twice = 0; twice <= 2 * window_radius + 1; ++twice) {
    for (int c = 1; c <= ColorIndex::kCount; ++c) {
      ColoredPart p{c, HalfInt{twice}};
      if (p.parity_ok()) parts.push_back(p);
    }
  }
  std::sort(parts.begin(), parts.end(), CanonicalLess{});

  const HalfInt radius = HalfInt::integer(window_radius);
  ResidueClassSums out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree >= HalfInt::integer(1)) break;
    for (std::size_t j = i; j < parts.size(); ++j) {
      if (parts[j].degree - parts[i].degree > radius) break;
      for (std::size_t k = j; k < parts.size(); ++k) {
        if (parts[k].degree - parts[i].degree > radius) break;
        const auto pi = canonicalize({parts[i], parts[j], parts[k]});
        out[degree_class(pi.degree())] += excess(pi, table);
      }
    }
  }
  return out;
}

}  // namespace a22
