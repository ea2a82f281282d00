#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "a22/leading_terms.hpp"
#include "a22/partition.hpp"

namespace a22 {

/// E(pi): number of distinct forbidden two-part sub-multisets of pi.
int count_embeddings(const ColoredPartition& pi, const LeadingTermTable& table = leading_terms());

/// N(pi) = max(E(pi) - 1, 0).
int excess(const ColoredPartition& pi, const LeadingTermTable& table = leading_terms());

/// Residue of |pi| modulo 3 in (1/2)Z. Listed with the half-integer classes first.
enum class DegreeClass { minus5_2, minus3_2, minus1_2, minus2, minus1, zero };

inline constexpr std::array<DegreeClass, 6> kDegreeClasses = {
    DegreeClass::minus5_2, DegreeClass::minus3_2, DegreeClass::minus1_2,
    DegreeClass::minus2,   DegreeClass::minus1,   DegreeClass::zero};

std::string_view label(DegreeClass c);  // "3s-5/2", ...
DegreeClass degree_class(HalfInt degree);
bool is_half_integer_class(DegreeClass c);

struct ResidueClassSums {
  std::array<std::int64_t, 6> sums{};  // indexed by DegreeClass

  std::int64_t operator[](DegreeClass c) const { return sums[static_cast<int>(c)]; }
  std::int64_t& operator[](DegreeClass c) { return sums[static_cast<int>(c)]; }
  friend bool operator==(const ResidueClassSums&, const ResidueClassSums&) = default;
};

/// Sums N(pi) over translation classes of length-3 partitions, grouped by the
/// class of |pi|. Each class is represented once, with its lowest part degree
/// in [0, 1) and all parts within `window_radius` of it. Requires radius >= 3.
ResidueClassSums embedding_sums(int window_radius,
                                const LeadingTermTable& table = leading_terms());

// Values the sums are checked against.
inline constexpr std::int64_t kHalfIntegerClassSum = 81;
inline constexpr std::int64_t kIntegerClassSum = 80;
inline constexpr std::int64_t kRelationSpaceDimension = 161;

}  // namespace a22
