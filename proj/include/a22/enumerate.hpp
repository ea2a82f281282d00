#pragma once

#include <cstdint>
#include <vector>

#include "a22/leading_terms.hpp"
#include "a22/parallel.hpp"
#include "a22/partition.hpp"
#include "a22/specialize.hpp"

namespace a22 {

/// counts[n] = number of basis monomials of specialized weight n: multisets of
/// parts of P_minus without X1(-1/2) that satisfy the difference-R condition.
/// counts[0] = 1. `workers` = 0 uses every hardware thread.
///
/// Throws std::domain_error if max_n < 0 or some admitted part has weight < 1.
CountVector count_basis(const Specialization& s, int max_n, int workers = 0);

/// The monomials behind count_basis(s, n)[n], sorted by the partition order.
std::vector<ColoredPartition> list_basis(const Specialization& s, int n);

/// Upper bound on the weight difference of two parts whose degrees differ by
/// at most 1; every forbidden pair lies within it.
std::int64_t conflict_weight_window(const Specialization& s);

}  // namespace a22
