#include "a22/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace a22 {

namespace {

// Depth-first search over parts in descending weight. Part j may only
// conflict with parts chosen among the 64 indices before it, so the chosen set
// near the last pick is kept as a bitmask: bit t stands for part (anchor - t).
class BasisSearch {
 public:
  BasisSearch(const Specialization& s, int max_n)
      : max_n_(max_n), parts_(admitted_parts(s, max_n)) {
    const auto& table = leading_terms();
    const std::int64_t window = conflict_weight_window(s);
    weights_.reserve(parts_.size());
    for (const auto& p : parts_) weights_.push_back(static_cast<int>(weight(p, s)));

    conflicts_.assign(parts_.size(), 0);
    for (std::size_t j = 0; j < parts_.size(); ++j) {
      for (std::size_t i = j; i-- > 0;) {
        if (weights_[i] - weights_[j] > window) break;
        if (!table.is_forbidden_pair(parts_[i], parts_[j])) continue;
        if (j - i > 64) {
          throw std::logic_error("conflicting parts " + to_string(parts_[i]) + " and " +
                                 to_string(parts_[j]) + " lie more than 64 positions apart");
        }
        conflicts_[j] |= std::uint64_t{1} << (j - 1 - i);
      }
    }

    first_fit_.assign(max_n_ + 1, parts_.size());
    std::size_t idx = parts_.size();
    for (int rem = 0; rem <= max_n_; ++rem) {
      while (idx > 0 && weights_[idx - 1] <= rem) --idx;
      // idx is now the first position whose weight is <= rem
      first_fit_[rem] = idx;
    }
  }

  std::size_t size() const { return parts_.size(); }

  void count_subtree(std::size_t first, CountVector& counts) const {
    count(first + 1, weights_[first], 1, first, counts.data());
  }

  void collect(std::size_t first, int target, std::vector<ColoredPartition>& out) const {
    if (weights_[first] > target) return;
    std::vector<ColoredPart> stack{parts_[first]};
    collect(first + 1, weights_[first], 1, first, target, stack, out);
  }

 private:
  void count(std::size_t next, int total, std::uint64_t window, std::size_t anchor,
             std::uint64_t* counts) const {
    ++counts[total];
    const std::size_t end = parts_.size();
    for (std::size_t j = std::max(next, first_fit_[max_n_ - total]); j < end; ++j) {
      const std::size_t dist = j - anchor;
      if (dist <= 64 && ((window << (dist - 1)) & conflicts_[j]) != 0) continue;
      const std::uint64_t moved = dist < 64 ? (window << dist) | 1 : 1;
      count(j + 1, total + weights_[j], moved, j, counts);
    }
  }

  void collect(std::size_t next, int total, std::uint64_t window, std::size_t anchor, int target,
               std::vector<ColoredPart>& stack, std::vector<ColoredPartition>& out) const {
    if (total == target) {
      out.push_back(canonicalize(stack));
      return;
    }
    const std::size_t end = parts_.size();
    for (std::size_t j = std::max(next, first_fit_[target - total]); j < end; ++j) {
      const std::size_t dist = j - anchor;
      if (dist <= 64 && ((window << (dist - 1)) & conflicts_[j]) != 0) continue;
      const std::uint64_t moved = dist < 64 ? (window << dist) | 1 : 1;
      stack.push_back(parts_[j]);
      collect(j + 1, total + weights_[j], moved, j, target, stack, out);
      stack.pop_back();
    }
  }

  int max_n_;
  std::vector<ColoredPart> parts_;
  std::vector<int> weights_;
  std::vector<std::uint64_t> conflicts_;
  std::vector<std::size_t> first_fit_;
};

void check_domain(const Specialization& s, int n) {
  if (n < 0) throw std::domain_error("weight bound must be nonnegative, got " + std::to_string(n));
  if (min_admitted_weight(s) < 1) {
    throw std::domain_error("specialization (" + to_string(s) +
                            ") assigns a nonpositive weight to an admitted part");
  }
}

}  // namespace

std::int64_t conflict_weight_window(const Specialization& s) {
  return s.modulus() + 4 * static_cast<std::int64_t>(s.s1());
}

CountVector count_basis(const Specialization& s, int max_n, int workers) {
  check_domain(s, max_n);
  const BasisSearch search(s, max_n);
  auto counts = sum_over_tasks(search.size(), max_n + 1, workers,
                               [&](std::size_t first, CountVector& local) {
                                 search.count_subtree(first, local);
                               });
  counts[0] += 1;
  return counts;
}

std::vector<ColoredPartition> list_basis(const Specialization& s, int n) {
  check_domain(s, n);
  std::vector<ColoredPartition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  const BasisSearch search(s, n);
  for (std::size_t first = 0; first < search.size(); ++first) search.collect(first, n, out);
  std::sort(out.begin(), out.end(),
            [](const ColoredPartition& a, const ColoredPartition& b) { return compare(a, b) < 0; });
  return out;
}

}  // namespace a22
