#include "a22/partition.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <stdexcept>

namespace a22 {

namespace {

// Indexed by color value; X5 is the smallest element of the chain.
constexpr std::array<int, 9> kColorRank = {-1, 7, 5, 3, 1, 0, 6, 4, 2};

int parse_int(std::string_view s, std::string_view context) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("malformed number '" + std::string(s) + "' in '" +
                                std::string(context) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

std::string to_string(HalfInt d) {
  if (d.is_integer()) return std::to_string(d.twice / 2);
  return std::to_string(d.twice) + "/2";
}

ColorIndex::ColorIndex(int value) : value_(value) {
  if (value < 1 || value > kCount) {
    throw std::invalid_argument("color index " + std::to_string(value) + " outside 1..8");
  }
}

int ColorIndex::rank() const { return kColorRank[value_]; }

std::strong_ordering canonical_order(const ColoredPart& a, const ColoredPart& b) {
  if (auto c = a.degree <=> b.degree; c != 0) return c;
  return a.color.rank() <=> b.color.rank();
}

std::string to_string(const ColoredPart& p) {
  return "X" + std::to_string(p.color.value()) + "(" + to_string(p.degree) + ")";
}

ColoredPart parse_part(std::string_view text) {
  const std::string_view s = trim(text);
  const auto open = s.find('(');
  if (s.size() < 5 || s.front() != 'X' || open == std::string_view::npos || s.back() != ')') {
    throw std::invalid_argument("malformed part '" + std::string(text) + "'");
  }
  const int color = parse_int(s.substr(1, open - 1), text);
  std::string_view deg = s.substr(open + 1, s.size() - open - 2);
  HalfInt degree;
  if (const auto slash = deg.find('/'); slash != std::string_view::npos) {
    if (deg.substr(slash + 1) != "2") {
      throw std::invalid_argument("degree denominator must be 2 in '" + std::string(text) + "'");
    }
    const int num = parse_int(deg.substr(0, slash), text);
    if (num % 2 == 0) {
      throw std::invalid_argument("non-reduced half degree in '" + std::string(text) + "'");
    }
    degree = HalfInt::halves(num);
  } else {
    degree = HalfInt::integer(parse_int(deg, text));
  }
  return ColoredPart{ColorIndex(color), degree};
}

ColoredPartition canonicalize(std::vector<ColoredPart> parts) {
  for (const auto& p : parts) {
    if (!p.parity_ok()) {
      throw std::invalid_argument("part " + to_string(p) + " violates the degree parity of color " +
                                  std::to_string(p.color.value()));
    }
  }
  std::sort(parts.begin(), parts.end(), CanonicalLess{});
  ColoredPartition out;
  for (const auto& p : parts) out.degree_ = out.degree_ + p.degree;
  out.parts_ = std::move(parts);
  return out;
}

ColoredPartition canonicalize(std::initializer_list<ColoredPart> parts) {
  return canonicalize(std::vector<ColoredPart>(parts));
}

ColoredPartition operator*(const ColoredPartition& a, const ColoredPartition& b) {
  ColoredPartition out;
  out.parts_.reserve(a.length() + b.length());
  std::merge(a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end(),
             std::back_inserter(out.parts_), CanonicalLess{});
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

std::strong_ordering compare(const ColoredPartition& pi, const ColoredPartition& kappa) {
  if (pi.length() != kappa.length()) {
    return pi.length() > kappa.length() ? std::strong_ordering::less
                                        : std::strong_ordering::greater;
  }
  if (auto c = pi.degree() <=> kappa.degree(); c != 0) return c;
  const auto a = pi.parts();
  const auto b = kappa.parts();
  for (std::size_t k = a.size(); k-- > 0;) {
    if (auto c = a[k].degree <=> b[k].degree; c != 0) return c;
  }
  for (std::size_t k = a.size(); k-- > 0;) {
    if (auto c = a[k].color.rank() <=> b[k].color.rank(); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool contains(const ColoredPartition& rho, const ColoredPartition& pi) {
  const auto r = rho.parts();
  const auto p = pi.parts();
  return std::includes(p.begin(), p.end(), r.begin(), r.end(), CanonicalLess{});
}

ColoredPartition translate(const ColoredPartition& pi, int m) {
  std::vector<ColoredPart> parts(pi.parts().begin(), pi.parts().end());
  for (auto& p : parts) p = p.shifted(m);
  return canonicalize(std::move(parts));
}

std::string to_string(const ColoredPartition& pi) {
  if (pi.empty()) return "1";
  std::string out;
  for (const auto& p : pi.parts()) {
    if (!out.empty()) out += ' ';
    out += to_string(p);
  }
  return out;
}

ColoredPartition parse_partition(std::string_view text) {
  const std::string_view s = trim(text);
  if (s == "1" || s.empty()) return {};
  std::vector<ColoredPart> parts;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto next = s.find(' ', pos);
    const auto token = s.substr(pos, next == std::string_view::npos ? s.npos : next - pos);
    if (!token.empty()) parts.push_back(parse_part(token));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return canonicalize(std::move(parts));
}

}  // namespace a22
