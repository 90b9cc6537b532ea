#include "coha/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>

#include "coha/errors.hpp"
#include "coha/mpoly.hpp"

namespace coha {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw ShapeError("partition with negative part");
    if (i > 0 && parts_[i - 1] > parts_[i]) throw ShapeError("partition parts must be weakly increasing");
  }
}

Partition Partition::from_sorted(std::vector<int> parts) {
  Partition p;
  p.parts_ = std::move(parts);
  return p;
}

long Partition::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

std::strong_ordering operator<=>(const Partition& lhs, const Partition& rhs) {
  if (lhs.parts_.size() != rhs.parts_.size()) return lhs.parts_.size() <=> rhs.parts_.size();
  return lhs.parts_ <=> rhs.parts_;
}

std::string Partition::to_string() const { return vector_to_string(parts_); }

std::string vector_to_string(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept { return ExponentHash{}(p.parts()); }

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

Partition sort_ascending(IntVector v) {
  for (int x : v) {
    if (x < 0) throw ShapeError("integer vector with negative entry");
  }
  std::sort(v.begin(), v.end());
  return Partition::from_sorted(std::move(v));
}

std::uint64_t factorial(unsigned n) {
  if (n > 20) throw ResourceLimitError("factorial overflows 64 bits");
  std::uint64_t r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

std::uint64_t multiplicity(const Partition& lambda) {
  std::uint64_t r = 1;
  const auto& p = lambda.parts();
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    r *= factorial(static_cast<unsigned>(j - i));
    i = j;
  }
  return r;
}

std::vector<IntVector> distinct_permutations(const Partition& lambda) {
  // Ascending order is the lexicographically smallest arrangement.
  IntVector v = lambda.parts();
  std::vector<IntVector> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

IntVector vec_add(const IntVector& u, const IntVector& v) {
  if (u.size() != v.size()) {
    throw ShapeError("vector lengths differ: " + std::to_string(u.size()) + " vs " + std::to_string(v.size()));
  }
  IntVector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] + v[i];
  return out;
}

IntVector concat(const IntVector& u, const IntVector& v) {
  IntVector out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Partition parse_partition(std::string_view text, bool allow_unsorted) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() >= 2 && ((text.front() == '(' && text.back() == ')') || (text.front() == '[' && text.back() == ']'))) {
    text = trim(text.substr(1, text.size() - 2));
  }
  IntVector parts;
  if (!text.empty()) {
    std::size_t start = 0;
    while (true) {
      const auto comma = text.find(',', start);
      const auto token = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
      int value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
        throw ParseError("invalid partition part '" + std::string(token) + "'");
      }
      parts.push_back(value);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  if (!std::is_sorted(parts.begin(), parts.end())) {
    if (!allow_unsorted) throw ParseError("partition parts must be weakly increasing: '" + std::string(text) + "'");
    std::sort(parts.begin(), parts.end());
  }
  return Partition::from_sorted(std::move(parts));
}

std::vector<Partition> partitions_up_to(int max_length, int max_part) {
  std::vector<Partition> out;
  for (int len = 0; len <= max_length; ++len) {
    IntVector v(static_cast<std::size_t>(len), 0);
    while (true) {
      out.push_back(Partition::from_sorted(v));
      // next weakly increasing vector with entries <= max_part, lexicographically
      int i = len - 1;
      while (i >= 0 && v[static_cast<std::size_t>(i)] == max_part) --i;
      if (i < 0) break;
      const int next = v[static_cast<std::size_t>(i)] + 1;
      for (int j = i; j < len; ++j) v[static_cast<std::size_t>(j)] = next;
    }
  }
  return out;
}

}  // namespace coha
