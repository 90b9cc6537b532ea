#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace coha {

/// Element of N^n; the empty vector is the unique element of N^0.
using IntVector = std::vector<int>;

/// Weakly increasing tuple of non-negative integers (lambda_1 <= ... <= lambda_n).
class Partition {
 public:
  Partition() = default;
  /// Validates that parts are non-negative and weakly increasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Builds from parts already known to be sorted and non-negative.
  static Partition from_sorted(std::vector<int> parts);

  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  const std::vector<int>& parts() const noexcept { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  /// Sum of the parts.
  long weight() const noexcept;

  /// Ordered by length first, then lexicographically.
  friend std::strong_ordering operator<=>(const Partition& lhs, const Partition& rhs);
  friend bool operator==(const Partition& lhs, const Partition& rhs) = default;

  /// "(0,2,7)"; the empty partition prints as "()".
  std::string to_string() const;

 private:
  std::vector<int> parts_;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Short-lex ordering on plain integer vectors.
struct ShortLex {
  bool operator()(const IntVector& a, const IntVector& b) const {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }
};

/// The sort map v -> v_<=.
Partition sort_ascending(IntVector v);

/// Number of permutations fixing the tuple: product of factorials of the
/// repetition counts. Satisfies multiplicity(l) * |S_l| = n!.
std::uint64_t multiplicity(const Partition& lambda);

/// Every distinct ordering of the parts, each once, in lexicographic order.
std::vector<IntVector> distinct_permutations(const Partition& lambda);

/// Componentwise sum; throws ShapeError on length mismatch.
IntVector vec_add(const IntVector& u, const IntVector& v);

/// (u, v) as one vector.
IntVector concat(const IntVector& u, const IntVector& v);

std::uint64_t factorial(unsigned n);

/// "(3,1,1)" style rendering of a plain vector.
std::string vector_to_string(const IntVector& v);

/// Parses "0,2,7"; the empty string (or "()" / "[]") is the empty partition.
/// Unsorted input is rejected unless allow_unsorted is set, in which case it is sorted.
Partition parse_partition(std::string_view text, bool allow_unsorted = false);

/// Every partition of length <= max_length with parts <= max_part, in short-lex order.
std::vector<Partition> partitions_up_to(int max_length, int max_part);

}  // namespace coha
