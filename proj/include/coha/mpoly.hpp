#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coha/errors.hpp"
#include "coha/qlaurent.hpp"

namespace coha {

/// Exponents of x_1, ..., x_n (stored 0-based).
using ExponentVector = std::vector<int>;

struct ExponentHash {
  std::size_t operator()(const std::vector<int>& e) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int v : e) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// Sparse polynomial in x_1..x_arity with QLaurent coefficients.
class MPoly {
 public:
  using TermMap = std::unordered_map<ExponentVector, QLaurent, ExponentHash>;

  explicit MPoly(std::size_t arity = 0) : arity_(arity) {}

  static MPoly constant(std::size_t arity, QLaurent c);
  static MPoly monomial(std::size_t arity, ExponentVector exponents, QLaurent c);
  /// The polynomial x_{index+1}.
  static MPoly variable(std::size_t arity, std::size_t index);

  std::size_t arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  const TermMap& terms() const noexcept { return terms_; }

  /// Adds c * x^exponents, merging and pruning zeros.
  void add_term(const ExponentVector& exponents, const QLaurent& c);
  QLaurent coefficient(const ExponentVector& exponents) const;

  /// Terms ordered lexicographically by exponent vector.
  std::vector<std::pair<ExponentVector, QLaurent>> sorted_terms() const;

  /// Renames x_i to x_{target[i]} inside a polynomial of arity new_arity.
  MPoly embed(std::span<const std::size_t> target, std::size_t new_arity) const;
  /// Applies f to every coefficient, dropping results that vanish.
  MPoly map_coefficients(const std::function<QLaurent(const QLaurent&)>& f) const;

  MPoly& operator+=(const MPoly& rhs);
  MPoly& operator-=(const MPoly& rhs);
  friend MPoly operator+(MPoly lhs, const MPoly& rhs) { return lhs += rhs; }
  friend MPoly operator-(MPoly lhs, const MPoly& rhs) { return lhs -= rhs; }
  MPoly& operator*=(const QLaurent& c);

  friend bool operator==(const MPoly& lhs, const MPoly& rhs) {
    return lhs.arity_ == rhs.arity_ && lhs.terms_ == rhs.terms_;
  }

 private:
  void check_arity(const ExponentVector& e) const;

  std::size_t arity_;
  TermMap terms_;
};

/// Sparse product. Throws ShapeError on arity mismatch and
/// ResourceLimitError when the result would hold more than term_cap terms.
MPoly multiply(const MPoly& a, const MPoly& b, std::size_t term_cap = Limits{}.term_cap);

inline MPoly operator*(const MPoly& a, const MPoly& b) { return multiply(a, b); }

}  // namespace coha
