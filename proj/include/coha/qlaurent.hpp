#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "coha/rational.hpp"

namespace coha {

/// Laurent polynomial in the quantum parameter q with rational coefficients.
///
/// Stored densely over its support: coeffs()[i] is the coefficient of
/// q^(offset() + i). The first and last stored coefficients are nonzero;
/// zero is the empty list with offset 0.
class QLaurent {
 public:
  QLaurent() = default;
  QLaurent(Rational constant);  // NOLINT(google-explicit-constructor)
  QLaurent(std::int64_t constant) : QLaurent(Rational(constant)) {}  // NOLINT
  QLaurent(int offset, std::vector<Rational> coeffs);

  /// c * q^exponent
  static QLaurent monomial(Rational c, int exponent);
  /// q itself.
  static QLaurent q() { return monomial(1, 1); }
  /// (-q)^exponent, exponent may be negative.
  static QLaurent neg_q_power(int exponent);

  int offset() const noexcept { return offset_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// True when no negative power of q occurs.
  bool is_polynomial() const noexcept { return is_zero() || offset_ >= 0; }
  /// Lowest and highest exponents with nonzero coefficient; both 0 for zero.
  int low_degree() const noexcept { return offset_; }
  int high_degree() const noexcept { return is_zero() ? 0 : offset_ + static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(int exponent) const;

  QLaurent operator-() const;
  QLaurent& operator+=(const QLaurent& rhs);
  QLaurent& operator-=(const QLaurent& rhs);
  QLaurent& operator*=(const QLaurent& rhs);
  QLaurent& operator*=(const Rational& rhs);
  /// In place: *this += c * q^shift * p.
  QLaurent& add_scaled(const QLaurent& p, const Rational& c, int shift);

  friend QLaurent operator+(QLaurent lhs, const QLaurent& rhs) { return lhs += rhs; }
  friend QLaurent operator-(QLaurent lhs, const QLaurent& rhs) { return lhs -= rhs; }
  friend QLaurent operator*(const QLaurent& lhs, const QLaurent& rhs);

  friend bool operator==(const QLaurent& lhs, const QLaurent& rhs) = default;

  /// q^i -> q^-i on every term.
  QLaurent bar() const;
  /// Exact value at q = value; throws DomainError for negative powers at 0.
  Rational eval(const Rational& value) const;
  /// Multiplies by q^shift.
  QLaurent shifted(int shift) const;

  /// Descending-degree display, e.g. "q^6 + 3q^4 + 9q^2" or "-3q^-1 + 1".
  std::string to_string() const;
  /// Same ordering, LaTeX exponents: "q^{6}+3q^{4}".
  std::string to_latex() const;

 private:
  void normalize();

  int offset_ = 0;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const QLaurent& p);

}  // namespace coha
