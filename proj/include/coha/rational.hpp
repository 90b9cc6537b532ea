#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace coha {

namespace detail {
struct SmallRational {
  std::int64_t num = 0;
  std::int64_t den = 1;
};
}  // namespace detail

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in a machine word are kept
/// inline; anything larger is promoted to a GMP rational and demoted again
/// as soon as it fits. The two representations are never both valid for the
/// same value, so structural comparison is value comparison.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& value);

  /// Parses "p", "-p" or "p/q" with decimal integers of any size.
  static Rational parse(std::string_view text);

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  bool is_integer() const;
  int sign() const noexcept;

  std::string numerator_string() const;
  std::string denominator_string() const;
  std::string to_string() const;  // "p" when q = 1, else "p/q"
  mpq_class to_mpq() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs);
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  std::size_t hash() const;

 private:
  using Small = detail::SmallRational;

  void assign_big(mpq_class value);
  void assign_wide(__int128 num, __int128 den);
  bool is_small() const noexcept { return std::holds_alternative<Small>(value_); }

  std::variant<Small, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace coha
