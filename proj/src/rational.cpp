#include "coha/rational.hpp"

#include <cctype>
#include <functional>
#include <limits>
#include <ostream>

#include "coha/errors.hpp"

namespace coha {

namespace {

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

// INT64_MIN is excluded so negation never overflows.
bool fits(__int128 v) { return v <= kMax && v >= -kMax; }

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(std::int64_t value) {
  if (value == std::numeric_limits<std::int64_t>::min()) {
    assign_big(mpq_class(mpz_class(std::to_string(value))));
  } else {
    value_ = Small{value, 1};
  }
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  assign_wide(num, den);
}

Rational::Rational(const mpq_class& value) {
  mpq_class v = value;
  v.canonicalize();
  assign_big(std::move(v));
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.find('-') != std::string_view::npos) {
    throw ParseError("invalid rational '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.remove_prefix(1);
  if (den[0] == '+') den.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(mpq_class(n, d));
}

void Rational::assign_big(mpq_class value) {
  if (mpz_fits_slong_p(value.get_num_mpz_t()) && mpz_fits_slong_p(value.get_den_mpz_t())) {
    const long n = value.get_num().get_si();
    const long d = value.get_den().get_si();
    if (n != std::numeric_limits<long>::min()) {
      value_ = Small{n, d};
      return;
    }
  }
  value_ = std::move(value);
}

void Rational::assign_wide(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    value_ = Small{0, 1};
    return;
  }
  if (den != 1) {
    const __int128 g = gcd128(num, den);
    num /= g;
    den /= g;
  }
  if (fits(num) && fits(den)) {
    value_ = Small{static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
  } else {
    assign_big(mpq_class(to_mpz(num), to_mpz(den)));
  }
}

bool Rational::is_zero() const noexcept {
  return is_small() && std::get<Small>(value_).num == 0;
}

bool Rational::is_one() const noexcept {
  if (!is_small()) return false;
  const auto& s = std::get<Small>(value_);
  return s.num == 1 && s.den == 1;
}

bool Rational::is_integer() const {
  if (is_small()) return std::get<Small>(value_).den == 1;
  return std::get<mpq_class>(value_).get_den() == 1;
}

int Rational::sign() const noexcept {
  if (is_small()) {
    const auto n = std::get<Small>(value_).num;
    return (n > 0) - (n < 0);
  }
  return sgn(std::get<mpq_class>(value_));
}

mpq_class Rational::to_mpq() const {
  if (is_small()) {
    const auto& s = std::get<Small>(value_);
    return mpq_class(mpz_class(static_cast<long>(s.num)), mpz_class(static_cast<long>(s.den)));
  }
  return std::get<mpq_class>(value_);
}

std::string Rational::numerator_string() const {
  if (is_small()) return std::to_string(std::get<Small>(value_).num);
  return std::get<mpq_class>(value_).get_num().get_str();
}

std::string Rational::denominator_string() const {
  if (is_small()) return std::to_string(std::get<Small>(value_).den);
  return std::get<mpq_class>(value_).get_den().get_str();
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator_string();
  return numerator_string() + "/" + denominator_string();
}

Rational Rational::operator-() const {
  Rational r;
  if (is_small()) {
    const auto& s = std::get<Small>(value_);
    r.value_ = Small{-s.num, s.den};
  } else {
    r.assign_big(-std::get<mpq_class>(value_));
  }
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (is_small() && rhs.is_small()) {
    const auto a = std::get<Small>(value_);
    const auto b = std::get<Small>(rhs.value_);
    if (a.den == 1 && b.den == 1) {
      const __int128 n = static_cast<__int128>(a.num) + b.num;
      if (fits(n)) {
        value_ = Small{static_cast<std::int64_t>(n), 1};
        return *this;
      }
    }
    assign_wide(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                static_cast<__int128>(a.den) * b.den);
    return *this;
  }
  assign_big(to_mpq() + rhs.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (is_small() && rhs.is_small()) {
    const auto a = std::get<Small>(value_);
    const auto b = std::get<Small>(rhs.value_);
    const __int128 n = static_cast<__int128>(a.num) * b.num;
    if (a.den == 1 && b.den == 1) {
      if (fits(n)) {
        value_ = Small{static_cast<std::int64_t>(n), 1};
        return *this;
      }
    }
    assign_wide(n, static_cast<__int128>(a.den) * b.den);
    return *this;
  }
  assign_big(to_mpq() * rhs.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  if (is_small() && rhs.is_small()) {
    const auto a = std::get<Small>(value_);
    const auto b = std::get<Small>(rhs.value_);
    assign_wide(static_cast<__int128>(a.num) * b.den, static_cast<__int128>(a.den) * b.num);
    return *this;
  }
  assign_big(to_mpq() / rhs.to_mpq());
  return *this;
}

bool operator==(const Rational& lhs, const Rational& rhs) {
  if (lhs.is_small() != rhs.is_small()) return false;
  if (lhs.is_small()) {
    const auto& a = std::get<Rational::Small>(lhs.value_);
    const auto& b = std::get<Rational::Small>(rhs.value_);
    return a.num == b.num && a.den == b.den;
  }
  return std::get<mpq_class>(lhs.value_) == std::get<mpq_class>(rhs.value_);
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  if (lhs.is_small() && rhs.is_small()) {
    const auto& a = std::get<Rational::Small>(lhs.value_);
    const auto& b = std::get<Rational::Small>(rhs.value_);
    return static_cast<__int128>(a.num) * b.den <=> static_cast<__int128>(b.num) * a.den;
  }
  const int c = cmp(lhs.to_mpq(), rhs.to_mpq());
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::size_t Rational::hash() const {
  if (is_small()) {
    const auto& s = std::get<Small>(value_);
    return std::hash<std::int64_t>{}(s.num) * 31 + std::hash<std::int64_t>{}(s.den);
  }
  return std::hash<std::string>{}(to_string());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace coha
