#include "coha/qlaurent.hpp"

#include <algorithm>
#include <ostream>

#include "coha/errors.hpp"

namespace coha {

QLaurent::QLaurent(Rational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

QLaurent::QLaurent(int offset, std::vector<Rational> coeffs) : offset_(offset), coeffs_(std::move(coeffs)) {
  normalize();
}

QLaurent QLaurent::monomial(Rational c, int exponent) {
  QLaurent r;
  if (!c.is_zero()) {
    r.offset_ = exponent;
    r.coeffs_.push_back(std::move(c));
  }
  return r;
}

QLaurent QLaurent::neg_q_power(int exponent) {
  return monomial(exponent % 2 == 0 ? 1 : -1, exponent);
}

void QLaurent::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return !c.is_zero(); });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    offset_ = 0;
    return;
  }
  offset_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  while (coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational QLaurent::coefficient(int exponent) const {
  if (is_zero() || exponent < offset_ || exponent > high_degree()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - offset_)];
}

QLaurent QLaurent::operator-() const {
  QLaurent r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QLaurent& QLaurent::operator+=(const QLaurent& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const int lo = std::min(offset_, rhs.offset_);
  const int hi = std::max(high_degree(), rhs.high_degree());
  if (lo < offset_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(offset_ - lo), Rational());
    offset_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  const auto base = static_cast<std::size_t>(rhs.offset_ - lo);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[base + i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

QLaurent& QLaurent::add_scaled(const QLaurent& p, const Rational& c, int shift) {
  if (p.is_zero() || c.is_zero()) return *this;
  const int p_lo = p.offset_ + shift;
  const int p_hi = p.high_degree() + shift;
  if (is_zero()) {
    offset_ = p_lo;
    coeffs_.reserve(p.coeffs_.size());
    for (const auto& x : p.coeffs_) coeffs_.push_back(x * c);
    return *this;
  }
  const int lo = std::min(offset_, p_lo);
  const int hi = std::max(high_degree(), p_hi);
  if (lo < offset_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(offset_ - lo), Rational());
    offset_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  const auto base = static_cast<std::size_t>(p_lo - lo);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) coeffs_[base + i] += p.coeffs_[i] * c;
  normalize();
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& rhs) { return *this += -rhs; }

QLaurent operator*(const QLaurent& lhs, const QLaurent& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return QLaurent(lhs.offset_ + rhs.offset_, std::move(out));
}

QLaurent& QLaurent::operator*=(const QLaurent& rhs) { return *this = *this * rhs; }

QLaurent& QLaurent::operator*=(const Rational& rhs) {
  if (rhs.is_zero()) return *this = QLaurent();
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

QLaurent QLaurent::bar() const {
  QLaurent r;
  r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  r.offset_ = is_zero() ? 0 : -high_degree();
  return r;
}

Rational QLaurent::eval(const Rational& value) const {
  if (is_zero()) return 0;
  if (value.is_zero()) {
    if (offset_ < 0) throw DomainError("evaluation at q = 0 of a Laurent polynomial with negative powers");
    return offset_ == 0 ? coeffs_.front() : Rational(0);
  }
  // Horner over the dense list, then scale by value^offset.
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= value;
    acc += *it;
  }
  Rational scale = 1;
  const Rational base = offset_ >= 0 ? value : Rational(1) / value;
  for (int i = 0; i < std::abs(offset_); ++i) scale *= base;
  return acc * scale;
}

QLaurent QLaurent::shifted(int shift) const {
  QLaurent r = *this;
  if (!r.is_zero()) r.offset_ += shift;
  return r;
}

namespace {

std::string render(const QLaurent& p, bool latex) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int e = p.high_degree(); e >= p.low_degree(); --e) {
    const Rational c = p.coefficient(e);
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += latex ? (negative ? "-" : "+") : (negative ? " - " : " + ");
    }
    first = false;
    std::string m = mag.to_string();
    if (latex && !mag.is_integer()) m = "\\frac{" + mag.numerator_string() + "}{" + mag.denominator_string() + "}";
    if (e == 0) {
      out += m;
      continue;
    }
    if (!mag.is_one()) out += m;
    out += "q";
    if (e != 1) out += latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string QLaurent::to_string() const { return render(*this, false); }
std::string QLaurent::to_latex() const { return render(*this, true); }

std::ostream& operator<<(std::ostream& os, const QLaurent& p) { return os << p.to_string(); }

}  // namespace coha
