#include "coha/mpoly.hpp"

#include <algorithm>
#include <string>

namespace coha {

MPoly MPoly::constant(std::size_t arity, QLaurent c) {
  return monomial(arity, ExponentVector(arity, 0), std::move(c));
}

MPoly MPoly::monomial(std::size_t arity, ExponentVector exponents, QLaurent c) {
  MPoly p(arity);
  p.add_term(exponents, c);
  return p;
}

MPoly MPoly::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) throw ShapeError("variable index out of range");
  ExponentVector e(arity, 0);
  e[index] = 1;
  return monomial(arity, std::move(e), QLaurent(1));
}

void MPoly::check_arity(const ExponentVector& e) const {
  if (e.size() != arity_) {
    throw ShapeError("exponent vector of length " + std::to_string(e.size()) + " for arity " +
                     std::to_string(arity_));
  }
}

void MPoly::add_term(const ExponentVector& exponents, const QLaurent& c) {
  check_arity(exponents);
  if (std::any_of(exponents.begin(), exponents.end(), [](int v) { return v < 0; })) {
    throw ShapeError("negative exponent");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QLaurent MPoly::coefficient(const ExponentVector& exponents) const {
  check_arity(exponents);
  auto it = terms_.find(exponents);
  return it == terms_.end() ? QLaurent() : it->second;
}

std::vector<std::pair<ExponentVector, QLaurent>> MPoly::sorted_terms() const {
  std::vector<std::pair<ExponentVector, QLaurent>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

MPoly MPoly::embed(std::span<const std::size_t> target, std::size_t new_arity) const {
  if (target.size() != arity_) throw ShapeError("embedding map has wrong length");
  for (std::size_t t : target) {
    if (t >= new_arity) throw ShapeError("embedding target out of range");
  }
  MPoly out(new_arity);
  ExponentVector e(new_arity);
  for (const auto& [exp, c] : terms_) {
    std::fill(e.begin(), e.end(), 0);
    for (std::size_t i = 0; i < arity_; ++i) e[target[i]] += exp[i];
    out.add_term(e, c);
  }
  return out;
}

MPoly MPoly::map_coefficients(const std::function<QLaurent(const QLaurent&)>& f) const {
  MPoly out(arity_);
  for (const auto& [exp, c] : terms_) out.add_term(exp, f(c));
  return out;
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
  if (rhs.arity_ != arity_) throw ShapeError("arity mismatch in polynomial sum");
  for (const auto& [exp, c] : rhs.terms_) add_term(exp, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
  if (rhs.arity_ != arity_) throw ShapeError("arity mismatch in polynomial difference");
  for (const auto& [exp, c] : rhs.terms_) add_term(exp, -c);
  return *this;
}

MPoly& MPoly::operator*=(const QLaurent& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [exp, coeff] : terms_) coeff = coeff * c;
  return *this;
}

MPoly multiply(const MPoly& a, const MPoly& b, std::size_t term_cap) {
  if (a.arity() != b.arity()) {
    throw ShapeError("arity mismatch in polynomial product: " + std::to_string(a.arity()) + " vs " +
                     std::to_string(b.arity()));
  }
  const std::size_t n = a.arity();
  MPoly out(n);
  ExponentVector e(n);
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
    if (out.size() > term_cap) {
      throw ResourceLimitError("polynomial product exceeds term cap of " + std::to_string(term_cap));
    }
  }
  return out;
}

}  // namespace coha
