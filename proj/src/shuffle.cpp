#include "coha/shuffle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace coha {

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) throw ResourceLimitError("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

SymmetricElement SymmetricElement::m(const Partition& lambda) {
  SymmetricElement f(lambda.length());
  f.add(lambda, QLaurent(1));
  return f;
}

SymmetricElement SymmetricElement::M(const Partition& lambda) {
  SymmetricElement f(lambda.length());
  f.add(lambda, QLaurent(static_cast<std::int64_t>(multiplicity(lambda))));
  return f;
}

void SymmetricElement::add(const Partition& lambda, const QLaurent& c) {
  if (lambda.length() != arity_) {
    throw ShapeError("partition " + lambda.to_string() + " in symmetric element of arity " + std::to_string(arity_));
  }
  terms_.add(lambda, c);
}

SymmetricElement& SymmetricElement::operator+=(const SymmetricElement& rhs) {
  if (rhs.arity_ != arity_) throw ShapeError("arity mismatch in symmetric sum");
  terms_ += rhs.terms_;
  return *this;
}

SymmetricElement& SymmetricElement::operator*=(const QLaurent& c) {
  terms_ *= c;
  return *this;
}

MPoly SymmetricElement::expand() const {
  MPoly out(arity_);
  for (const auto& [lambda, c] : terms_.terms()) {
    for (const auto& w : distinct_permutations(lambda)) out.add_term(w, c);
  }
  return out;
}

void GradedSymmetricElement::add(const SymmetricElement& component) {
  if (component.is_zero()) return;
  auto [it, inserted] = components_.try_emplace(component.arity(), component);
  if (!inserted) {
    it->second += component;
    if (it->second.is_zero()) components_.erase(it);
  }
}

SymmetricElement GradedSymmetricElement::component(std::size_t arity) const {
  auto it = components_.find(arity);
  return it == components_.end() ? SymmetricElement(arity) : it->second;
}

MPoly m_expand(const Partition& lambda) { return SymmetricElement::m(lambda).expand(); }

MPoly M_expand(const Partition& lambda) {
  // Literal sum over S_n, independent of the multiplicity shortcut.
  const std::size_t n = lambda.length();
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  MPoly out(n);
  ExponentVector e(n);
  do {
    for (std::size_t i = 0; i < n; ++i) e[sigma[i]] = lambda[i];
    out.add_term(e, QLaurent(1));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

SymmetricElement to_m_basis(const MPoly& p) {
  const std::size_t n = p.arity();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (const auto& [e, c] : p.terms()) {
      ExponentVector swapped = e;
      std::swap(swapped[i], swapped[i + 1]);
      if (p.coefficient(swapped) != c) {
        throw NotSymmetricError("polynomial is not invariant under swapping x_" + std::to_string(i + 1) + " and x_" +
                                std::to_string(i + 2));
      }
    }
  }
  SymmetricElement out(n);
  for (const auto& [e, c] : p.terms()) {
    if (std::is_sorted(e.begin(), e.end())) out.add(Partition::from_sorted(e), c);
  }
  return out;
}

namespace {

// Calls f on every size-k subset of {0..n-1} in lexicographic order, with its complement.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> subset(k);
  std::iota(subset.begin(), subset.end(), 0);
  std::vector<std::size_t> complement;
  while (true) {
    complement.clear();
    for (std::size_t i = 0, j = 0; i < n; ++i) {
      if (j < k && subset[j] == i) {
        ++j;
      } else {
        complement.push_back(i);
      }
    }
    f(subset, complement);
    std::size_t i = k;
    while (i > 0 && subset[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++subset[i - 1];
    for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
}

void check_subset_budget(std::size_t n, std::size_t k, const Limits& limits) {
  if (n > 62 || binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) > limits.max_subsets) {
    throw ResourceLimitError("subset enumeration C(" + std::to_string(n) + "," + std::to_string(k) +
                             ") exceeds the subset budget");
  }
}

}  // namespace

SymmetricElement shuffle_product(const SymmetricElement& f1, const SymmetricElement& f2, LoopCount d,
                                 const Limits& limits, const QLaurent& q) {
  const std::size_t n1 = f1.arity();
  const std::size_t n2 = f2.arity();
  const std::size_t n = n1 + n2;
  check_subset_budget(n, n1, limits);
  const MPoly p1 = f1.expand();
  const MPoly p2 = f2.expand();
  MPoly total(n);
  for_each_subset(n, n1, [&](const std::vector<std::size_t>& subset, const std::vector<std::size_t>& complement) {
    MPoly term = multiply(p1.embed(subset, n), p2.embed(complement, n), limits.term_cap);
    for (std::size_t j : complement) {
      for (std::size_t i : subset) {
        MPoly factor = MPoly::variable(n, j);
        ExponentVector xi(n, 0);
        xi[i] = 1;
        factor.add_term(xi, -q);
        for (int r = 0; r < d.value() - 1; ++r) term = multiply(term, factor, limits.term_cap);
      }
    }
    total += term;
    if (total.size() > limits.term_cap) throw ResourceLimitError("shuffle product exceeds the term cap");
  });
  return to_m_basis(total);
}

GradedSymmetricElement shuffle_product(const GradedSymmetricElement& f1, const GradedSymmetricElement& f2,
                                       LoopCount d, const Limits& limits) {
  GradedSymmetricElement out;
  for (const auto& [a1, c1] : f1.components()) {
    for (const auto& [a2, c2] : f2.components()) out.add(shuffle_product(c1, c2, d, limits));
  }
  return out;
}

MBasisCombination multiply_M_by_m(const Partition& lambda, const Partition& mu) {
  if (lambda.length() != mu.length()) throw ShapeError("M_lambda m_mu needs partitions of equal length");
  MBasisCombination out;
  for (const auto& w : distinct_permutations(mu)) ++out[sort_ascending(vec_add(lambda.parts(), w))];
  return out;
}

SymmetricElement from_M_basis(const MBasisCombination& combo, std::size_t arity) {
  SymmetricElement out(arity);
  for (const auto& [lambda, count] : combo) {
    out.add(lambda, QLaurent(static_cast<std::int64_t>(count * multiplicity(lambda))));
  }
  return out;
}

SymmetricElement multiply_m_by_m(const Partition& lambda, const Partition& mu) {
  if (lambda.length() != mu.length()) throw ShapeError("m_lambda m_mu needs partitions of equal length");
  SymmetricElement out(lambda.length());
  const auto c_lambda = static_cast<std::int64_t>(multiplicity(lambda));
  for (const auto& w : distinct_permutations(mu)) {
    const Partition key = sort_ascending(vec_add(lambda.parts(), w));
    out.add(key, QLaurent(Rational(static_cast<std::int64_t>(multiplicity(key)), c_lambda)));
  }
  return out;
}

CheckReport verify_M_by_m(const Partition& lambda, const Partition& mu) {
  CheckReport report;
  report.name = "M" + lambda.to_string() + " m" + mu.to_string();
  const MPoly direct = multiply(M_expand(lambda), m_expand(mu));
  MPoly formula(lambda.length());
  for (const auto& [key, count] : multiply_M_by_m(lambda, mu)) {
    MPoly part = M_expand(key);
    part *= QLaurent(static_cast<std::int64_t>(count));
    formula += part;
  }
  report.record(direct == formula, "M_lambda m_mu differs from the sum of M_{lambda+w} for lambda=" +
                                       lambda.to_string() + " mu=" + mu.to_string());
  return report;
}

CheckReport verify_m_by_m(const Partition& lambda, const Partition& mu) {
  CheckReport report;
  report.name = "m" + lambda.to_string() + " m" + mu.to_string();
  const MPoly direct = multiply(m_expand(lambda), m_expand(mu));
  report.record(direct == multiply_m_by_m(lambda, mu).expand(),
                "m_lambda m_mu differs from the weighted sum for lambda=" + lambda.to_string() +
                    " mu=" + mu.to_string());
  return report;
}

CheckReport subset_sum_identity(const Partition& lambda, const Partition& mu, const Limits& limits) {
  CheckReport report;
  report.name = "subset sum " + lambda.to_string() + " " + mu.to_string();
  const std::size_t n = lambda.length();
  const std::size_t k = mu.length();
  check_subset_budget(n + k, n, limits);
  const MPoly ml = M_expand(lambda);
  const MPoly mm = M_expand(mu);
  MPoly total(n + k);
  for_each_subset(n + k, n, [&](const std::vector<std::size_t>& subset, const std::vector<std::size_t>& complement) {
    total += multiply(ml.embed(subset, n + k), mm.embed(complement, n + k), limits.term_cap);
  });
  const Partition joined = sort_ascending(concat(lambda.parts(), mu.parts()));
  report.record(total == M_expand(joined), "subset sum differs from M" + joined.to_string() + " for lambda=" +
                                               lambda.to_string() + " mu=" + mu.to_string());
  return report;
}

GradedSymmetricElement phi(const PartitionElement& e) {
  GradedSymmetricElement out;
  for (const auto& [lambda, c] : e.terms()) {
    SymmetricElement f = SymmetricElement::M(lambda);
    f *= c;
    out.add(f);
  }
  return out;
}

PartitionElement phi_inverse(const GradedSymmetricElement& f) {
  PartitionElement out;
  for (const auto& [arity, component] : f.components()) {
    for (const auto& [lambda, c] : component.terms()) {
      QLaurent scaled = c;
      scaled *= Rational(1, static_cast<std::int64_t>(multiplicity(lambda)));
      out.add(lambda, scaled);
    }
  }
  return out;
}

CheckReport verify_homomorphism(const Partition& mu, const Partition& nu, LoopCount d, const Limits& limits) {
  CheckReport report;
  report.name = "phi homomorphism " + mu.to_string() + " " + nu.to_string() + " d=" + std::to_string(d.value());
  const GradedSymmetricElement via_structure_constants = phi(product(mu, nu, d, limits));
  const GradedSymmetricElement via_shuffle(
      shuffle_product(SymmetricElement::M(mu), SymmetricElement::M(nu), d, limits));
  report.record(via_structure_constants == via_shuffle, "phi(mu*nu) != phi(mu)*phi(nu) for mu=" + mu.to_string() +
                                                            " nu=" + nu.to_string() +
                                                            " d=" + std::to_string(d.value()));
  return report;
}

SymmetricElement specialize(const SymmetricElement& f, const Rational& value) {
  SymmetricElement out(f.arity());
  for (const auto& [lambda, c] : f.terms()) out.add(lambda, QLaurent(c.eval(value)));
  return out;
}

}  // namespace coha
