#include "coha/partition_algebra.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <unordered_map>

namespace coha {

namespace {

using StateMap = std::unordered_map<IntVector, QLaurent, ExponentHash>;

// Seeds are [mu | nu] vectors of one shape (m, n). The side of length
// k = min(m, n) is the branch block; the other side is folded one slot per step.
PartitionElement fold_kernel(const std::vector<std::pair<IntVector, QLaurent>>& seeds, std::size_t m,
                             std::size_t n, LoopCount d, const Limits& limits) {
  const int e = d.value() - 1;
  const bool branch_on_mu = m <= n;
  const std::size_t k = branch_on_mu ? m : n;
  const std::size_t f = branch_on_mu ? n : m;

  std::vector<std::int64_t> binom(static_cast<std::size_t>(e) + 1, 1);
  for (int j = 1; j <= e; ++j) {
    binom[static_cast<std::size_t>(j)] = binom[static_cast<std::size_t>(j - 1)] * (e - j + 1) / j;
  }

  // State layout: [branch block | finished fold slots | pending fold slots], each block sorted.
  StateMap states;
  for (const auto& [v, c] : seeds) {
    IntVector key(v.size());
    const auto mid = v.begin() + static_cast<std::ptrdiff_t>(m);
    if (branch_on_mu) {
      std::copy(v.begin(), v.end(), key.begin());
    } else {
      std::copy(mid, v.end(), key.begin());
      std::copy(v.begin(), mid, key.begin() + static_cast<std::ptrdiff_t>(n));
    }
    std::sort(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(key.begin() + static_cast<std::ptrdiff_t>(k), key.end());
    auto [it, inserted] = states.try_emplace(std::move(key), c);
    if (!inserted) it->second += c;
  }

  std::vector<int> j(k);
  const int full = e * static_cast<int>(k);
  for (std::size_t step = 0; step < f; ++step) {
    StateMap next;
    next.reserve(states.size() * 4);
    const std::size_t slot = k + step;
    for (const auto& [state, coeff] : states) {
      if (coeff.is_zero()) continue;
      std::fill(j.begin(), j.end(), 0);
      while (true) {
        IntVector key = state;
        std::int64_t weight = 1;
        int moved = 0;
        for (std::size_t t = 0; t < k; ++t) {
          key[t] += j[t];
          moved += j[t];
          weight *= binom[static_cast<std::size_t>(j[t])];
        }
        key[slot] += full - moved;
        std::sort(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(k));
        std::sort(key.begin() + static_cast<std::ptrdiff_t>(k), key.begin() + static_cast<std::ptrdiff_t>(slot) + 1);
        const int power = branch_on_mu ? moved : full - moved;
        next[std::move(key)].add_scaled(coeff, Rational(power % 2 == 0 ? weight : -weight), power);
        std::size_t t = 0;
        while (t < k && j[t] == e) j[t++] = 0;
        if (t == k) break;
        ++j[t];
      }
      if (next.size() > limits.term_cap) {
        throw ResourceLimitError("folded product exceeds term cap of " + std::to_string(limits.term_cap));
      }
    }
    states = std::move(next);
  }
  PartitionElement out;
  for (const auto& [state, coeff] : states) {
    if (!coeff.is_zero()) out.add(sort_ascending(state), coeff);
  }
  return out;
}

bool use_table(std::size_t m, std::size_t n, LoopCount d, const Limits& limits) {
  return kernel_size_bound(static_cast<int>(m), static_cast<int>(n), d.value()) <= limits.table_terms;
}

}  // namespace

VectorElement product_vectors(const IntVector& mu, const IntVector& nu, LoopCount d, const Limits& limits) {
  if (mu.empty()) return VectorElement(nu, QLaurent(1));
  if (nu.empty()) return VectorElement(mu, QLaurent(1));
  const auto table = cached_structure_constants(static_cast<int>(mu.size()), static_cast<int>(nu.size()), d.value(),
                                                limits);
  VectorElement out;
  for (const auto& entry : table->entries()) {
    out.add(concat(vec_add(mu, entry.a), vec_add(nu, entry.b)), entry.coeff);
  }
  return out;
}

PartitionElement product(const Partition& mu, const Partition& nu, LoopCount d, const Limits& limits) {
  if (mu.empty()) return PartitionElement(nu, QLaurent(1));
  if (nu.empty()) return PartitionElement(mu, QLaurent(1));
  if (use_table(mu.length(), nu.length(), d, limits)) return product_table(mu, nu, d, limits);
  return product_folded(mu, nu, d, limits);
}

PartitionElement product_table(const Partition& mu, const Partition& nu, LoopCount d, const Limits& limits) {
  if (mu.empty()) return PartitionElement(nu, QLaurent(1));
  if (nu.empty()) return PartitionElement(mu, QLaurent(1));
  const std::size_t m = mu.length();
  const std::size_t n = nu.length();
  const auto table = cached_structure_constants(static_cast<int>(m), static_cast<int>(n), d.value(), limits);

  std::unordered_map<IntVector, QLaurent, ExponentHash> acc;
  IntVector key(m + n);
  for (const auto& entry : table->entries()) {
    for (std::size_t i = 0; i < m; ++i) key[i] = mu[i] + entry.a[i];
    for (std::size_t j = 0; j < n; ++j) key[m + j] = nu[j] + entry.b[j];
    std::sort(key.begin(), key.end());
    auto [it, inserted] = acc.try_emplace(key, entry.coeff);
    if (!inserted) it->second += entry.coeff;
  }
  PartitionElement out;
  for (auto& [k, c] : acc) {
    if (!c.is_zero()) out.add(Partition::from_sorted(k), c);
  }
  return out;
}


PartitionElement product_folded(const Partition& mu, const Partition& nu, LoopCount d, const Limits& limits) {
  if (mu.empty()) return PartitionElement(nu, QLaurent(1));
  if (nu.empty()) return PartitionElement(mu, QLaurent(1));
  return fold_kernel({{concat(mu.parts(), nu.parts()), QLaurent(1)}}, mu.length(), nu.length(), d, limits);
}

PartitionElement product(const PartitionElement& x, const PartitionElement& y, LoopCount d, const Limits& limits) {
  PartitionElement out;
  // Pairs too large for the table share one fold per shape.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<IntVector, QLaurent>>> folds;
  for (const auto& [p, cp] : x.terms()) {
    for (const auto& [r, cr] : y.terms()) {
      if (p.empty() || r.empty() || use_table(p.length(), r.length(), d, limits)) {
        PartitionElement basis = product(p, r, d, limits);
        basis *= cp * cr;
        out += basis;
      } else {
        folds[{p.length(), r.length()}].emplace_back(concat(p.parts(), r.parts()), cp * cr);
      }
    }
  }
  for (const auto& [shape, seeds] : folds) out += fold_kernel(seeds, shape.first, shape.second, d, limits);
  return out;
}

Partition product_q0(const Partition& mu, const Partition& nu, LoopCount d) {
  const int shift = static_cast<int>(mu.length()) * (d.value() - 1);
  IntVector v = mu.parts();
  for (int part : nu.parts()) v.push_back(part + shift);
  return sort_ascending(std::move(v));
}

std::map<Partition, Rational> specialize(const PartitionElement& e, const Rational& value) {
  std::map<Partition, Rational> out;
  for (const auto& [p, c] : e.terms()) {
    Rational v = c.eval(value);
    if (!v.is_zero()) out.emplace(p, std::move(v));
  }
  return out;
}

PartitionElement bar(const PartitionElement& e) {
  PartitionElement out;
  for (const auto& [p, c] : e.terms()) out.add(p, c.bar());
  return out;
}

PartitionElement quotient(const VectorElement& e) {
  PartitionElement out;
  for (const auto& [v, c] : e.terms()) out.add(sort_ascending(v), c);
  return out;
}

QuasiCommutativityReport check_quasi_commutativity(const Partition& mu, const Partition& nu, LoopCount d,
                                                   const Limits& limits) {
  QuasiCommutativityReport r;
  r.exponent = (d.value() - 1) * static_cast<int>(mu.length() * nu.length());
  r.left = product(mu, nu, d, limits);
  const PartitionElement reversed = bar(product(nu, mu, d, limits));
  r.right_unsigned = QLaurent::monomial(1, r.exponent) * reversed;
  r.right_signed = QLaurent::neg_q_power(r.exponent) * reversed;
  r.unsigned_holds = r.left == r.right_unsigned;
  r.signed_holds = r.left == r.right_signed;
  return r;
}

CheckReport check_associativity(const Partition& mu, const Partition& nu, const Partition& w, LoopCount d,
                                const Limits& limits) {
  CheckReport report;
  report.name = "associativity " + mu.to_string() + " " + nu.to_string() + " " + w.to_string() + " d=" +
                std::to_string(d.value());
  const PartitionElement left = product(product(mu, nu, d, limits), PartitionElement(w, QLaurent(1)), d, limits);
  const PartitionElement right = product(PartitionElement(mu, QLaurent(1)), product(nu, w, d, limits), d, limits);
  report.record(left == right, "(mu*nu)*w != mu*(nu*w) for mu=" + mu.to_string() + " nu=" + nu.to_string() +
                                   " w=" + w.to_string() + " d=" + std::to_string(d.value()));
  return report;
}

CheckReport check_grading(const Partition& mu, const Partition& nu, LoopCount d, const PartitionElement& product) {
  CheckReport report;
  report.name = "grading " + mu.to_string() + " * " + nu.to_string() + " d=" + std::to_string(d.value());
  const long mn = static_cast<long>(mu.length() * nu.length());
  const long weight = mu.weight() + nu.weight() + (d.value() - 1) * mn;
  const int max_q = static_cast<int>((d.value() - 1) * mn);
  for (const auto& [p, c] : product.terms()) {
    const std::string where = " at " + p.to_string() + " in " + mu.to_string() + "*" + nu.to_string() +
                              " d=" + std::to_string(d.value());
    report.record(p.length() == mu.length() + nu.length(), "length not additive" + where);
    report.record(p.weight() == weight, "weight differs from sum+sum+(d-1)mn" + where);
    report.record(c.is_polynomial() && c.high_degree() <= max_q, "q-degree out of range" + where);
  }
  return report;
}

CheckReport check_grading(const PartitionElement& x, const PartitionElement& y, LoopCount d,
                          const PartitionElement& product) {
  CheckReport report;
  report.name = "grading of a bilinear product d=" + std::to_string(d.value());
  // (length, weight) -> admissible q-degree range [low, high].
  std::map<std::pair<std::size_t, long>, std::pair<int, int>> allowed;
  for (const auto& [p, cp] : x.terms()) {
    for (const auto& [r, cr] : y.terms()) {
      const long mn = static_cast<long>(p.length() * r.length());
      const std::pair<std::size_t, long> grade{p.length() + r.length(), p.weight() + r.weight() + (d.value() - 1) * mn};
      const int low = cp.low_degree() + cr.low_degree();
      const int high = cp.high_degree() + cr.high_degree() + static_cast<int>((d.value() - 1) * mn);
      auto [it, inserted] = allowed.try_emplace(grade, low, high);
      if (!inserted) {
        it->second.first = std::min(it->second.first, low);
        it->second.second = std::max(it->second.second, high);
      }
    }
  }
  for (const auto& [p, c] : product.terms()) {
    auto it = allowed.find({p.length(), p.weight()});
    const std::string where = " at " + p.to_string() + " d=" + std::to_string(d.value());
    report.record(it != allowed.end(), "length or weight not predicted by any input pair" + where);
    if (it != allowed.end()) {
      report.record(c.low_degree() >= it->second.first && c.high_degree() <= it->second.second,
                    "q-degree out of range" + where);
    }
  }
  return report;
}

std::string to_string(const PartitionElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : e.terms()) {
    std::string coeff = c.to_string();
    const bool compound = c.coeffs().size() > 1;
    if (!first) out += " + ";
    first = false;
    if (c == QLaurent(1)) {
      out += p.to_string();
    } else if (compound) {
      out += "(" + coeff + ")·" + p.to_string();
    } else {
      out += coeff + "·" + p.to_string();
    }
  }
  return out;
}

}  // namespace coha
