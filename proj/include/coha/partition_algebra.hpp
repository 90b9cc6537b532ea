#pragma once

#include <map>
#include <string>

#include "coha/errors.hpp"
#include "coha/kernel.hpp"
#include "coha/partition.hpp"
#include "coha/qlaurent.hpp"
#include "coha/report.hpp"

namespace coha {

/// Number of loops of the quiver, d >= 1.
class LoopCount {
 public:
  explicit LoopCount(int d) : d_(d) {
    if (d < 1) throw InvalidArgument("loop count d must be positive");
  }
  int value() const noexcept { return d_; }
  friend bool operator==(LoopCount, LoopCount) = default;

 private:
  int d_;
};

/// Finite QLaurent-linear combination of keys, zero coefficients pruned.
template <class Key, class Compare = std::less<Key>>
class LinearCombination {
 public:
  using TermMap = std::map<Key, QLaurent, Compare>;

  LinearCombination() = default;
  LinearCombination(const Key& key, QLaurent c) { add(key, std::move(c)); }

  void add(const Key& key, const QLaurent& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  QLaurent coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? QLaurent() : it->second;
  }

  LinearCombination& operator+=(const LinearCombination& rhs) {
    for (const auto& [k, c] : rhs.terms_) add(k, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& rhs) {
    for (const auto& [k, c] : rhs.terms_) add(k, -c);
    return *this;
  }
  LinearCombination& operator*=(const QLaurent& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
  }
  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(const QLaurent& c, LinearCombination a) { return a *= c; }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) = default;

 private:
  TermMap terms_;
};

/// Element of the algebra on integer vectors (before the sort quotient).
using VectorElement = LinearCombination<IntVector, ShortLex>;
/// Element of the partition algebra; keys iterate in (length, lex) order.
using PartitionElement = LinearCombination<Partition>;

/// mu * nu on raw vectors: sum of c^{a,b} (mu + a, nu + b). The empty
/// vector is the unit.
VectorElement product_vectors(const IntVector& mu, const IntVector& nu, LoopCount d, const Limits& limits = {});

/// mu * nu in the partition algebra: the vector product with every key sorted.
/// Reads the memoized structure-constant table when kernel_size_bound is
/// within limits.table_terms, and otherwise defers to product_folded.
PartitionElement product(const Partition& mu, const Partition& nu, LoopCount d, const Limits& limits = {});
/// The same product without expanding the kernel: multiplies by
/// prod_t (x_s - q x_t)^(d-1) for one s at a time and sorts the mu block, the
/// finished nu slots and the pending nu slots after every step. Each step's
/// factor is symmetric in the mu slots and the remaining factors are symmetric
/// in the pending slots, so the sorted result is unchanged.
PartitionElement product_folded(const Partition& mu, const Partition& nu, LoopCount d, const Limits& limits = {});
/// product through the structure-constant table regardless of size.
PartitionElement product_table(const Partition& mu, const Partition& nu, LoopCount d, const Limits& limits = {});
/// Bilinear extension.
PartitionElement product(const PartitionElement& x, const PartitionElement& y, LoopCount d,
                         const Limits& limits = {});

/// The q = 0 shift-and-sort rule: (mu, nu + m(d-1))_<=.
Partition product_q0(const Partition& mu, const Partition& nu, LoopCount d);

/// Evaluates every coefficient at q = value and drops zeros.
std::map<Partition, Rational> specialize(const PartitionElement& e, const Rational& value);

/// Coefficientwise q -> q^-1.
PartitionElement bar(const PartitionElement& e);

/// Sorts every key and merges.
PartitionElement quotient(const VectorElement& e);

struct QuasiCommutativityReport {
  PartitionElement left;            // mu * nu
  PartitionElement right_unsigned;  // q^{(d-1)mn} bar(nu * mu)
  PartitionElement right_signed;    // (-q)^{(d-1)mn} bar(nu * mu)
  int exponent = 0;                 // (d-1)mn
  bool unsigned_holds = false;
  bool signed_holds = false;
};

QuasiCommutativityReport check_quasi_commutativity(const Partition& mu, const Partition& nu, LoopCount d,
                                                   const Limits& limits = {});

/// (mu * nu) * w against mu * (nu * w).
CheckReport check_associativity(const Partition& mu, const Partition& nu, const Partition& w, LoopCount d,
                                const Limits& limits = {});

/// Length additivity, weight sum(mu) + sum(nu) + (d-1)mn, and q-degree
/// bounds on every term of an already computed product mu * nu.
CheckReport check_grading(const Partition& mu, const Partition& nu, LoopCount d, const PartitionElement& product);
/// Bilinear form of the same check: every term of x * y must carry the length
/// and weight predicted by some pair of input terms, with q-degrees inside
/// that pair's range. Exact per term when x and y are homogeneous.
CheckReport check_grading(const PartitionElement& x, const PartitionElement& y, LoopCount d,
                          const PartitionElement& product);

/// "c1·(p1) + c2·(p2)" with coefficients in parentheses when they have several terms.
std::string to_string(const PartitionElement& e);

}  // namespace coha
