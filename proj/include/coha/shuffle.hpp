#pragma once

#include <cstdint>
#include <map>

#include "coha/errors.hpp"
#include "coha/mpoly.hpp"
#include "coha/partition.hpp"
#include "coha/partition_algebra.hpp"
#include "coha/report.hpp"

namespace coha {

/// Symmetric polynomial in a fixed number of variables, stored in the
/// monomial basis m_lambda (one key per ascending partition of that length).
class SymmetricElement {
 public:
  explicit SymmetricElement(std::size_t arity = 0) : arity_(arity) {}

  /// m_lambda and M_lambda = c(lambda) m_lambda.
  static SymmetricElement m(const Partition& lambda);
  static SymmetricElement M(const Partition& lambda);

  std::size_t arity() const noexcept { return arity_; }
  const PartitionElement::TermMap& terms() const noexcept { return terms_.terms(); }
  bool is_zero() const noexcept { return terms_.is_zero(); }
  QLaurent coefficient(const Partition& lambda) const { return terms_.coefficient(lambda); }

  void add(const Partition& lambda, const QLaurent& c);
  SymmetricElement& operator+=(const SymmetricElement& rhs);
  SymmetricElement& operator*=(const QLaurent& c);

  /// The polynomial sum of c_lambda m_lambda(x_1..x_n).
  MPoly expand() const;

  friend bool operator==(const SymmetricElement& a, const SymmetricElement& b) = default;

 private:
  std::size_t arity_;
  PartitionElement terms_;
};

/// Direct sum over arities.
class GradedSymmetricElement {
 public:
  GradedSymmetricElement() = default;
  explicit GradedSymmetricElement(const SymmetricElement& component) { add(component); }

  void add(const SymmetricElement& component);
  const std::map<std::size_t, SymmetricElement>& components() const noexcept { return components_; }
  SymmetricElement component(std::size_t arity) const;
  bool is_zero() const noexcept { return components_.empty(); }

  friend bool operator==(const GradedSymmetricElement& a, const GradedSymmetricElement& b) = default;

 private:
  std::map<std::size_t, SymmetricElement> components_;
};

/// m_lambda(x_1..x_n): one unit term per distinct rearrangement.
MPoly m_expand(const Partition& lambda);
/// M_lambda(x_1..x_n): sum over all of S_n, i.e. c(lambda) m_lambda.
MPoly M_expand(const Partition& lambda);

/// Reads a symmetric polynomial off in the m basis. Throws NotSymmetricError
/// unless the input is invariant under every adjacent transposition.
SymmetricElement to_m_basis(const MPoly& p);

/// The quantized shuffle product, by direct expansion over all subsets I of
/// size n1: f1(x_I) f2(x_J) prod_{j in J, i in I} (x_j - q x_i)^(d-1).
/// `q` is the value substituted for the quantum parameter (q itself by default).
SymmetricElement shuffle_product(const SymmetricElement& f1, const SymmetricElement& f2, LoopCount d,
                                 const Limits& limits = {}, const QLaurent& q = QLaurent::q());
GradedSymmetricElement shuffle_product(const GradedSymmetricElement& f1, const GradedSymmetricElement& f2,
                                       LoopCount d, const Limits& limits = {});

/// Formal sum of M-basis elements with integer multiplicities.
using MBasisCombination = std::map<Partition, std::uint64_t>;

/// M_lambda m_mu as sum over w in S_mu of M_{(lambda + w)_<=}.
MBasisCombination multiply_M_by_m(const Partition& lambda, const Partition& mu);
/// m-basis view of an M-basis combination in `arity` variables.
SymmetricElement from_M_basis(const MBasisCombination& combo, std::size_t arity);
/// m_lambda m_mu as sum over w in S_mu of c(lambda + w)/c(lambda) m_{lambda + w}.
SymmetricElement multiply_m_by_m(const Partition& lambda, const Partition& mu);

/// multiply_M_by_m against the expanded polynomial product.
CheckReport verify_M_by_m(const Partition& lambda, const Partition& mu);
/// multiply_m_by_m against the expanded polynomial product.
CheckReport verify_m_by_m(const Partition& lambda, const Partition& mu);
/// Sum over subsets I of M_lambda(x_I) M_mu(x_J) against M_{(lambda, mu)_<=}.
CheckReport subset_sum_identity(const Partition& lambda, const Partition& mu, const Limits& limits = {});

/// Linear extension of lambda -> M_lambda.
GradedSymmetricElement phi(const PartitionElement& e);
/// Inverse of phi: divides each m-coefficient by c(lambda).
PartitionElement phi_inverse(const GradedSymmetricElement& f);

/// phi(mu * nu) against phi(mu) * phi(nu), the left side through structure
/// constants and the right side through the subset-sum shuffle product.
CheckReport verify_homomorphism(const Partition& mu, const Partition& nu, LoopCount d, const Limits& limits = {});

/// Evaluates every coefficient at q = value.
SymmetricElement specialize(const SymmetricElement& f, const Rational& value);

std::uint64_t binomial(unsigned n, unsigned k);

}  // namespace coha
