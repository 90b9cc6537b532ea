#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "coha/errors.hpp"
#include "coha/mpoly.hpp"
#include "coha/partition.hpp"
#include "coha/report.hpp"

namespace coha {

/// Parameters of the kernel product over s in (l+m, l+m+n], t in (l, l+m]
/// of (x_s - q x_t)^(d-1). With shift l = 0 this is g_{m,n}; with l > 0 it
/// is the shifted kernel g_{m,n}[l], whose first l variables do not occur.
struct KernelSpec {
  int m = 1;
  int n = 1;
  int d = 1;
  int shift = 0;

  void validate() const;
  std::size_t arity() const { return static_cast<std::size_t>(shift + m + n); }
  /// Total x-degree (d-1)mn of every monomial.
  int degree() const { return (d - 1) * m * n; }
};

/// Fully expanded kernel polynomial, folded one linear factor at a time.
MPoly build_g(const KernelSpec& spec, const Limits& limits = {});

/// The coefficients c_{m,n}^{a,b} of the unshifted kernel, keyed by the split
/// of each exponent vector into its first m and last n entries.
class StructureConstantTable {
 public:
  struct Entry {
    IntVector a;
    IntVector b;
    QLaurent coeff;
  };

  StructureConstantTable(KernelSpec spec, MPoly kernel);

  const KernelSpec& spec() const noexcept { return spec_; }
  /// Nonzero entries, lexicographic in (a, b).
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  const MPoly& kernel() const noexcept { return kernel_; }
  std::size_t size() const noexcept { return entries_.size(); }

  QLaurent coefficient(const IntVector& a, const IntVector& b) const;
  /// Lookup by the concatenated exponent vector (a, b).
  QLaurent coefficient(const ExponentVector& ab) const { return kernel_.coefficient(ab); }

 private:
  KernelSpec spec_;
  MPoly kernel_;
  std::vector<Entry> entries_;
};

/// Requires spec.shift == 0.
StructureConstantTable structure_constants(const KernelSpec& spec, const Limits& limits = {});

/// Memoized table for (m, n, d). Safe to call from several threads; two
/// racing callers may both compute, one result wins.
std::shared_ptr<const StructureConstantTable> cached_structure_constants(int m, int n, int d,
                                                                         const Limits& limits = {});

/// Upper bound on the number of terms of g_{m,n}: exponent vectors of total
/// degree (d-1)mn with a_t <= (d-1)n and b_s <= (d-1)m. Saturates at 2^64-1.
std::uint64_t kernel_size_bound(int m, int n, int d);

/// Checks c^{tau(a), sigma(b)} = c^{a,b} for every stored key and every
/// rearrangement of a and of b.
CheckReport verify_symmetry(const StructureConstantTable& table);

/// Checks the two-way convolution identity between the (l,m), (l+m,n),
/// (l,m+n) and (m,n) tables at every exponent triple of the right total
/// degree, and the polynomial identity g_{l,m} g_{l+m,n} = g_{l,m+n} g_{m,n}[l].
CheckReport verify_coefficient_identity(int l, int m, int n, int d, const Limits& limits = {});

}  // namespace coha
