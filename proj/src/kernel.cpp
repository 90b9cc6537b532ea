#include "coha/kernel.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

namespace coha {

void KernelSpec::validate() const {
  if (m < 1 || n < 1) throw InvalidArgument("kernel block sizes must be positive");
  if (d < 1) throw InvalidArgument("loop count d must be positive");
  if (shift < 0) throw InvalidArgument("kernel shift must be non-negative");
}

MPoly build_g(const KernelSpec& spec, const Limits& limits) {
  spec.validate();
  const std::size_t arity = spec.arity();
  MPoly g = MPoly::constant(arity, QLaurent(1));
  const int first_block = spec.shift;
  const int second_block = spec.shift + spec.m;
  for (int s = second_block; s < second_block + spec.n; ++s) {
    for (int t = first_block; t < second_block; ++t) {
      // x_s - q x_t
      MPoly factor = MPoly::variable(arity, static_cast<std::size_t>(s));
      factor.add_term(MPoly::variable(arity, static_cast<std::size_t>(t)).terms().begin()->first, -QLaurent::q());
      for (int k = 0; k < spec.d - 1; ++k) g = multiply(g, factor, limits.term_cap);
    }
  }
  return g;
}

StructureConstantTable::StructureConstantTable(KernelSpec spec, MPoly kernel)
    : spec_(spec), kernel_(std::move(kernel)) {
  const auto m = static_cast<std::size_t>(spec_.m);
  for (auto& [exp, c] : kernel_.sorted_terms()) {
    entries_.push_back(Entry{IntVector(exp.begin(), exp.begin() + static_cast<std::ptrdiff_t>(m)),
                             IntVector(exp.begin() + static_cast<std::ptrdiff_t>(m), exp.end()), c});
  }
}

QLaurent StructureConstantTable::coefficient(const IntVector& a, const IntVector& b) const {
  if (a.size() != static_cast<std::size_t>(spec_.m) || b.size() != static_cast<std::size_t>(spec_.n)) {
    throw ShapeError("structure constant key has wrong shape");
  }
  return kernel_.coefficient(concat(a, b));
}

StructureConstantTable structure_constants(const KernelSpec& spec, const Limits& limits) {
  if (spec.shift != 0) throw InvalidArgument("structure constants are defined for the unshifted kernel");
  return StructureConstantTable(spec, build_g(spec, limits));
}

std::shared_ptr<const StructureConstantTable> cached_structure_constants(int m, int n, int d, const Limits& limits) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const StructureConstantTable>> cache;
  const auto key = std::make_tuple(m, n, d);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto table = std::make_shared<const StructureConstantTable>(structure_constants(KernelSpec{m, n, d, 0}, limits));
  std::lock_guard lock(mutex);
  return cache.try_emplace(key, std::move(table)).first->second;
}

std::uint64_t kernel_size_bound(int m, int n, int d) {
  KernelSpec{m, n, d, 0}.validate();
  const int total = (d - 1) * m * n;
  // ways[k] = number of capped compositions of k over the slots seen so far.
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(total) + 1, 0);
  ways[0] = 1;
  auto add_slot = [&](int cap) {
    std::vector<std::uint64_t> next(ways.size(), 0);
    for (std::size_t k = 0; k < ways.size(); ++k) {
      if (ways[k] == 0) continue;
      for (int e = 0; e <= cap && k + static_cast<std::size_t>(e) < ways.size(); ++e) {
        auto& slot = next[k + static_cast<std::size_t>(e)];
        slot = slot > UINT64_MAX - ways[k] ? UINT64_MAX : slot + ways[k];
      }
    }
    ways = std::move(next);
  };
  for (int t = 0; t < m; ++t) add_slot((d - 1) * n);
  for (int s = 0; s < n; ++s) add_slot((d - 1) * m);
  return ways.back();
}

CheckReport verify_symmetry(const StructureConstantTable& table) {
  CheckReport report;
  report.name = "kernel symmetry m=" + std::to_string(table.spec().m) + " n=" + std::to_string(table.spec().n) +
                " d=" + std::to_string(table.spec().d);
  for (const auto& entry : table.entries()) {
    for (const auto& ta : distinct_permutations(sort_ascending(entry.a))) {
      for (const auto& sb : distinct_permutations(sort_ascending(entry.b))) {
        const bool ok = table.coefficient(ta, sb) == entry.coeff;
        report.record(ok, "c^{" + vector_to_string(ta) + "," + vector_to_string(sb) + "} differs from c^{" +
                              vector_to_string(entry.a) + "," + vector_to_string(entry.b) + "}");
      }
    }
  }
  return report;
}

namespace {

// Calls f on every vector of the given length with entries in [0, caps[i]]
// summing to total.
void for_each_composition(int total, const std::vector<int>& caps, const std::function<void(const IntVector&)>& f) {
  IntVector v(caps.size(), 0);
  std::vector<int> suffix_cap(caps.size() + 1, 0);
  for (std::size_t i = caps.size(); i-- > 0;) suffix_cap[i] = suffix_cap[i + 1] + caps[i];
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == caps.size()) {
      if (left == 0) f(v);
      return;
    }
    const int lo = std::max(0, left - suffix_cap[i + 1]);
    const int hi = std::min(caps[i], left);
    for (int x = lo; x <= hi; ++x) {
      v[i] = x;
      rec(i + 1, left - x);
    }
  };
  rec(0, total);
}

bool dominated(const IntVector& small, const IntVector& big, std::size_t offset) {
  for (std::size_t i = 0; i < small.size(); ++i) {
    if (small[i] > big[offset + i]) return false;
  }
  return true;
}

}  // namespace

CheckReport verify_coefficient_identity(int l, int m, int n, int d, const Limits& limits) {
  if (l < 1 || m < 1 || n < 1 || d < 1) throw InvalidArgument("coefficient identity needs l, m, n, d >= 1");
  CheckReport report;
  report.name = "coefficient identity l=" + std::to_string(l) + " m=" + std::to_string(m) +
                " n=" + std::to_string(n) + " d=" + std::to_string(d);
  const auto arity = static_cast<std::size_t>(l + m + n);

  // Polynomial identity.
  std::vector<std::size_t> prefix(static_cast<std::size_t>(l + m));
  for (std::size_t i = 0; i < prefix.size(); ++i) prefix[i] = i;
  const MPoly g_lm = build_g({l, m, d, 0}, limits).embed(prefix, arity);
  const MPoly g_lm_n = build_g({l + m, n, d, 0}, limits);
  const MPoly g_l_mn = build_g({l, m + n, d, 0}, limits);
  const MPoly g_mn_shifted = build_g({m, n, d, l}, limits);
  const MPoly lhs_poly = multiply(g_lm, g_lm_n, limits.term_cap);
  const MPoly rhs_poly = multiply(g_l_mn, g_mn_shifted, limits.term_cap);
  report.record(lhs_poly == rhs_poly, "g_{l,m} g_{l+m,n} != g_{l,m+n} g_{m,n}[l]");

  // Coefficient sums, evaluated key by key from the four tables.
  const auto t_lm = cached_structure_constants(l, m, d, limits);
  const auto t_lm_n = cached_structure_constants(l + m, n, d, limits);
  const auto t_l_mn = cached_structure_constants(l, m + n, d, limits);
  const auto t_mn = cached_structure_constants(m, n, d, limits);

  std::vector<int> caps;
  for (int i = 0; i < l; ++i) caps.push_back((d - 1) * (m + n));
  for (int i = 0; i < m; ++i) caps.push_back((d - 1) * (l + n));
  for (int i = 0; i < n; ++i) caps.push_back((d - 1) * (l + m));
  const int total = (d - 1) * (l * m + l * n + m * n);

  const auto ul = static_cast<std::size_t>(l);
  const auto um = static_cast<std::size_t>(m);
  std::size_t keys = 0;
  std::size_t nonzero = 0;
  ExponentVector scratch(arity);
  for_each_composition(total, caps, [&](const IntVector& abc) {
    ++keys;
    QLaurent lhs;
    for (const auto& e : t_lm->entries()) {
      if (!dominated(e.a, abc, 0) || !dominated(e.b, abc, ul)) continue;
      scratch = abc;
      for (std::size_t i = 0; i < ul; ++i) scratch[i] -= e.a[i];
      for (std::size_t j = 0; j < um; ++j) scratch[ul + j] -= e.b[j];
      const QLaurent other = t_lm_n->coefficient(scratch);
      if (!other.is_zero()) lhs += e.coeff * other;
    }
    QLaurent rhs;
    for (const auto& e : t_mn->entries()) {
      if (!dominated(e.a, abc, ul) || !dominated(e.b, abc, ul + um)) continue;
      scratch = abc;
      for (std::size_t j = 0; j < um; ++j) scratch[ul + j] -= e.a[j];
      for (std::size_t k = 0; k < e.b.size(); ++k) scratch[ul + um + k] -= e.b[k];
      const QLaurent other = t_l_mn->coefficient(scratch);
      if (!other.is_zero()) rhs += other * e.coeff;
    }
    if (!lhs.is_zero()) ++nonzero;
    const bool ok = lhs == rhs && lhs == lhs_poly.coefficient(abc);
    std::string what;
    if (!ok) {
      for (int x : abc) what += std::to_string(x) + " ";
      what = "sums differ at exponent (" + what + "): " + lhs.to_string() + " vs " + rhs.to_string();
    }
    report.record(ok, what);
  });
  report.notes.push_back(std::to_string(keys) + " exponent triples checked, " + std::to_string(nonzero) +
                         " with nonzero coefficient");
  return report;
}

}  // namespace coha
