#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coha/errors.hpp"
#include "coha/report.hpp"

namespace coha {

/// Grid and sampling parameters of a verification suite.
struct SuiteOptions {
  std::vector<int> ds = {2};
  int max_len = 2;
  int max_part = 2;
  int random_cases = 0;     // extra seeded samples, where the suite supports them
  int random_max_len = 3;
  int random_max_part = 2;
  std::uint64_t seed = 20211;
  Limits limits;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckReport> sections;
  std::vector<std::string> instances;  // one line per checked instance

  bool passed() const;
  const CheckReport* section(const std::string& name) const;
};

/// Associativity on every triple of the grid plus random triples, with the
/// q = 0 shift-and-sort rule and the grading checked on every basis product.
SuiteResult verify_assoc_suite(const SuiteOptions& options);
/// phi(mu * nu) = phi(mu) * phi(nu) on every pair of the grid.
SuiteResult verify_iso_suite(const SuiteOptions& options);
/// Signed and unsigned quasi-commutativity on every pair of the grid.
SuiteResult verify_quasi_suite(const SuiteOptions& options);
/// Graph-model product against the d = 2 product, pairs with |mu||nu| <= 12.
SuiteResult verify_graphs_suite(const SuiteOptions& options);
/// Coefficient identity for l, m, n in [1, max_len].
SuiteResult verify_lemma31_suite(const SuiteOptions& options);
/// M_lambda m_mu and m_lambda m_mu formulas for equal lengths 1..max_len.
SuiteResult verify_prop41_suite(const SuiteOptions& options);
/// Subset-sum identity for lengths 0..max_len.
SuiteResult verify_prop43_suite(const SuiteOptions& options);

/// Dispatches by name: assoc, iso, quasi, graphs, lemma31, prop41, prop43.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace coha
