#include <doctest.h>

#include <functional>
#include <map>

#include "coha/errors.hpp"
#include "coha/kernel.hpp"

using namespace coha;

namespace {

std::uint64_t choose(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// Oracle: c^{a,b} as a sum over matrices J (rows s, columns t) with entries in
// [0, d-1]; J[s][t] is the power of (-q x_t) taken from (x_s - q x_t)^(d-1).
std::map<std::pair<IntVector, IntVector>, QLaurent> matrix_oracle(int m, int n, int d) {
  const int e = d - 1;
  std::map<std::pair<IntVector, IntVector>, QLaurent> out;
  std::vector<int> cells(static_cast<std::size_t>(m * n), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == cells.size()) {
      IntVector a(static_cast<std::size_t>(m), 0), b(static_cast<std::size_t>(n), 0);
      Rational weight(1);
      int power = 0;
      for (int s = 0; s < n; ++s) {
        for (int t = 0; t < m; ++t) {
          const int j = cells[static_cast<std::size_t>(s * m + t)];
          a[static_cast<std::size_t>(t)] += j;
          b[static_cast<std::size_t>(s)] += e - j;
          power += j;
          weight *= Rational(static_cast<std::int64_t>(choose(e, j)));
        }
      }
      out[{a, b}] += QLaurent::monomial(power % 2 == 0 ? weight : -weight, power);
      return;
    }
    for (int j = 0; j <= e; ++j) {
      cells[i] = j;
      rec(i + 1);
    }
  };
  rec(0);
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace

TEST_SUITE("kernel") {
  TEST_CASE("build_g examples") {
    const MPoly g = build_g({2, 1, 4, 0});
    CHECK(g.arity() == 3);
    CHECK(g.size() == 16);
    CHECK(g.coefficient({0, 0, 6}) == QLaurent(1));
    CHECK(g.coefficient({3, 1, 2}) == QLaurent::monomial(3, 4));
    CHECK(g.coefficient({3, 3, 0}) == QLaurent::monomial(1, 6));
    const MPoly one = build_g({1, 1, 1, 0});
    CHECK(one == MPoly::constant(2, 1));
    CHECK(build_g({3, 2, 1, 0}) == MPoly::constant(5, 1));
  }

  TEST_CASE("build_g equals the product of its factors") {
    const MPoly x3 = MPoly::variable(3, 2);
    const MPoly f1 = x3 - MPoly::monomial(3, {1, 0, 0}, QLaurent::q());
    const MPoly f2 = x3 - MPoly::monomial(3, {0, 1, 0}, QLaurent::q());
    const MPoly expected = f1 * f1 * f1 * f2 * f2 * f2;
    CHECK(build_g({2, 1, 4, 0}) == expected);
  }

  TEST_CASE("kernel spec validation") {
    CHECK_THROWS_AS(build_g({0, 1, 2, 0}), InvalidArgument);
    CHECK_THROWS_AS(build_g({1, 0, 2, 0}), InvalidArgument);
    CHECK_THROWS_AS(build_g({1, 1, 0, 0}), InvalidArgument);
    CHECK_THROWS_AS(build_g({1, 1, 2, -1}), InvalidArgument);
    CHECK_THROWS_AS(structure_constants({1, 1, 2, 1}), InvalidArgument);
    CHECK_THROWS_AS(build_g({4, 4, 6, 0}, Limits{1000, 1, 1}), ResourceLimitError);
  }

  TEST_CASE("shifted kernel leaves the first variables out") {
    const MPoly g = build_g({1, 1, 3, 2});
    CHECK(g.arity() == 4);
    for (const auto& [e, c] : g.terms()) {
      CHECK(e[0] == 0);
      CHECK(e[1] == 0);
    }
    CHECK(g.coefficient({0, 0, 1, 1}) == QLaurent::monomial(-2, 1));
  }

  TEST_CASE("structure constants examples") {
    const auto table = structure_constants({2, 1, 4, 0});
    CHECK(table.coefficient({0, 0}, {6}) == QLaurent(1));
    CHECK(table.coefficient({1, 0}, {5}) == QLaurent::monomial(-3, 1));
    CHECK(table.coefficient({0, 1}, {5}) == QLaurent::monomial(-3, 1));
    CHECK(table.coefficient({3, 3}, {0}) == QLaurent::monomial(1, 6));
    const auto single = structure_constants({1, 1, 2, 0});
    REQUIRE(single.size() == 2);
    CHECK(single.entries()[0].a == IntVector{0});
    CHECK(single.entries()[0].b == IntVector{1});
    CHECK(single.entries()[0].coeff == QLaurent(1));
    CHECK(single.entries()[1].coeff == QLaurent::monomial(-1, 1));
  }

  TEST_CASE("structure constants match the matrix oracle") {
    for (int d = 1; d <= 3; ++d) {
      for (int m = 1; m <= 2; ++m) {
        for (int n = 1; n <= 3; ++n) {
          CAPTURE(m);
          CAPTURE(n);
          CAPTURE(d);
          const auto table = structure_constants({m, n, d, 0});
          const auto oracle = matrix_oracle(m, n, d);
          CHECK(table.size() == oracle.size());
          for (const auto& [key, c] : oracle) CHECK(table.coefficient(key.first, key.second) == c);
          CHECK(table.size() <= kernel_size_bound(m, n, d));
        }
      }
    }
  }

  TEST_CASE("kernel invariants") {
    for (int d = 1; d <= 4; ++d) {
      for (int m = 1; m <= 2; ++m) {
        for (int n = 1; n <= 2; ++n) {
          const KernelSpec spec{m, n, d, 0};
          const MPoly g = build_g(spec);
          for (const auto& [e, c] : g.terms()) {
            int total = 0;
            for (int x : e) total += x;
            CHECK(total == spec.degree());
            CHECK(c.is_polynomial());
            CHECK(c.high_degree() <= spec.degree());
          }
          IntVector top(static_cast<std::size_t>(m), 0);
          for (int s = 0; s < n; ++s) top.push_back((d - 1) * m);
          CHECK(g.coefficient(top) == QLaurent(1));
          // q = 0 leaves only the top monomial; q = 1 and x = 1 kill every factor.
          const MPoly at0 = g.map_coefficients([](const QLaurent& c) { return QLaurent(c.eval(0)); });
          CHECK(at0.size() == 1);
          Rational at_one(0);
          for (const auto& [e, c] : g.terms()) at_one += c.eval(1);
          CHECK(at_one == Rational(d >= 2 ? 0 : 1));
        }
      }
    }
  }

  TEST_CASE("verify_symmetry") {
    CHECK(verify_symmetry(structure_constants({2, 1, 4, 0})).passed);
    CHECK(verify_symmetry(structure_constants({1, 1, 3, 0})).passed);
    CHECK(verify_symmetry(structure_constants({2, 2, 2, 0})).passed);
    CHECK(verify_symmetry(structure_constants({3, 2, 3, 0})).passed);
  }

  TEST_CASE("verify_coefficient_identity") {
    const auto r = verify_coefficient_identity(1, 1, 1, 2);
    CHECK(r.passed);
    CHECK(r.instances > 0);
    CHECK(verify_coefficient_identity(1, 1, 1, 1).passed);
    CHECK(verify_coefficient_identity(1, 2, 1, 2).passed);
    CHECK(verify_coefficient_identity(2, 1, 2, 3).passed);
    CHECK_THROWS_AS(verify_coefficient_identity(0, 1, 1, 2), InvalidArgument);
  }

  TEST_CASE("cached tables are shared") {
    const auto a = cached_structure_constants(2, 2, 3);
    const auto b = cached_structure_constants(2, 2, 3);
    CHECK(a.get() == b.get());
  }

  TEST_CASE("kernel_size_bound") {
    CHECK(kernel_size_bound(1, 1, 2) == 2);
    CHECK(kernel_size_bound(1, 1, 1) == 1);
    CHECK(kernel_size_bound(2, 1, 4) == 16);
  }
}
