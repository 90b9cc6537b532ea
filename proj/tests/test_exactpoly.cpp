#include <doctest.h>

#include <map>
#include <random>

#include "coha/errors.hpp"
#include "coha/mpoly.hpp"
#include "coha/qlaurent.hpp"
#include "coha/rational.hpp"

using namespace coha;

namespace {

QLaurent poly(int offset, std::vector<Rational> c) { return QLaurent(offset, std::move(c)); }

QLaurent random_laurent(std::mt19937_64& rng) {
  std::vector<Rational> c;
  const int len = static_cast<int>(rng() % 5);
  for (int i = 0; i < len; ++i) {
    const auto num = static_cast<std::int64_t>(rng() % 19) - 9;
    const auto den = static_cast<std::int64_t>(rng() % 4) + 1;
    c.emplace_back(num, den);
  }
  return QLaurent(static_cast<int>(rng() % 7) - 3, c);
}

// Independent oracle: schoolbook product over ordered maps, no hashing.
std::map<ExponentVector, QLaurent> naive_product(const MPoly& a, const MPoly& b) {
  std::map<ExponentVector, QLaurent> out;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      ExponentVector e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace

TEST_SUITE("exactpoly") {
  TEST_CASE("rational canonical form") {
    CHECK(Rational(6, -4).to_string() == "-3/2");
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(0, 5).to_string() == "0");
    CHECK(Rational(4, 2).is_integer());
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
  }

  TEST_CASE("rational parse") {
    CHECK(Rational::parse("-7/21") == Rational(-1, 3));
    CHECK(Rational::parse("+5") == Rational(5));
    CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("3/0"), ParseError);
  }

  TEST_CASE("rational promotes past 64 bits and demotes back") {
    Rational big(1);
    for (int i = 0; i < 5; ++i) big *= Rational(1'000'000'007);
    CHECK(big.to_string() == "1000000035000000490000003430000012005000016807");
    Rational back = big;
    for (int i = 0; i < 5; ++i) back /= Rational(1'000'000'007);
    CHECK(back == Rational(1));
    CHECK(back.hash() == Rational(1).hash());
    CHECK(Rational(std::numeric_limits<std::int64_t>::min()).to_string() == "-9223372036854775808");
    CHECK(-Rational(std::numeric_limits<std::int64_t>::min()) ==
          Rational::parse("9223372036854775808"));
    CHECK(Rational::parse("123456789012345678901234567890/2") > Rational(1));
  }

  TEST_CASE("qlaurent_add examples") {
    CHECK((poly(0, {1, -1}) + poly(0, {-1, 1})).is_zero());
    CHECK((poly(0, {1, -1}) + poly(0, {-1, 1})).offset() == 0);
    CHECK(QLaurent::monomial(1, 2) + QLaurent::monomial(3, 2) == QLaurent::monomial(4, 2));
    CHECK(poly(-1, {1, 1}) + QLaurent::q() == poly(-1, {1, 1, 1}));
  }

  TEST_CASE("qlaurent_mul examples") {
    CHECK(poly(0, {1, -1}) * poly(0, {1, 1}) == poly(0, {1, 0, -1}));
    CHECK(QLaurent::monomial(1, -1) * QLaurent::q() == QLaurent(1));
    CHECK(QLaurent::neg_q_power(3) * QLaurent::neg_q_power(3) == QLaurent::monomial(1, 6));
    CHECK(QLaurent::neg_q_power(3) == QLaurent::monomial(-1, 3));
  }

  TEST_CASE("qlaurent_bar examples") {
    CHECK(poly(0, {1, -1}).bar() == poly(-1, {-1, 1}));
    const QLaurent f = poly(2, {3, -1});
    CHECK(f.bar().bar() == f);
    CHECK(QLaurent(5).bar() == QLaurent(5));
    CHECK(QLaurent().bar().is_zero());
  }

  TEST_CASE("qlaurent_eval examples") {
    CHECK(poly(0, {1, -1}).eval(0) == Rational(1));
    CHECK(poly(2, {9, 0, 3, 0, 1}).eval(1) == Rational(13));
    CHECK_THROWS_AS(QLaurent::monomial(1, -1).eval(0), DomainError);
    CHECK(QLaurent::monomial(1, -2).eval(Rational(1, 2)) == Rational(4));
    CHECK(QLaurent::monomial(1, 2).eval(0) == Rational(0));
  }

  TEST_CASE("qlaurent display") {
    CHECK(poly(2, {9, 0, 3, 0, 1}).to_string() == "q^6 + 3q^4 + 9q^2");
    CHECK(QLaurent::monomial(-3, -1).to_string() == "-3q^-1");
    CHECK(poly(0, {Rational(1, 2), -1}).to_string() == "-q + 1/2");
    CHECK(QLaurent().to_string() == "0");
  }

  TEST_CASE("qlaurent ring axioms on random triples") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
      const QLaurent a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a + b == b + a);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - a).is_zero());
      CHECK((a * b).bar() == a.bar() * b.bar());
      CHECK((a + b).bar() == a.bar() + b.bar());
      CHECK(a.bar().bar() == a);
      const Rational v(static_cast<std::int64_t>(rng() % 7) - 3, static_cast<std::int64_t>(rng() % 3) + 1);
      if (!v.is_zero()) CHECK((a * b).eval(v) == a.eval(v) * b.eval(v));
      QLaurent acc = a;
      acc.add_scaled(b, Rational(-2, 3), 2);
      CHECK(acc == a + QLaurent::monomial(Rational(-2, 3), 2) * b);
    }
  }

  TEST_CASE("mpoly_mul examples") {
    const MPoly x1 = MPoly::variable(3, 0), x2 = MPoly::variable(3, 1), x3 = MPoly::variable(3, 2);
    CHECK(x1 * x2 == MPoly::monomial(3, {1, 1, 0}, 1));
    MPoly f1 = x3, f2 = x3;
    f1 -= MPoly::monomial(3, {1, 0, 0}, QLaurent::q());
    f2 -= MPoly::monomial(3, {0, 1, 0}, QLaurent::q());
    const MPoly prod = f1 * f2;
    CHECK(prod.size() == 4);
    CHECK(prod.coefficient({0, 0, 2}) == QLaurent(1));
    CHECK(prod.coefficient({0, 1, 1}) == QLaurent::monomial(-1, 1));
    CHECK(prod.coefficient({1, 0, 1}) == QLaurent::monomial(-1, 1));
    CHECK(prod.coefficient({1, 1, 0}) == QLaurent::monomial(1, 2));
    CHECK(prod.coefficient({2, 0, 0}).is_zero());
    CHECK(prod * MPoly::constant(3, 1) == prod);
  }

  TEST_CASE("mpoly errors") {
    CHECK_THROWS_AS(MPoly::variable(2, 0) * MPoly::variable(3, 0), ShapeError);
    CHECK_THROWS_AS(MPoly::variable(2, 0).coefficient({1}), ShapeError);
    MPoly p(2);
    CHECK_THROWS_AS(p.add_term({-1, 0}, 1), ShapeError);
    MPoly big(4);
    for (int i = 0; i < 4; ++i) big += MPoly::variable(4, static_cast<std::size_t>(i));
    MPoly power = big;
    CHECK_THROWS_AS(
        [&] {
          for (int i = 0; i < 6; ++i) power = multiply(power, big, 50);
        }(),
        ResourceLimitError);
  }

  TEST_CASE("mpoly_mul agrees with naive expansion on random sparse inputs") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 200; ++round) {
      const std::size_t arity = 1 + rng() % 4;
      auto random_poly = [&] {
        MPoly p(arity);
        const int terms = static_cast<int>(rng() % 9);
        for (int t = 0; t < terms; ++t) {
          ExponentVector e(arity);
          for (auto& x : e) x = static_cast<int>(rng() % 3);
          p.add_term(e, random_laurent(rng));
        }
        return p;
      };
      const MPoly a = random_poly(), b = random_poly();
      const MPoly prod = a * b;
      const auto oracle = naive_product(a, b);
      CHECK(prod.size() == oracle.size());
      for (const auto& [e, c] : oracle) CHECK(prod.coefficient(e) == c);
      for (const auto& [e, c] : prod.terms()) CHECK_FALSE(c.is_zero());
    }
  }

  TEST_CASE("mpoly sorted terms and embedding") {
    MPoly p(2);
    p.add_term({1, 0}, 2);
    p.add_term({0, 3}, 1);
    p.add_term({0, 1}, -1);
    const auto sorted = p.sorted_terms();
    REQUIRE(sorted.size() == 3);
    CHECK(sorted[0].first == ExponentVector{0, 1});
    CHECK(sorted[2].first == ExponentVector{1, 0});
    const std::vector<std::size_t> target{2, 0};
    const MPoly e = p.embed(target, 3);
    CHECK(e.coefficient({0, 0, 1}) == QLaurent(2));
    CHECK(e.coefficient({3, 0, 0}) == QLaurent(1));
  }
}
