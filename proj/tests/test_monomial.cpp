#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "oracles/partitions.hpp"
#include "support/random.hpp"
#include "z2index/monomial.hpp"

using namespace z2index;

namespace {

Monomial w(int n, int i) { return Monomial::generator(n, i); }

}  // namespace

TEST_CASE("monomial products add exponents") {
  const int n = 3;
  const auto w1w2 = w(n, 1) * w(n, 2);
  CHECK(w1w2 == Monomial::from_exponents({1, 1, 0}));
  CHECK(w1w2.degree() == 3);

  const auto w2sq = w(n, 2) * w(n, 2);
  CHECK(w2sq == Monomial::from_exponents({0, 2, 0}));
  CHECK(w2sq.degree() == 4);

  for (const auto& x : enumerate_monomials(n, 4))
    CHECK(Monomial::unit(n) * x == x);
}

TEST_CASE("monomial product over mismatched n is a structural error") {
  CHECK_THROWS_AS(w(2, 1) * w(3, 1), StructuralError);
  CHECK_THROWS_AS(PolyZ2(w(2, 1)) * PolyZ2(w(3, 1)), StructuralError);
  CHECK_THROWS_AS(Monomial::generator(2, 3), StructuralError);
}

TEST_CASE("unit monomial and rendering") {
  const auto one = Monomial::unit(4);
  CHECK(one.is_unit());
  CHECK(one.degree() == 0);
  CHECK(one.to_string() == "1");
  CHECK(Monomial::generator(4, 0) == one);
  CHECK(Monomial::from_exponents({2, 0, 1}).to_string() == "w1^2*w3");
  CHECK(Monomial::from_exponents({1, 1}).to_string() == "w1*w2");
}

TEST_CASE("graded-lex order is a strict total order") {
  const int n = 3;
  std::vector<Monomial> all;
  for (int d = 0; d <= 6; ++d)
    for (const auto& m : enumerate_monomials(n, d))
      all.push_back(m);
  for (const auto& a : all) {
    CHECK_FALSE(a < a);
    for (const auto& b : all) {
      if (a == b)
        continue;
      CHECK((a < b) != (b < a));
      if (a.degree() < b.degree())
        CHECK(a < b);
    }
  }
  CHECK(Monomial::from_exponents({3, 0}) < Monomial::from_exponents({1, 1}));
}

TEST_CASE("poly products cancel mod 2") {
  const int n = 2;
  const PolyZ2 w1 = w(n, 1);
  const PolyZ2 w2 = w(n, 2);
  const PolyZ2 one = Monomial::unit(n);

  CHECK((w1 + w2) * (w1 + w2) == PolyZ2(n, {w(n, 1) * w(n, 1), w(n, 2) * w(n, 2)}));
  CHECK(((w1 + w2) * PolyZ2(n)).is_zero());

  // (1 + w1)(1 + w1 + w1^2) = 1 + w1^3
  const auto w1sq = w(n, 1) * w(n, 1);
  const auto lhs = (one + w1) * (one + w1 + PolyZ2(w1sq));
  CHECK(lhs == PolyZ2(n, {Monomial::unit(n), w1sq * w(n, 1)}));
  CHECK(lhs.to_string() == "1 + w1^3");
}

TEST_CASE("poly constructor cancels repeated terms") {
  const int n = 2;
  PolyZ2 p(n, {w(n, 1), w(n, 2), w(n, 1), w(n, 1)});
  CHECK(p == PolyZ2(n, {w(n, 1), w(n, 2)}));
  CHECK(PolyZ2(n, {w(n, 1), w(n, 1)}).is_zero());
  CHECK(p.homogeneous_part(2) == PolyZ2(w(n, 2)));
  CHECK_FALSE(p.is_homogeneous());
}

TEST_CASE("enumerate_monomials small cases") {
  const auto m = enumerate_monomials(2, 3);
  REQUIRE(m.size() == 2);
  CHECK(m[0] == Monomial::from_exponents({3, 0}));
  CHECK(m[1] == Monomial::from_exponents({1, 1}));
  for (int n = 1; n <= 6; ++n) {
    const auto units = enumerate_monomials(n, 0);
    REQUIRE(units.size() == 1);
    CHECK(units[0].is_unit());
  }
  // 186 partitions of 16 into parts <= 8, computed by brute-force enumeration.
  CHECK(enumerate_monomials(8, 16).size() == 186);
}

TEST_CASE("enumerate_monomials matches brute-force partition counts") {
  for (int n = 1; n <= 12; ++n) {
    for (int d = 0; d <= 18; ++d) {
      const auto m = enumerate_monomials(n, d);
      CAPTURE(n);
      CAPTURE(d);
      CHECK(static_cast<long long>(m.size()) == oracle::count_partitions_brute(n, d));
      CHECK(std::is_sorted(m.begin(), m.end()));
      CHECK(std::adjacent_find(m.begin(), m.end()) == m.end());
      for (const auto& x : m)
        CHECK(x.degree() == d);
    }
  }
}

TEST_CASE("binom_mod2 agrees with exact binomials") {
  CHECK(binom_mod2(6, 2));
  CHECK_FALSE(binom_mod2(4, 2));
  CHECK_FALSE(binom_mod2(2, 3));
  using boost::multiprecision::cpp_int;
  for (unsigned a = 0; a <= 64; ++a) {
    CHECK(binom_mod2(a, 0));
    cpp_int c = 1;  // C(a, 0)
    for (unsigned b = 0; b <= 64; ++b) {
      if (b > a)
        c = 0;
      CAPTURE(a);
      CAPTURE(b);
      CHECK(binom_mod2(a, b) == static_cast<bool>(c & 1));
      if (b < a)
        c = c * (a - b) / (b + 1);
    }
  }
}

TEST_CASE("poly ring axioms on random triples") {
  std::mt19937_64 rng(11);
  const int n = 4;
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = testsupport::random_poly(rng, n, 4, 4);
    const auto q = testsupport::random_poly(rng, n, 4, 4);
    const auto r = testsupport::random_poly(rng, n, 4, 4);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
  }
}

TEST_CASE("degree additivity for homogeneous factors") {
  std::mt19937_64 rng(12);
  const int n = 5;
  for (int trial = 0; trial < 200; ++trial) {
    const int a = static_cast<int>(rng() % 6);
    const int b = static_cast<int>(rng() % 6);
    const auto p = testsupport::random_homogeneous_poly(rng, n, a, 3);
    const auto q = testsupport::random_homogeneous_poly(rng, n, b, 3);
    for (const auto& m : (p * q).terms())
      CHECK(m.degree() == a + b);
  }
}
