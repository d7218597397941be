#include "doctest.h"

#include <random>

#include "qep/laurent.hpp"

using namespace qep;

namespace {

Poly5 delta5() { return -xpow(1, 1) * xpow(5, -1) - xpow(1, -1) * xpow(5, 1); }
Poly5 w5() { return -(xpow(1, 2) * xpow(5, -1)); }

// Uniformly random small polynomial, for the ring-law spot checks.
Poly5 random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), expo(-2, 2), coef(-3, 3);
  Poly5 p;
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    ExponentVector<5> e;
    for (auto& x : e) x = expo(rng);
    p += Poly5::monomial(coef(rng), e);
  }
  return p;
}

}  // namespace

TEST_CASE("additive inverse and doubling") {
  Poly5 t = xpow(1, 1) * xpow(5, -1);
  CHECK((t + (-t)).is_zero());
  Poly5 d = delta5();
  Poly5 twice = d + d;
  CHECK(twice == Poly5::constant(2) * d);
  CHECK(twice.text() == "-2*x1^-1*x5^1 + -2*x1^1*x5^-1");
}

TEST_CASE("sum of the Thistlethwaite exponents a and b") {
  // a and b from the appendix table of the 15-crossing link's Phi values
  Poly5 a = -xpow(1, -3) * xpow(5, 3) - Poly5::constant(3) * xpow(1, -1) * xpow(5, 1) -
            Poly5::constant(3) * xpow(1, 1) * xpow(5, -1) - xpow(1, 3) * xpow(5, -3);
  Poly5 b = xpow(1, -7) * xpow(5, 7) - xpow(1, -3) * xpow(5, 3) -
            Poly5::constant(3) * xpow(1, -1) * xpow(5, 1) -
            Poly5::constant(4) * xpow(1, 1) * xpow(5, -1) - xpow(1, 3) * xpow(5, -3) -
            xpow(1, 5) * xpow(5, -5) + xpow(1, 13) * xpow(5, -13);
  Poly5 sum = a + b;
  CHECK(sum.terms().size() == 7);
  ExponentVector<5> e{-1, 0, 0, 0, 1};
  CHECK(sum.terms().at(e) == -6);
}

TEST_CASE("delta cubed matches the 3-unlink exponent") {
  Poly5 d = delta5();
  Poly5 expect = -xpow(1, -3) * xpow(5, 3) - Poly5::constant(3) * xpow(1, -1) * xpow(5, 1) -
                 Poly5::constant(3) * xpow(1, 1) * xpow(5, -1) - xpow(1, 3) * xpow(5, -3);
  CHECK(ring_pow(d, 3) == expect);
}

TEST_CASE("units and powers") {
  Poly5 u = xpow(1, 1) * xpow(5, -1);
  CHECK((u * u.inv_unit()).is_one());
  Poly5 w = w5();
  CHECK((w * w.inv_unit()).is_one());
  CHECK(w.inv_unit() == -(xpow(1, -2) * xpow(5, 1)));
  CHECK(ring_pow(delta5(), 0).is_one());
  CHECK(ring_pow(xpow(2, 1), 3) == xpow(2, 3));
  CHECK_THROWS_AS(delta5().inv_unit(), std::domain_error);
}

TEST_CASE("monomial degrees") {
  Poly5 m = xpow(1, -3) * xpow(2, 2) * xpow(3, 2) * xpow(5, 1);
  CHECK(m.degree_in(1) == 2);
  CHECK(Poly5::one().degree_in(4) == 0);
  CHECK(w5().total_degree() == 1);
  CHECK_THROWS_AS(delta5().degree_in(0), std::domain_error);
}

TEST_CASE("hom specializations") {
  // x1..x4 -> x, x5 -> x^-1 sends delta to -x^2 - x^-2
  std::array<Poly1, 5> images{Poly1::monomial(1, 0, 1), Poly1::monomial(1, 0, 1),
                              Poly1::monomial(1, 0, 1), Poly1::monomial(1, 0, 1),
                              Poly1::monomial(1, 0, -1)};
  RingHom<5, Poly1> f(images);
  Poly1 got = f.apply(delta5(), Poly1::one());
  Poly1 expect = -Poly1::monomial(1, 0, 2) - Poly1::monomial(1, 0, -2);
  CHECK(got == expect);

  auto aug = augmentation_hom<5>();
  CHECK(aug.apply(delta5(), Poly5::one()) == Poly5::constant(-2));

  auto id = identity_hom<5>();
  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) {
    Poly5 p = random_poly(rng);
    CHECK(id.apply(p, Poly5::one()) == p);
  }
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937 rng(42);
  for (int t = 0; t < 60; ++t) {
    Poly5 p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
  }
}

TEST_CASE("hom is multiplicative on random inputs") {
  std::array<Poly1, 5> images{Poly1::monomial(1, 0, 2), Poly1::monomial(-1, 0, 1),
                              Poly1::monomial(1, 0, -1), Poly1::monomial(1, 0, 0),
                              Poly1::monomial(-1, 0, -2)};
  RingHom<5, Poly1> f(images);
  std::mt19937 rng(3);
  for (int t = 0; t < 40; ++t) {
    Poly5 p = random_poly(rng), q = random_poly(rng);
    CHECK(f.apply(p * q, Poly1::one()) ==
          f.apply(p, Poly1::one()) * f.apply(q, Poly1::one()));
  }
  CHECK(f.apply(Poly5::one(), Poly1::one()).is_one());
}

TEST_CASE("prime field arithmetic") {
  Fp a(4, 7), b(5, 7);
  CHECK((a * b).value() == 6);
  CHECK((a + b).value() == 2);
  CHECK((a.inv_unit() * a).is_one());
  CHECK((-a).value() == 3);
  CHECK_THROWS_AS(Fp(0, 5).inv_unit(), std::domain_error);
  for (long v = 1; v < 11; ++v) CHECK((Fp(v, 11) * Fp(v, 11).inv_unit()).is_one());
}

TEST_CASE("canonical text round-trips equality") {
  std::mt19937 rng(11);
  for (int t = 0; t < 30; ++t) {
    Poly5 p = random_poly(rng), q = random_poly(rng);
    if (p == q) CHECK(p.text() == q.text());
    if (p.text() == q.text()) CHECK(p == q);
  }
  CHECK(Poly5::zero().text() == "0");
  CHECK(Poly5::constant(-7).text() == "-7");
}
