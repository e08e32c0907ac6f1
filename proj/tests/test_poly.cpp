#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "horrocks/poly.hpp"
#include "oracles.hpp"

using namespace horrocks;

namespace {

Monomial mono(int ex, int ey, int ez, int ew) {
  Monomial m;
  m.e = {ex, ey, ez, ew};
  return m;
}

const Poly X = Poly::variable(0);
const Poly Y = Poly::variable(1);
const Poly Z = Poly::variable(2);
const Poly W = Poly::variable(3);

}  // namespace

TEST_CASE("monomial divisibility, products and quotients") {
  Monomial xy = mono(1, 1, 0, 0);
  Monomial x2y3w = mono(2, 3, 0, 1);
  CHECK(xy.divides(x2y3w));
  CHECK_FALSE(x2y3w.divides(xy));
  CHECK((xy * xy) == mono(2, 2, 0, 0));
  CHECK(x2y3w.quotient(xy) == mono(1, 2, 0, 1));
  CHECK(Monomial::lcm(mono(2, 0, 1, 0), mono(1, 1, 1, 0)) == mono(2, 1, 1, 0));
  CHECK(mono(0, 0, 0, 0).degree() == 0);
  CHECK(x2y3w.degree() == 6);
}

TEST_CASE("graded reverse lexicographic order ranks degree two completely") {
  // x^2 > xy > y^2 > xz > yz > z^2 > xw > yw > zw > w^2
  std::vector<Monomial> expected = {
      mono(2, 0, 0, 0), mono(1, 1, 0, 0), mono(0, 2, 0, 0), mono(1, 0, 1, 0),
      mono(0, 1, 1, 0), mono(0, 0, 2, 0), mono(1, 0, 0, 1), mono(0, 1, 0, 1),
      mono(0, 0, 1, 1), mono(0, 0, 0, 2)};
  for (size_t i = 0; i < expected.size(); ++i)
    for (size_t j = 0; j < expected.size(); ++j) {
      int want = i < j ? 1 : (i == j ? 0 : -1);
      CHECK(compare_drl(expected[i], expected[j]) == want);
    }
}

TEST_CASE("degree dominates the monomial order") {
  CHECK(compare_drl(mono(0, 2, 0, 0), mono(1, 0, 0, 0)) == 1);   // y^2 > x
  CHECK(compare_drl(mono(0, 0, 0, 3), mono(2, 0, 0, 0)) == 1);   // w^3 > x^2
  CHECK(compare_drl(mono(1, 0, 0, 0), mono(0, 0, 0, 1)) == 1);   // x > w
}

TEST_CASE("polynomial identities expand correctly") {
  Poly sum = X + Y;
  Poly square = sum * sum;
  Poly expected = X * X + Poly::constant(2) * X * Y + Y * Y;
  CHECK(square == expected);
  CHECK((sum * (X - Y)) == X * X - Y * Y);
  CHECK((X - X).is_zero());
  CHECK((X + (-X)).is_zero());
  Poly zero;
  CHECK((X * zero).is_zero());
  CHECK((X * Poly::constant(1)) == X);
}

TEST_CASE("terms stay sorted, merged and zero-free") {
  std::vector<Term> ts = {{Rational(1), mono(0, 0, 1, 0)},
                          {Rational(2), mono(1, 0, 0, 0)},
                          {Rational(-2), mono(1, 0, 0, 0)},
                          {Rational(3), mono(0, 1, 0, 0)}};
  Poly p = Poly::from_terms(ts);
  REQUIRE(p.terms().size() == 2);
  CHECK(p.leading().m == mono(0, 1, 0, 0));
  CHECK(p.leading().c == 3);
  CHECK(p.terms()[1].m == mono(0, 0, 1, 0));
  for (size_t i = 0; i + 1 < p.terms().size(); ++i)
    CHECK(compare_drl(p.terms()[i].m, p.terms()[i + 1].m) > 0);
}

TEST_CASE("homogeneity detection") {
  CHECK((X * X + X * Y).homogeneous_of(2));
  CHECK_FALSE((X + X * X).homogeneous_of(2));
  CHECK_FALSE((X + X * X).homogeneous_of(1));
  Poly zero;
  CHECK(zero.homogeneous_of(0));
  CHECK(zero.homogeneous_of(5));
  CHECK((X * Y * Z * W).degree() == 4);
}

TEST_CASE("str prints signs, powers and separators") {
  CHECK(X.str() == "x");
  CHECK(Poly().str() == "0");
  CHECK((X * X - Y * W).str() == "x^2 - y*w");
  CHECK((-X).str() == "-x");
  CHECK((Poly::constant(Rational(1, 2)) * X).str() == "1/2*x");
}

TEST_CASE("ring axioms hold on random sparse inputs") {
  SplitMix64 rng(0x9e3779b97f4a7c15ull);
  for (int iter = 0; iter < 200; ++iter) {
    Poly a = oracle::random_poly(rng, 4, 6);
    Poly b = oracle::random_poly(rng, 4, 6);
    Poly c = oracle::random_poly(rng, 4, 6);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - b) + b == a);
    CHECK((a * (b - c)) == a * b - a * c);
  }
}

TEST_CASE("sparse products agree with the dense reference multiplier") {
  SplitMix64 rng(0x2545f4914f6cdd1dull);
  for (int iter = 0; iter < 200; ++iter) {
    Poly a = oracle::random_poly(rng, 5, 6);
    Poly b = oracle::random_poly(rng, 5, 6);
    auto dense = oracle::dense_mul(oracle::to_dense(a), oracle::to_dense(b));
    CHECK(oracle::dense_equal(dense, a * b));
  }
}

TEST_CASE("homogeneous products stay homogeneous of the degree sum") {
  SplitMix64 rng(0x853c49e6748fea9bull);
  for (int iter = 0; iter < 50; ++iter) {
    int da = 1 + static_cast<int>(rng.below(4));
    int db = 1 + static_cast<int>(rng.below(4));
    Poly a = oracle::random_homogeneous(rng, 4, da);
    Poly b = oracle::random_homogeneous(rng, 4, db);
    CHECK(a.homogeneous_of(da));
    Poly prod = a * b;
    if (!prod.is_zero()) CHECK(prod.homogeneous_of(da + db));
  }
}

TEST_CASE("prime field polynomials mirror rational arithmetic") {
  PrimeField F(32003);
  SplitMix64 rng(0xd1b54a32d192ed03ull);
  for (int iter = 0; iter < 100; ++iter) {
    Poly a = oracle::random_poly(rng, 4, 5);
    Poly b = oracle::random_poly(rng, 4, 5);
    FpPoly fa = fp_from(F, a);
    FpPoly fb = fp_from(F, b);
    CHECK(fp_equal(fp_mul(F, fa, fb), fp_from(F, a * b)));
    CHECK(fp_equal(fp_add(F, fa, fb), fp_from(F, a + b)));
    CHECK(fp_equal(fp_sub(F, fa, fb), fp_from(F, a - b)));
  }
}

TEST_CASE("fp_monic scales the leading coefficient to one") {
  PrimeField F(32003);
  FpPoly p = fp_from(F, Poly::constant(7) * X * X + Poly::constant(3) * Y);
  FpPoly monic = fp_monic(F, p);
  REQUIRE_FALSE(monic.is_zero());
  CHECK(monic.leading().c == 1);
  CHECK(fp_equal(fp_mul_term(F, monic, F.reduce(7), mono(0, 0, 0, 0)), p));
  CHECK(fp_monic(F, FpPoly{}).is_zero());
}

TEST_CASE("fp reduction respects the modulus") {
  PrimeField F(32003);
  Poly big = Poly::constant(Rational(32003 * 5 + 11)) * X;
  FpPoly r = fp_from(F, big);
  REQUIRE(r.terms.size() == 1);
  CHECK(r.terms[0].c == 11);
  Poly killed = Poly::constant(32003) * Y;
  CHECK(fp_from(F, killed).is_zero());
}

TEST_CASE("prime field arithmetic basics") {
  CHECK_THROWS_AS(PrimeField(10), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(2), std::invalid_argument);
  PrimeField F(65537);
  CHECK(F.mul(F.inv(12345), 12345) == 1);
  CHECK(F.add(65536, 1) == 0);
  CHECK(F.neg(0) == 0);
  CHECK_THROWS_AS(F.inv(0), std::domain_error);
  CHECK(F.reduce(Rational(1, 3)) == F.mul(1, F.inv(3)));
  CHECK_THROWS_AS(F.reduce(Rational(1, 65537)), std::domain_error);
  CHECK(is_prime(32003));
  CHECK(is_prime(65537));
  CHECK_FALSE(is_prime(32001));
  CHECK_FALSE(is_prime(1));
}
