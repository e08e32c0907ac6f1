#pragma once

#include <array>
#include <string>
#include <vector>

#include "horrocks/numeric.hpp"

namespace horrocks {

// Monomials in the four coordinates of P^3; index 0..3 = x, y, z, w.
struct Monomial {
  std::array<int, 4> e{0, 0, 0, 0};

  int degree() const { return e[0] + e[1] + e[2] + e[3]; }
  bool divides(const Monomial& o) const;
  Monomial operator*(const Monomial& o) const;
  // Componentwise difference; only meaningful when *this divides o is false
  // the other way round, i.e. call as o.quotient(divisor).
  Monomial quotient(const Monomial& d) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool operator==(const Monomial& o) const { return e == o.e; }
};

// Graded reverse lexicographic order with x > y > z > w.  Returns -1, 0, 1
// as a <, =, > b.  Ties in total degree go to the monomial whose last
// differing exponent (scanning w, z, y, x) is smaller.
int compare_drl(const Monomial& a, const Monomial& b);

struct DrlGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare_drl(a, b) > 0;
  }
};

struct Term {
  Rational c;
  Monomial m;
};

// Sparse polynomial with exact rational coefficients; terms are kept in
// strictly descending monomial order with no zero coefficients.
class Poly {
public:
  Poly() = default;
  static Poly constant(const Rational& c);
  static Poly variable(int i);
  static Poly term(const Rational& c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  int degree() const;
  // True when every term has total degree d; the zero polynomial is
  // homogeneous of every degree.
  bool homogeneous_of(int d) const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const;

  std::string str() const;

  // Builds from an arbitrary term list (sorts, merges, drops zeros).
  static Poly from_terms(std::vector<Term> ts);

private:
  std::vector<Term> terms_;
};

struct FpTerm {
  std::int64_t c;
  Monomial m;
};

// Same layout over Z/p; all arithmetic goes through the PrimeField context.
struct FpPoly {
  std::vector<FpTerm> terms;

  bool is_zero() const { return terms.empty(); }
  const FpTerm& leading() const { return terms.front(); }
};

FpPoly fp_from(const PrimeField& F, const Poly& p);
FpPoly fp_from_terms(const PrimeField& F, std::vector<FpTerm> ts);
FpPoly fp_add(const PrimeField& F, const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const PrimeField& F, const FpPoly& a, const FpPoly& b);
FpPoly fp_mul(const PrimeField& F, const FpPoly& a, const FpPoly& b);
FpPoly fp_mul_term(const PrimeField& F, const FpPoly& a, std::int64_t c,
                   const Monomial& m);
// Scales so the leading coefficient is 1.
FpPoly fp_monic(const PrimeField& F, const FpPoly& a);
bool fp_equal(const FpPoly& a, const FpPoly& b);

}  // namespace horrocks
