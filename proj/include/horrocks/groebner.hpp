#pragma once

#include <vector>

#include "horrocks/poly.hpp"

namespace horrocks {

// Fully tail-reduced remainder of f modulo the (not necessarily complete)
// basis, dividing by the first applicable element each step.
FpPoly normal_form(const PrimeField& F, const FpPoly& f,
                   const std::vector<FpPoly>& basis);

FpPoly s_poly(const PrimeField& F, const FpPoly& f, const FpPoly& g);

// Reduced Groebner basis (degrevlex, x > y > z > w): monic generators, no
// leading monomial divides another, tails reduced.  Deterministic for a
// given input order.
std::vector<FpPoly> buchberger(const PrimeField& F, std::vector<FpPoly> gens);

// True when the basis proves the projective vanishing locus empty: a
// constant lies in the ideal, or each variable contributes a pure power
// among the leading monomials.
bool certifies_empty(const std::vector<FpPoly>& gb);

// All k x k minors of a polynomial matrix (exact coefficients).
std::vector<Poly> k_minors(const std::vector<std::vector<Poly>>& mat, int k);

// True when the locus where mat drops below rank k is provably empty,
// certified by a Groebner basis over Z/fieldChar.  Emptiness mod p implies
// emptiness in characteristic zero; the converse can fail, so a false return
// means "not certified at this prime", never "certainly nonempty".
bool degeneracy_locus_empty(const std::vector<std::vector<Poly>>& mat, int k,
                            std::int64_t field_char);

}  // namespace horrocks
