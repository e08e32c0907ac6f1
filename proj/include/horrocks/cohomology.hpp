#pragma once

#include <vector>

#include "horrocks/numeric.hpp"

namespace horrocks {

// A spectrum is stored as its multiplicity vector (s(0), ..., s(K)): the
// associated integer multiset is {-k-1 and k, each s(k) times, for k >= 1}
// together with {-1, 0 each s(0) times}.  Every constructor-level invariant
// (all s(k) >= 1, tail rule) is the caller's business; validate_spectrum
// checks them explicitly.
struct Spectrum {
  std::vector<int> mult;

  int top() const { return static_cast<int>(mult.size()) - 1; }
  int s(int k) const {
    return (k >= 0 && k <= top()) ? mult[static_cast<size_t>(k)] : 0;
  }
  long c2() const;

  // The multiset, listed in non-descending order.
  std::vector<int> values() const;

  bool operator==(const Spectrum& o) const { return mult == o.mult; }
};

// h^0(P^3, O(d)): the number of degree-d monomials in four variables.
Integer h0_p3(long d);

// dim Hom(F, G) for direct sums of line bundles with the given twists.
Integer hom_dim(const std::vector<int>& src, const std::vector<int>& dst);

// h^1(E(l)) read off the spectrum; only valid for l <= -1.
Integer spectrum_h1(const Spectrum& spec, int l);

// h^2(E(l)) read off the spectrum; only valid for l >= -2.
Integer spectrum_h2(const Spectrum& spec, int l);

// chi(E(l)) for a rank-2 bundle with c1 = -1 and the given c2.
Integer euler_characteristic(long c2, int l);

// h^0(omega_C(m)) for a plane curve of degree d.
Integer plane_curve_omega_dim(int d, int m);

// Two plane curves of degrees d1, d2 in distinct planes meeting in r points.
struct CurveUnionSpec {
  int d1 = 0;
  int d2 = 0;
  int r = 0;
  int m = 0;
};

// h^0(omega_Y(m)) for the nodal union described by the argument.
Integer plane_union_omega_dim(const CurveUnionSpec& cu);

// h^0(omega_C(m)) for a curve of bidegree (1, n-1) on a smooth quadric;
// defined for n >= 2 and m <= 2.
Integer rational_quadric_omega_dim(int n, int m);

}  // namespace horrocks
