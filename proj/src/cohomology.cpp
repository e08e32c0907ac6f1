#include "horrocks/cohomology.hpp"

#include <algorithm>

namespace horrocks {

long Spectrum::c2() const {
  long total = 0;
  for (int m : mult) total += m;
  return 2 * total;
}

std::vector<int> Spectrum::values() const {
  std::vector<int> vals;
  for (int k = top(); k >= 1; --k)
    vals.insert(vals.end(), static_cast<size_t>(s(k)), -k - 1);
  vals.insert(vals.end(), static_cast<size_t>(s(0)), -1);
  vals.insert(vals.end(), static_cast<size_t>(s(0)), 0);
  for (int k = 1; k <= top(); ++k)
    vals.insert(vals.end(), static_cast<size_t>(s(k)), k);
  return vals;
}

Integer h0_p3(long d) {
  return binomial(d + 3, 3);
}

Integer hom_dim(const std::vector<int>& src, const std::vector<int>& dst) {
  Integer total = 0;
  for (int s : src)
    for (int t : dst) total += h0_p3(t - s);
  return total;
}

Integer spectrum_h1(const Spectrum& spec, int l) {
  if (l > -1)
    throw std::domain_error("spectrum_h1: only valid for l <= -1");
  Integer total = 0;
  for (int k : spec.values()) {
    long t = static_cast<long>(k) + l + 2;
    if (t > 0) total += t;
  }
  return total;
}

Integer spectrum_h2(const Spectrum& spec, int l) {
  if (l < -2)
    throw std::domain_error("spectrum_h2: only valid for l >= -2");
  Integer total = 0;
  for (int k : spec.values()) {
    long t = -static_cast<long>(k) - l - 2;
    if (t > 0) total += t;
  }
  return total;
}

Integer euler_characteristic(long c2, int l) {
  // (2l+3) * ((l+1)(l+2) - 3*c2) / 6, always integral.
  Integer a = 2 * static_cast<long>(l) + 3;
  Integer b = static_cast<long>(l + 1) * (l + 2) - 3 * c2;
  Integer num = a * b;
  return num / 6;
}

Integer plane_curve_omega_dim(int d, int m) {
  return binomial(m + d - 1, 2) - binomial(m - 1, 2);
}

Integer plane_union_omega_dim(const CurveUnionSpec& cu) {
  if (cu.d1 < 1 || cu.d2 < 1)
    throw std::invalid_argument("plane_union_omega_dim: degrees must be >= 1");
  if (cu.r < 1)
    throw std::invalid_argument(
        "plane_union_omega_dim: component curves must meet");
  // Sections on the two components, glued along the r nodes; the gluing map
  // has an explicit rank depending only on (r, m).
  Integer sum = plane_curve_omega_dim(cu.d1, cu.m) +
                plane_curve_omega_dim(cu.d2, cu.m);
  long rank;
  if (cu.m > 0)
    rank = 0;
  else if (cu.m >= 2 - cu.r)
    rank = 1 - cu.m;
  else
    rank = cu.r;
  return sum + cu.r - rank;
}

namespace {
// h^0 of O(a,b) on a smooth quadric.
Integer quadric_h0(int a, int b) {
  if (a < 0 || b < 0) return 0;
  return Integer(a + 1) * (b + 1);
}
}  // namespace

Integer rational_quadric_omega_dim(int n, int m) {
  if (n < 2)
    throw std::invalid_argument("rational_quadric_omega_dim: need n >= 2");
  if (m > 2)
    throw std::invalid_argument("rational_quadric_omega_dim: need m <= 2");
  return quadric_h0(m - 1, m + n - 3) - quadric_h0(m - 2, m - 2);
}

}  // namespace horrocks
