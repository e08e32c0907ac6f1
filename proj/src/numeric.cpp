#include "horrocks/numeric.hpp"

namespace horrocks {

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::int64_t p) : p_(p) {
  if (p <= 3 || !is_prime(p))
    throw std::invalid_argument("PrimeField: modulus must be a prime > 3");
}

std::int64_t PrimeField::reduce(std::int64_t a) const {
  std::int64_t r = a % p_;
  return r < 0 ? r + p_ : r;
}

std::int64_t PrimeField::reduce(const Rational& a) const {
  Integer num = a.get_num();
  Integer den = a.get_den();
  Integer p(static_cast<long>(p_));
  Integer dmod = den % p;
  if (dmod == 0)
    throw std::domain_error("PrimeField: denominator vanishes mod p");
  Integer nmod = num % p;
  std::int64_t n = reduce(nmod.get_si());
  std::int64_t d = reduce(dmod.get_si());
  return mul(n, inv(d));
}

std::int64_t PrimeField::add(std::int64_t a, std::int64_t b) const {
  std::int64_t r = a + b;
  return r >= p_ ? r - p_ : r;
}

std::int64_t PrimeField::sub(std::int64_t a, std::int64_t b) const {
  std::int64_t r = a - b;
  return r < 0 ? r + p_ : r;
}

std::int64_t PrimeField::mul(std::int64_t a, std::int64_t b) const {
  // p < 2^31 so the product fits in int64.
  return (a * b) % p_;
}

std::int64_t PrimeField::neg(std::int64_t a) const {
  return a == 0 ? 0 : p_ - a;
}

std::int64_t PrimeField::inv(std::int64_t a) const {
  if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
  // Extended Euclid.
  std::int64_t t = 0, newt = 1, r = p_, newr = a;
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  return t < 0 ? t + p_ : t;
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  return next() % bound;
}

}  // namespace horrocks
