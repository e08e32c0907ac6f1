#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace horrocks {

using Integer = mpz_class;
using Rational = mpq_class;

// binomial(n, k) with the convention that out-of-range arguments give 0.
// Exact for any n that fits in a long; intermediate products never overflow
// because they live in mpz.
Integer binomial(long n, long k);

// Arithmetic in Z/p for a runtime prime modulus p > 3.  Elements are stored
// as canonical representatives in [0, p).
class PrimeField {
public:
  explicit PrimeField(std::int64_t p);

  std::int64_t modulus() const { return p_; }

  std::int64_t reduce(std::int64_t a) const;
  // Reduces an arbitrary-precision rational; throws if the denominator is
  // divisible by p (the value has no image in Z/p).
  std::int64_t reduce(const Rational& a) const;

  std::int64_t add(std::int64_t a, std::int64_t b) const;
  std::int64_t sub(std::int64_t a, std::int64_t b) const;
  std::int64_t mul(std::int64_t a, std::int64_t b) const;
  std::int64_t neg(std::int64_t a) const;
  std::int64_t inv(std::int64_t a) const;

private:
  std::int64_t p_;
};

bool is_prime(std::int64_t n);

// Deterministic splitmix64 generator for property tests; identical streams on
// every platform, unlike std::mt19937 seeded via seed_seq.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform value in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

private:
  std::uint64_t state_;
};

}  // namespace horrocks
