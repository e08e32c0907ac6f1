#pragma once

#include <vector>

#include "horrocks/numeric.hpp"

namespace horrocks {

// Rank by fraction-free-ish Gaussian elimination with exact rationals.
long rank_rational(std::vector<std::vector<Rational>> m);

long rank_mod(const PrimeField& F, std::vector<std::vector<std::int64_t>> m);

}  // namespace horrocks
