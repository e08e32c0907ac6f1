#include "horrocks/linalg.hpp"

namespace horrocks {

long rank_rational(std::vector<std::vector<Rational>> m) {
  if (m.empty() || m[0].empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    Rational inv = 1 / m[r][c];
    for (size_t cc = c; cc < cols; ++cc) m[r][cc] *= inv;
    for (size_t rr = 0; rr < rows; ++rr) {
      if (rr == r || m[rr][c] == 0) continue;
      Rational f = m[rr][c];
      for (size_t cc = c; cc < cols; ++cc) m[rr][cc] -= f * m[r][cc];
    }
    ++r;
  }
  return static_cast<long>(r);
}

long rank_mod(const PrimeField& F, std::vector<std::vector<std::int64_t>> m) {
  if (m.empty() || m[0].empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  for (auto& row : m)
    for (auto& v : row) v = F.reduce(v);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    std::int64_t inv = F.inv(m[r][c]);
    for (size_t cc = c; cc < cols; ++cc) m[r][cc] = F.mul(m[r][cc], inv);
    for (size_t rr = 0; rr < rows; ++rr) {
      if (rr == r || m[rr][c] == 0) continue;
      std::int64_t f = m[rr][c];
      for (size_t cc = c; cc < cols; ++cc)
        m[rr][cc] = F.sub(m[rr][cc], F.mul(f, m[r][cc]));
    }
    ++r;
  }
  return static_cast<long>(r);
}

}  // namespace horrocks
