#include "horrocks/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace horrocks {

FpPoly normal_form(const PrimeField& F, const FpPoly& f,
                   const std::vector<FpPoly>& basis) {
  FpPoly rem;
  FpPoly cur = f;
  while (!cur.is_zero()) {
    bool reduced = false;
    for (const FpPoly& g : basis) {
      if (g.is_zero()) continue;
      if (g.leading().m.divides(cur.leading().m)) {
        Monomial q = cur.leading().m.quotient(g.leading().m);
        std::int64_t c = F.mul(cur.leading().c, F.inv(g.leading().c));
        cur = fp_sub(F, cur, fp_mul_term(F, g, c, q));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.terms.push_back(cur.leading());
      cur.terms.erase(cur.terms.begin());
    }
  }
  return rem;
}

FpPoly s_poly(const PrimeField& F, const FpPoly& f, const FpPoly& g) {
  Monomial l = Monomial::lcm(f.leading().m, g.leading().m);
  FpPoly a = fp_mul_term(F, f, F.inv(f.leading().c), l.quotient(f.leading().m));
  FpPoly b = fp_mul_term(F, g, F.inv(g.leading().c), l.quotient(g.leading().m));
  return fp_sub(F, a, b);
}

namespace {

struct PairKey {
  int deg;
  Monomial lcm;
  size_t i, j;
};

struct PairLess {
  bool operator()(const PairKey& a, const PairKey& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    int cmp = compare_drl(a.lcm, b.lcm);
    if (cmp != 0) return cmp < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace

std::vector<FpPoly> buchberger(const PrimeField& F, std::vector<FpPoly> gens) {
  std::vector<FpPoly> G;
  for (FpPoly& g : gens)
    if (!g.is_zero()) G.push_back(fp_monic(F, g));

  std::set<PairKey, PairLess> queue;
  std::set<std::pair<size_t, size_t>> pending;
  auto push_pair = [&](size_t i, size_t j) {
    Monomial l = Monomial::lcm(G[i].leading().m, G[j].leading().m);
    queue.insert({l.degree(), l, i, j});
    pending.insert({i, j});
  };
  for (size_t j = 1; j < G.size(); ++j)
    for (size_t i = 0; i < j; ++i) push_pair(i, j);

  while (!queue.empty()) {
    PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pk.i, pk.j});

    const Monomial& li = G[pk.i].leading().m;
    const Monomial& lj = G[pk.j].leading().m;
    // Coprime leading monomials: the S-polynomial reduces to zero.
    if (Monomial::lcm(li, lj).degree() == li.degree() + lj.degree()) continue;
    // Chain criterion: a third element dividing the lcm whose pairs with both
    // ends are already settled makes this pair redundant.
    bool redundant = false;
    for (size_t k = 0; k < G.size() && !redundant; ++k) {
      if (k == pk.i || k == pk.j) continue;
      if (!G[k].leading().m.divides(pk.lcm)) continue;
      auto key = [&](size_t a, size_t b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
      };
      if (!pending.count(key(pk.i, k)) && !pending.count(key(pk.j, k)))
        redundant = true;
    }
    if (redundant) continue;

    FpPoly r = normal_form(F, s_poly(F, G[pk.i], G[pk.j]), G);
    if (r.is_zero()) continue;
    G.push_back(fp_monic(F, r));
    size_t n = G.size() - 1;
    for (size_t i = 0; i < n; ++i) push_pair(i, n);
  }

  // Minimalize: walk leading monomials in ascending order and drop anything
  // divisible by an already-kept one.  A divisor never exceeds its multiple
  // in the monomial order, so one pass suffices.
  std::vector<size_t> order(G.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    int cmp = compare_drl(G[a].leading().m, G[b].leading().m);
    if (cmp != 0) return cmp < 0;
    return a < b;
  });
  std::vector<FpPoly> minimal;
  for (size_t idx : order) {
    bool divisible = false;
    for (const FpPoly& m : minimal)
      if (m.leading().m.divides(G[idx].leading().m)) {
        divisible = true;
        break;
      }
    if (!divisible) minimal.push_back(G[idx]);
  }

  // Tail-reduce each element against the others for the reduced basis.
  std::vector<FpPoly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<FpPoly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    FpPoly r = normal_form(F, minimal[i], others);
    if (!r.is_zero()) reduced.push_back(fp_monic(F, r));
  }

  std::sort(reduced.begin(), reduced.end(), [](const FpPoly& a, const FpPoly& b) {
    return compare_drl(a.leading().m, b.leading().m) > 0;
  });
  return reduced;
}

bool certifies_empty(const std::vector<FpPoly>& gb) {
  for (const FpPoly& g : gb)
    if (!g.is_zero() && g.leading().m.degree() == 0) return true;
  for (int v = 0; v < 4; ++v) {
    bool found = false;
    for (const FpPoly& g : gb) {
      if (g.is_zero()) continue;
      const Monomial& m = g.leading().m;
      bool pure = m.e[static_cast<size_t>(v)] > 0;
      for (int u = 0; u < 4 && pure; ++u)
        if (u != v && m.e[static_cast<size_t>(u)] != 0) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

namespace {

Poly poly_det(const std::vector<std::vector<Poly>>& m) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  Poly det;
  for (size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Poly>> sub;
    for (size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      sub.push_back(std::move(row));
    }
    Poly contrib = m[0][c] * poly_det(sub);
    det = (c % 2 == 0) ? det + contrib : det - contrib;
  }
  return det;
}

void subsets_rec(size_t n, size_t k, size_t start, std::vector<size_t>& cur,
                 std::vector<std::vector<size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets_rec(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<size_t>> subsets(size_t n, size_t k) {
  std::vector<std::vector<size_t>> out;
  std::vector<size_t> cur;
  subsets_rec(n, k, 0, cur, out);
  return out;
}

}  // namespace

std::vector<Poly> k_minors(const std::vector<std::vector<Poly>>& mat, int k) {
  std::vector<Poly> minors;
  if (mat.empty() || k <= 0) return minors;
  size_t rows = mat.size();
  size_t cols = mat[0].size();
  size_t kk = static_cast<size_t>(k);
  if (kk > rows || kk > cols) return minors;
  for (const std::vector<size_t>& rs : subsets(rows, kk)) {
    for (const std::vector<size_t>& cs : subsets(cols, kk)) {
      std::vector<std::vector<Poly>> sub;
      for (size_t r : rs) {
        std::vector<Poly> row;
        for (size_t c : cs) row.push_back(mat[r][c]);
        sub.push_back(std::move(row));
      }
      minors.push_back(poly_det(sub));
    }
  }
  return minors;
}

bool degeneracy_locus_empty(const std::vector<std::vector<Poly>>& mat, int k,
                            std::int64_t field_char) {
  PrimeField F(field_char);
  std::vector<FpPoly> gens;
  for (const Poly& m : k_minors(mat, k)) {
    FpPoly g = fp_from(F, m);
    if (!g.is_zero()) gens.push_back(std::move(g));
  }
  if (gens.empty()) return false;
  return certifies_empty(buchberger(F, std::move(gens)));
}

}  // namespace horrocks
