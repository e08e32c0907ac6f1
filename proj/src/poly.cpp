#include "horrocks/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace horrocks {

bool Monomial::divides(const Monomial& o) const {
  for (int i = 0; i < 4; ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < 4; ++i) r.e[i] = e[i] + o.e[i];
  return r;
}

Monomial Monomial::quotient(const Monomial& d) const {
  Monomial r;
  for (int i = 0; i < 4; ++i) r.e[i] = e[i] - d.e[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < 4; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

int compare_drl(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (int i = 3; i >= 0; --i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  return 0;
}

Poly Poly::constant(const Rational& c) {
  Poly p;
  if (c != 0) p.terms_.push_back({c, Monomial{}});
  return p;
}

Poly Poly::variable(int i) {
  Monomial m;
  m.e[static_cast<size_t>(i)] = 1;
  Poly p;
  p.terms_.push_back({Rational(1), m});
  return p;
}

Poly Poly::term(const Rational& c, const Monomial& m) {
  Poly p;
  if (c != 0) p.terms_.push_back({c, m});
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, t.m.degree());
  return d;
}

bool Poly::homogeneous_of(int d) const {
  for (const Term& t : terms_)
    if (t.m.degree() != d) return false;
  return true;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (Term& t : r.terms_) t.c = -t.c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size()) {
      r.terms_.push_back(terms_[i++]);
      continue;
    }
    if (i == terms_.size()) {
      r.terms_.push_back(o.terms_[j++]);
      continue;
    }
    int cmp = compare_drl(terms_[i].m, o.terms_[j].m);
    if (cmp > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rational c = terms_[i].c + o.terms_[j].c;
      if (c != 0) r.terms_.push_back({c, terms_[i].m});
      ++i;
      ++j;
    }
  }
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  std::map<Monomial, Rational, DrlGreater> acc;
  for (const Term& s : terms_)
    for (const Term& t : o.terms_) acc[s.m * t.m] += s.c * t.c;
  Poly r;
  for (const auto& [m, c] : acc)
    if (c != 0) r.terms_.push_back({c, m});
  return r;
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c)
      return false;
  return true;
}

Poly Poly::from_terms(std::vector<Term> ts) {
  std::sort(ts.begin(), ts.end(),
            [](const Term& a, const Term& b) { return compare_drl(a.m, b.m) > 0; });
  Poly r;
  for (Term& t : ts) {
    if (t.c == 0) continue;
    if (!r.terms_.empty() && r.terms_.back().m == t.m)
      r.terms_.back().c += t.c;
    else
      r.terms_.push_back(std::move(t));
  }
  // Merging can cancel to zero.
  std::vector<Term> cleaned;
  for (Term& t : r.terms_)
    if (t.c != 0) cleaned.push_back(std::move(t));
  r.terms_ = std::move(cleaned);
  return r;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  static const char* names[4] = {"x", "y", "z", "w"};
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    Rational c = t.c;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool unit = (c == 1) && t.m.degree() > 0;
    if (!unit) os << c.get_str();
    bool printed = !unit;
    for (int i = 0; i < 4; ++i) {
      if (t.m.e[static_cast<size_t>(i)] == 0) continue;
      if (printed) os << "*";
      os << names[i];
      if (t.m.e[static_cast<size_t>(i)] > 1)
        os << "^" << t.m.e[static_cast<size_t>(i)];
      printed = true;
    }
  }
  return os.str();
}

FpPoly fp_from(const PrimeField& F, const Poly& p) {
  FpPoly r;
  for (const Term& t : p.terms()) {
    std::int64_t c = F.reduce(t.c);
    if (c != 0) r.terms.push_back({c, t.m});
  }
  return r;
}

FpPoly fp_from_terms(const PrimeField& F, std::vector<FpTerm> ts) {
  std::sort(ts.begin(), ts.end(), [](const FpTerm& a, const FpTerm& b) {
    return compare_drl(a.m, b.m) > 0;
  });
  FpPoly r;
  for (FpTerm& t : ts) {
    std::int64_t c = F.reduce(t.c);
    if (!r.terms.empty() && r.terms.back().m == t.m) {
      r.terms.back().c = F.add(r.terms.back().c, c);
    } else {
      r.terms.push_back({c, t.m});
    }
  }
  std::vector<FpTerm> cleaned;
  for (FpTerm& t : r.terms)
    if (t.c != 0) cleaned.push_back(t);
  r.terms = std::move(cleaned);
  return r;
}

FpPoly fp_add(const PrimeField& F, const FpPoly& a, const FpPoly& b) {
  FpPoly r;
  size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size()) {
      r.terms.push_back(a.terms[i++]);
      continue;
    }
    if (i == a.terms.size()) {
      r.terms.push_back(b.terms[j++]);
      continue;
    }
    int cmp = compare_drl(a.terms[i].m, b.terms[j].m);
    if (cmp > 0) {
      r.terms.push_back(a.terms[i++]);
    } else if (cmp < 0) {
      r.terms.push_back(b.terms[j++]);
    } else {
      std::int64_t c = F.add(a.terms[i].c, b.terms[j].c);
      if (c != 0) r.terms.push_back({c, a.terms[i].m});
      ++i;
      ++j;
    }
  }
  return r;
}

FpPoly fp_sub(const PrimeField& F, const FpPoly& a, const FpPoly& b) {
  FpPoly nb = b;
  for (FpTerm& t : nb.terms) t.c = F.neg(t.c);
  return fp_add(F, a, nb);
}

FpPoly fp_mul_term(const PrimeField& F, const FpPoly& a, std::int64_t c,
                   const Monomial& m) {
  FpPoly r;
  if (c == 0) return r;
  r.terms.reserve(a.terms.size());
  for (const FpTerm& t : a.terms) r.terms.push_back({F.mul(t.c, c), t.m * m});
  return r;
}

FpPoly fp_mul(const PrimeField& F, const FpPoly& a, const FpPoly& b) {
  std::map<Monomial, std::int64_t, DrlGreater> acc;
  for (const FpTerm& s : a.terms)
    for (const FpTerm& t : b.terms) {
      std::int64_t& slot = acc[s.m * t.m];
      slot = F.add(slot, F.mul(s.c, t.c));
    }
  FpPoly r;
  for (const auto& [m, c] : acc)
    if (c != 0) r.terms.push_back({c, m});
  return r;
}

FpPoly fp_monic(const PrimeField& F, const FpPoly& a) {
  if (a.is_zero()) return a;
  std::int64_t inv = F.inv(a.terms.front().c);
  FpPoly r = a;
  for (FpTerm& t : r.terms) t.c = F.mul(t.c, inv);
  return r;
}

bool fp_equal(const FpPoly& a, const FpPoly& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (size_t i = 0; i < a.terms.size(); ++i)
    if (!(a.terms[i].m == b.terms[i].m) || a.terms[i].c != b.terms[i].c)
      return false;
  return true;
}

}  // namespace horrocks
