#include "horrocks/candidates.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace horrocks {

long MonadShape::c2() const {
  long total = 0;
  for (int ai : a) total += static_cast<long>(ai) * (ai + 1);
  for (int bj : b) total -= static_cast<long>(bj) * (bj + 1);
  return total;
}

std::string format_shape(const MonadShape& shape) {
  std::ostringstream os;
  os << "a=" << format_mult(shape.a) << " b=" << format_mult(shape.b);
  return os.str();
}

RhoBounds rho_bounds(const Spectrum& spec) {
  int K = spec.top();
  RhoBounds rb;
  rb.top_degree = -K - 1;
  rb.top_count = spec.s(K);
  rb.intervals.resize(static_cast<size_t>(K));
  for (int i = 0; i < K; ++i) {
    long tail = 0;
    for (int j = i + 1; j <= K; ++j) tail += spec.s(j);
    long lo = std::max<long>(spec.s(i) - 2 * tail, 0);
    long hi = spec.s(i) - 1;
    rb.intervals[static_cast<size_t>(i)] = {static_cast<int>(lo),
                                            static_cast<int>(hi)};
  }
  return rb;
}

std::vector<int> negative_rho_bounds(const Spectrum& spec) {
  int K = spec.top();
  std::vector<int> bounds(static_cast<size_t>(K) + 1, 0);
  for (int i = 1; i <= K; ++i)
    bounds[static_cast<size_t>(i)] = std::max(spec.s(i) - 2, 0);
  return bounds;
}

namespace {

void solve_b_rec(long remaining, int slots, int max_entry,
                 std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (slots == 0) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (int v = max_entry; v >= 0; --v) {
    long w = static_cast<long>(v) * (v + 1);
    if (w > remaining) continue;
    // Entries only shrink from here, so the rest contributes at most
    // (slots-1) * w.
    if (remaining - w > static_cast<long>(slots - 1) * w) break;
    cur.push_back(v);
    solve_b_rec(remaining - w, slots - 1, v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> solve_b(long target, int count) {
  std::vector<std::vector<int>> out;
  if (target < 0 || count < 0) return out;
  int cap = 0;
  while (static_cast<long>(cap + 1) * (cap + 2) <= target) ++cap;
  std::vector<int> cur;
  solve_b_rec(target, count, cap, cur, out);
  return out;
}

std::string format_verdict(const Verdict& v) {
  switch (v.fate) {
    case Fate::Open:
      return "OPEN";
    case Fate::NoSolution:
      return "NO_SOLUTION";
    case Fate::Nonexistent:
      return "NONEXISTENT[" + v.rule + "]";
    case Fate::Unstable:
      return "UNSTABLE[" + v.rule + "]";
    case Fate::Exists:
      return "EXISTS[" + v.method + "]";
  }
  return "";
}

Verdict eliminate(const MonadShape& shape) {
  const std::vector<int>& a = shape.a;
  const std::vector<int>& b = shape.b;

  // A middle twist at least as large as every outer twist forces a zero
  // column in the bottom map.
  if (!a.empty() && !b.empty() && b.front() >= a.front())
    return {Fate::Nonexistent, "zero-column", ""};

  // Three equal outer twists over a lower fourth, with all five middles at
  // that lower value.  Counting sections decides between impossibility and
  // a destabilizing section.
  if (a.size() == 4 && b.size() == 5) {
    int x = a[0], y = a[3];
    bool heads = (a[1] == x && a[2] == x && y < x);
    bool middles =
        std::all_of(b.begin(), b.end(), [&](int t) { return t == y; });
    if (heads && middles) {
      if (6 * y + 1 >= 4 * x) return {Fate::Nonexistent, "quintet", ""};
      if (6 * y + 1 >= 3 * x) return {Fate::Unstable, "quintet", ""};
    }
  }

  // Two equal leading middles strictly between the repeated low outer twist
  // and the single top one produce a destabilizing section.
  if (a.size() >= 2 && b.size() >= 2) {
    int a_top = a[0], a_low = a[1], bb = b[0];
    bool tail_const =
        std::all_of(a.begin() + 1, a.end(), [&](int t) { return t == a_low; });
    if (tail_const && b[1] == bb && a_top >= bb && bb > a_low && a_low >= 0 &&
        2 * bb - a_top >= 0)
      return {Fate::Unstable, "twin-middle", ""};
  }

  if (a == std::vector<int>{3, 1, 1} && b == std::vector<int>{1, 1, 1, 0})
    return {Fate::Unstable, "ones-block", ""};

  if (a == std::vector<int>{2, 2, 2, -1} && b == std::vector<int>{1, 1, 1, 1, 0})
    return {Fate::Unstable, "negative-quintet", ""};

  return {};
}

namespace {

long twist_sum(const std::vector<int>& a) {
  long t = 0;
  for (int ai : a) t += static_cast<long>(ai) * (ai + 1);
  return t;
}

}  // namespace

std::vector<CandidateRecord> positive_candidates(long c2) {
  std::vector<CandidateRecord> out;
  for (const Spectrum& spec : enumerate_spectra(c2)) {
    RhoBounds rb = rho_bounds(spec);
    int K = spec.top();
    std::vector<int> choice(static_cast<size_t>(K));
    for (int i = 0; i < K; ++i)
      choice[static_cast<size_t>(i)] = rb.intervals[static_cast<size_t>(i)].first;

    while (true) {
      std::vector<int> a;
      std::map<int, int> rho;
      rho[rb.top_degree] = rb.top_count;
      a.insert(a.end(), static_cast<size_t>(rb.top_count), K + 1);
      for (int i = K - 1; i >= 0; --i) {
        int c = choice[static_cast<size_t>(i)];
        if (c > 0) rho[-(i + 1)] = c;
        a.insert(a.end(), static_cast<size_t>(c), i + 1);
      }

      long target = twist_sum(a) - c2;
      int slots = static_cast<int>(a.size()) + 1;
      std::vector<std::vector<int>> sols = solve_b(target, slots);
      if (sols.empty()) {
        out.push_back({spec, rho, a, std::nullopt, {Fate::NoSolution, "", ""}});
      } else {
        for (std::vector<int>& b : sols) {
          CandidateRecord rec{spec, rho, a, b, {}};
          rec.verdict = eliminate(rec.shape());
          out.push_back(std::move(rec));
        }
      }

      // Odometer over the free degrees, degree -1 fastest.
      int i = 0;
      while (i < K && choice[static_cast<size_t>(i)] ==
                          rb.intervals[static_cast<size_t>(i)].second)
        ++i;
      if (i == K) break;
      ++choice[static_cast<size_t>(i)];
      for (int j = 0; j < i; ++j)
        choice[static_cast<size_t>(j)] = rb.intervals[static_cast<size_t>(j)].first;
    }
  }
  return out;
}

std::vector<CandidateRecord> negative_candidates(long c2) {
  std::vector<CandidateRecord> out;
  for (const Spectrum& spec : enumerate_spectra(c2)) {
    int K = spec.top();
    if (K < 1) continue;
    std::vector<int> caps = negative_rho_bounds(spec);
    bool any_positive =
        std::any_of(caps.begin() + 1, caps.end(), [](int c) { return c > 0; });
    if (!any_positive) continue;

    RhoBounds rb = rho_bounds(spec);
    // Degree -1 generators are pinned to zero here; a spectrum whose bounds
    // force some is out of reach of this pipeline.
    if (rb.intervals[0].first > 0) continue;

    // pos[i] for degrees -(i+1), i = 1..K-1; neg[i] for degrees -i, i = 1..K.
    std::vector<int> pos(static_cast<size_t>(K), 0);
    for (int i = 1; i < K; ++i)
      pos[static_cast<size_t>(i)] = rb.intervals[static_cast<size_t>(i)].first;
    std::vector<int> neg(static_cast<size_t>(K) + 1, 0);

    while (true) {
      int neg_total = 0;
      for (int i = 1; i <= K; ++i) neg_total += neg[static_cast<size_t>(i)];
      if (neg_total >= 1) {
        std::vector<int> a;
        std::map<int, int> rho;
        rho[-(K + 1)] = rb.top_count;
        a.insert(a.end(), static_cast<size_t>(rb.top_count), K + 1);
        for (int i = K - 1; i >= 1; --i) {
          int c = pos[static_cast<size_t>(i)];
          if (c > 0) rho[-(i + 1)] = c;
          a.insert(a.end(), static_cast<size_t>(c), i + 1);
        }
        for (int i = 1; i <= K; ++i) {
          int c = neg[static_cast<size_t>(i)];
          if (c > 0) rho[i] = c;
          a.insert(a.end(), static_cast<size_t>(c), -i);
        }

        long target = twist_sum(a) - c2;
        int slots = static_cast<int>(a.size()) + 1;
        for (std::vector<int>& b : solve_b(target, slots)) {
          // Keep only middles below the top outer twist; anything else has a
          // zero column and is not worth reporting here.
          if (!b.empty() && !a.empty() && b.front() >= a.front()) continue;
          out.push_back({spec, rho, a, b, {}});
        }
      }

      // Combined odometer: negative degrees fastest (low degree first), then
      // the free positive degrees.
      int i = 1;
      while (i <= K && neg[static_cast<size_t>(i)] == caps[static_cast<size_t>(i)])
        ++i;
      if (i <= K) {
        ++neg[static_cast<size_t>(i)];
        for (int j = 1; j < i; ++j) neg[static_cast<size_t>(j)] = 0;
        continue;
      }
      int p = 1;
      while (p < K && pos[static_cast<size_t>(p)] ==
                          rb.intervals[static_cast<size_t>(p)].second)
        ++p;
      if (p >= K) break;
      ++pos[static_cast<size_t>(p)];
      for (int j = 1; j < p; ++j)
        pos[static_cast<size_t>(j)] = rb.intervals[static_cast<size_t>(j)].first;
      for (int j = 1; j <= K; ++j) neg[static_cast<size_t>(j)] = 0;
    }
  }
  return out;
}

MonadShape extend_shape(const MonadShape& base, int r, int u, int v) {
  if (r < 1) throw std::invalid_argument("extend_shape: r must be >= 1");
  if (v < 1 || u < v) throw std::invalid_argument("extend_shape: need u >= v >= 1");
  if (u + v != 2 * r - 1)
    throw std::invalid_argument("extend_shape: need u + v = 2r - 1");
  if (v > r - 1) throw std::invalid_argument("extend_shape: need v <= r - 1");
  MonadShape out = base;
  out.a.push_back(r - 1);
  out.b.push_back(r - 1 - v);
  std::sort(out.a.rbegin(), out.a.rend());
  std::sort(out.b.rbegin(), out.b.rend());
  return out;
}

MonadShape quadric_family_shape(int n) {
  if (n < 4) throw std::invalid_argument("quadric_family_shape: need n >= 4");
  MonadShape s;
  s.a.assign(static_cast<size_t>(n - 1), 2);
  s.a.insert(s.a.end(), static_cast<size_t>(n - 3), -1);
  s.b.assign(static_cast<size_t>(2 * n - 3), 1);
  return s;
}

namespace {

KnownMonad mk(long c2, const char* id, const char* sid,
              std::vector<int> spectrum, std::vector<int> a, std::vector<int> b,
              const char* method, const char* note, const char* ext_base = "",
              int r = 0, int u = 0, int v = 0, bool refuted = false) {
  KnownMonad m;
  m.c2 = c2;
  m.id = id;
  m.spectrum_id = sid;
  m.spectrum = std::move(spectrum);
  m.shape = MonadShape{std::move(a), std::move(b)};
  m.no_stable_bundle = refuted;
  m.method = method;
  m.note = note;
  m.ext_base = ext_base;
  m.ext_r = r;
  m.ext_u = u;
  m.ext_v = v;
  return m;
}

const std::vector<KnownMonad>& full_catalog() {
  static const std::vector<KnownMonad> rows = [] {
    std::vector<KnownMonad> t;
    // Base catalog, c2 <= 8.
    t.push_back(mk(2, "M1", "S2.1", {1}, {1}, {0, 0}, "hartshorne",
                   "one conic"));
    t.push_back(mk(4, "M2", "S4.1", {2}, {1, 1}, {0, 0, 0}, "hartshorne",
                   "2 disjoint conics"));
    t.push_back(mk(4, "M3", "S4.2", {1, 1}, {2}, {1, 0}, "ein",
                   "generalized null correlation bundle"));
    t.push_back(mk(6, "M4", "S6.1", {3}, {1, 1, 1}, {0, 0, 0, 0}, "hartshorne",
                   "3 disjoint conics"));
    t.push_back(mk(6, "M5", "S6.2", {2, 1}, {2}, {0, 0}, "ein",
                   "generalized null correlation bundle"));
    t.push_back(mk(6, "M6", "S6.2", {2, 1}, {2, 1}, {1, 0, 0}, "catalog",
                   "base catalog"));
    t.push_back(mk(6, "M7", "S6.3", {1, 2}, {2, 2}, {1, 1, 1}, "catalog",
                   "base catalog"));
    t.push_back(mk(6, "M8", "S6.4", {1, 1, 1}, {3}, {2, 0}, "ein",
                   "generalized null correlation bundle"));
    t.push_back(mk(8, "M9", "S8.1", {4}, {1, 1, 1, 1}, {0, 0, 0, 0, 0},
                   "hartshorne", "4 disjoint conics"));
    t.push_back(mk(8, "M10", "S8.2", {3, 1}, {2, 1}, {0, 0, 0}, "catalog",
                   "base catalog"));
    t.push_back(mk(8, "M11", "S8.2", {3, 1}, {2, 1, 1}, {1, 0, 0, 0}, "catalog",
                   "base catalog"));
    t.push_back(mk(8, "M12", "S8.3", {2, 2}, {2, 2}, {1, 1, 0}, "catalog",
                   "base catalog"));
    t.push_back(mk(8, "M13", "S8.3", {2, 2}, {2, 2, 1}, {1, 1, 1, 0}, "catalog",
                   "base catalog"));
    t.push_back(mk(8, "M14", "S8.4", {2, 1, 1}, {3, 1}, {2, 0, 0}, "catalog",
                   "base catalog"));
    t.push_back(mk(8, "M15", "S8.6", {1, 2, 1}, {3}, {1, 1}, "ein",
                   "generalized null correlation bundle"));
    t.push_back(mk(8, "M16", "S8.6", {1, 2, 1}, {3, 2}, {2, 1, 1}, "catalog",
                   "base catalog"));
    t.push_back(mk(8, "M17", "S8.7", {1, 1, 1, 1}, {4}, {3, 0}, "ein",
                   "generalized null correlation bundle"));
    // c2 = 10.
    t.push_back(mk(10, "", "S10.1", {5}, {1, 1, 1, 1, 1}, {0, 0, 0, 0, 0, 0},
                   "hartshorne", "5 disjoint conics"));
    t.push_back(mk(10, "", "S10.2", {4, 1}, {2, 1, 1}, {0, 0, 0, 0},
                   "extension", "", "M2", 3, 3, 2));
    t.push_back(mk(10, "", "S10.2", {4, 1}, {2, 1, 1, 1}, {1, 0, 0, 0, 0},
                   "extension", "", "M4", 3, 4, 1));
    t.push_back(mk(10, "", "S10.3", {3, 2}, {2, 2}, {1, 0, 0}, "extension", "",
                   "M3", 3, 3, 2));
    t.push_back(mk(10, "", "S10.3", {3, 2}, {2, 2, 1}, {1, 1, 0, 0},
                   "extension", "", "M6", 3, 4, 1));
    t.push_back(mk(10, "", "S10.3", {3, 2}, {2, 2, 1, 1}, {1, 1, 1, 0, 0},
                   "extension", "", "M13", 2, 2, 1));
    t.push_back(mk(10, "", "S10.4", {3, 1, 1}, {3}, {1, 0}, "ein",
                   "generalized null correlation bundle"));
    t.push_back(mk(10, "", "S10.4", {3, 1, 1}, {3, 1}, {1, 1, 0}, "extension",
                   "", "M15", 2, 2, 1));
    t.push_back(mk(10, "", "S10.4", {3, 1, 1}, {3, 1, 1}, {1, 1, 1, 0}, "", "",
                   "", 0, 0, 0, true));
    t.push_back(mk(10, "", "S10.4", {3, 1, 1}, {3, 1, 1}, {2, 0, 0, 0},
                   "extension", "", "M2", 4, 6, 1));
    t.push_back(mk(10, "", "S10.5", {2, 3}, {2, 2, 2}, {1, 1, 1, 1},
                   "extension", "", "M7", 3, 4, 1));
    t.push_back(mk(10, "", "S10.6", {2, 2, 1}, {3}, {1, 0}, "serre-curve",
                   "curve of type (3,3) on a quadric"));
    t.push_back(mk(10, "", "S10.6", {2, 2, 1}, {3, 1}, {1, 1, 0}, "extension",
                   "", "M15", 2, 2, 1));
    t.push_back(mk(10, "", "S10.6", {2, 2, 1}, {3, 2}, {2, 1, 0}, "extension",
                   "", "M8", 3, 4, 1));
    t.push_back(mk(10, "", "S10.6", {2, 2, 1}, {3, 2, 1}, {2, 1, 1, 0},
                   "extension", "", "M16", 2, 2, 1));
    t.push_back(mk(10, "", "S10.7", {2, 1, 1, 1}, {4, 1}, {2, 2, 0}, "", "",
                   "", 0, 0, 0, true));
    t.push_back(mk(10, "", "S10.7", {2, 1, 1, 1}, {4, 1}, {3, 0, 0},
                   "extension", "", "M17", 2, 2, 1));
    t.push_back(mk(10, "", "S10.9", {1, 3, 1}, {3, 2}, {2, 1, 0}, "extension",
                   "", "M8", 3, 4, 1));
    t.push_back(mk(10, "", "S10.9", {1, 3, 1}, {3, 2, 2}, {2, 2, 1, 0},
                   "serre-curve", "plane conic and plane cubic meeting in one point"));
    t.push_back(mk(10, "", "S10.10", {1, 2, 2}, {3, 3}, {2, 2, 1},
                   "explicit-matrix", "verified presentation matrices"));
    t.push_back(mk(10, "", "S10.10", {1, 2, 2}, {3, 3, 2}, {2, 2, 2, 1},
                   "serre-curve", "plane conic and plane cubic meeting in two points"));
    t.push_back(mk(10, "", "S10.11", {1, 2, 1, 1}, {4, 2}, {3, 1, 1},
                   "explicit-matrix", "verified presentation matrices"));
    t.push_back(mk(10, "", "S10.12", {1, 1, 1, 1, 1}, {5}, {4, 0},
                   "serre-curve", "plane quintic"));
    return t;
  }();
  return rows;
}

}  // namespace

std::vector<KnownMonad> known_table(long c2) {
  if (c2 != 2 && c2 != 4 && c2 != 6 && c2 != 8 && c2 != 10)
    throw std::invalid_argument("known_table: catalog covers c2 in {2,4,6,8,10}");
  std::vector<KnownMonad> rows;
  for (const KnownMonad& m : full_catalog())
    if (m.c2 == c2) rows.push_back(m);
  return rows;
}

KnownMonad known_row(const std::string& id) {
  for (const KnownMonad& m : full_catalog())
    if (!m.id.empty() && m.id == id) return m;
  throw std::invalid_argument("known_row: no catalog entry named " + id);
}

void apply_known_constructions(std::vector<CandidateRecord>& records) {
  for (CandidateRecord& rec : records) {
    if (rec.verdict.fate != Fate::Open || !rec.b) continue;
    long c2 = rec.spectrum.c2();
    MonadShape shape = rec.shape();

    if (c2 >= 2 && c2 <= 10 && c2 % 2 == 0) {
      for (const KnownMonad& m : known_table(c2)) {
        if (m.no_stable_bundle) continue;
        if (m.spectrum != rec.spectrum.mult || !(m.shape == shape)) continue;
        std::ostringstream method;
        if (m.method == "extension") {
          method << "extension(" << m.ext_base << "; r=" << m.ext_r
                 << ", u=" << m.ext_u << ", v=" << m.ext_v << ")";
        } else {
          method << m.method;
          if (!m.note.empty()) method << "(" << m.note << ")";
        }
        rec.verdict = {Fate::Exists, "", method.str()};
        break;
      }
    }
    if (rec.verdict.fate == Fate::Exists) continue;

    // Negative-generator records: the quadric family covers spectrum
    // (1, n-1) at c2 = 2n.
    if (c2 % 2 == 0 && c2 >= 8) {
      int n = static_cast<int>(c2 / 2);
      if (rec.spectrum.mult == std::vector<int>{1, n - 1} &&
          shape == quadric_family_shape(n)) {
        std::ostringstream method;
        method << "quadric-family(n=" << n << ")";
        rec.verdict = {Fate::Exists, "", method.str()};
      }
    }
  }
}

}  // namespace horrocks
