// End-to-end acceptance battery for the classification pipeline.  Ten
// criteria, one PASS/FAIL line each; the process exit code is the number of
// failed criteria.  Expectations are frozen literals so a regression in any
// module trips the matching line.

#include <cstdint>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "horrocks/candidates.hpp"
#include "horrocks/cohomology.hpp"
#include "horrocks/groebner.hpp"
#include "horrocks/moduli.hpp"
#include "horrocks/monad.hpp"
#include "horrocks/numeric.hpp"
#include "horrocks/poly.hpp"
#include "horrocks/spectra.hpp"

#include "oracles.hpp"

using namespace horrocks;

namespace {

using Vec = std::vector<int>;

void expect(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

std::string fixture(const char* name) {
  return std::string(HORROCKS_FIXTURE_DIR) + "/" + name;
}

std::vector<Vec> mults(const std::vector<Spectrum>& specs) {
  std::vector<Vec> out;
  for (const auto& s : specs) out.push_back(s.mult);
  return out;
}

// 1. Spectrum enumeration: exact lists, exact order, c2 <= 10.
void criterion1() {
  const std::vector<Vec> twelve = {
      {5},    {4, 1},    {3, 2},    {3, 1, 1},    {2, 3},    {2, 2, 1},
      {2, 1, 1, 1},      {1, 4},    {1, 3, 1},    {1, 2, 2}, {1, 2, 1, 1},
      {1, 1, 1, 1, 1}};
  expect(mults(enumerate_spectra(10)) == twelve, "c2=10 spectrum list");
  expect(mults(enumerate_spectra(2)) == std::vector<Vec>{{1}}, "c2=2 list");
  expect(mults(enumerate_spectra(4)) == std::vector<Vec>{{2}, {1, 1}},
         "c2=4 list");
  expect(mults(enumerate_spectra(6)) ==
             std::vector<Vec>{{3}, {2, 1}, {1, 2}, {1, 1, 1}},
         "c2=6 list");
  expect(mults(enumerate_spectra(8)) ==
             std::vector<Vec>{{4},
                              {3, 1},
                              {2, 2},
                              {2, 1, 1},
                              {1, 3},
                              {1, 2, 1},
                              {1, 1, 1, 1}},
         "c2=8 list");
}

// 2. Generator bounds: every cell for the twelve c2 = 10 spectra.
void criterion2() {
  struct Cell {
    Vec mult;
    int top_degree;
    int top_count;
    std::vector<std::pair<int, int>> intervals;
  };
  const std::vector<Cell> cells = {
      {{5}, -1, 5, {}},
      {{4, 1}, -2, 1, {{2, 3}}},
      {{3, 2}, -2, 2, {{0, 2}}},
      {{3, 1, 1}, -3, 1, {{0, 2}, {0, 0}}},
      {{2, 3}, -2, 3, {{0, 1}}},
      {{2, 2, 1}, -3, 1, {{0, 1}, {0, 1}}},
      {{2, 1, 1, 1}, -4, 1, {{0, 1}, {0, 0}, {0, 0}}},
      {{1, 4}, -2, 4, {{0, 0}}},
      {{1, 3, 1}, -3, 1, {{0, 0}, {1, 2}}},
      {{1, 2, 2}, -3, 2, {{0, 0}, {0, 1}}},
      {{1, 2, 1, 1}, -4, 1, {{0, 0}, {0, 1}, {0, 0}}},
      {{1, 1, 1, 1, 1}, -5, 1, {{0, 0}, {0, 0}, {0, 0}, {0, 0}}},
  };
  for (const auto& cell : cells) {
    RhoBounds rb = rho_bounds(Spectrum{cell.mult});
    std::string tag = "spectrum " + format_mult(cell.mult);
    expect(rb.top_degree == cell.top_degree, tag + " top degree");
    expect(rb.top_count == cell.top_count, tag + " top count");
    expect(rb.intervals == cell.intervals, tag + " intervals");
  }
}

// 3. Candidate enumeration and elimination at c2 = 10: the verdict
// partition and the shapes carrying each elimination mechanism.
void criterion3() {
  auto records = positive_candidates(10);
  expect(records.size() == 36, "record count");

  int nonexistent = 0, unstable = 0, open = 0, no_solution = 0;
  for (const auto& r : records) {
    switch (r.verdict.fate) {
      case Fate::Nonexistent:
        ++nonexistent;
        expect(r.verdict.rule == "zero-column",
               "nonexistent record must carry the zero-column rule");
        break;
      case Fate::Unstable:
        ++unstable;
        break;
      case Fate::Open:
        ++open;
        break;
      case Fate::NoSolution:
        ++no_solution;
        expect(!r.b, "no-solution record must have no middle");
        break;
      default:
        expect(false, "unexpected fate in the fresh enumeration");
    }
  }
  expect(nonexistent == 10, "ten rows fail the zero-column test");
  expect(unstable == 3, "three rows are unstable");
  expect(open == 21, "twenty-one rows survive");
  expect(no_solution == 2, "two generator choices admit no middle");
  expect(nonexistent + unstable + open == 34, "thirty-four solved tuples");

  auto rule_on = [&](const Vec& a, const Vec& b) -> std::string {
    for (const auto& r : records)
      if (r.a == a && r.b && *r.b == b) return r.verdict.rule;
    return "<record not found>";
  };
  expect(rule_on({2, 2, 2, 1}, {1, 1, 1, 1, 1}) == "quintet",
         "quintet rule placement");
  expect(rule_on({4, 1}, {2, 2, 0}) == "twin-middle",
         "twin-middle rule placement");
  expect(rule_on({3, 1, 1}, {1, 1, 1, 0}) == "ones-block",
         "ones-block rule placement");
}

// 4. Extension constructions: every catalog row built as an extension is
// reproduced from its base by extend_shape with the stated (r, u, v).
void criterion4() {
  struct Ext {
    MonadShape base;
    int r, u, v;
    MonadShape result;
  };
  const std::vector<Ext> frozen = {
      {{{1, 1}, {0, 0, 0}}, 3, 3, 2, {{2, 1, 1}, {0, 0, 0, 0}}},
      {{{1, 1, 1}, {0, 0, 0, 0}}, 3, 4, 1, {{2, 1, 1, 1}, {1, 0, 0, 0, 0}}},
      {{{2}, {1, 0}}, 3, 3, 2, {{2, 2}, {1, 0, 0}}},
      {{{2, 1}, {1, 0, 0}}, 3, 4, 1, {{2, 2, 1}, {1, 1, 0, 0}}},
      {{{2, 2, 1}, {1, 1, 1, 0}}, 2, 2, 1, {{2, 2, 1, 1}, {1, 1, 1, 0, 0}}},
      {{{3}, {1, 1}}, 2, 2, 1, {{3, 1}, {1, 1, 0}}},
      {{{1, 1}, {0, 0, 0}}, 4, 6, 1, {{3, 1, 1}, {2, 0, 0, 0}}},
      {{{2, 2}, {1, 1, 1}}, 3, 4, 1, {{2, 2, 2}, {1, 1, 1, 1}}},
      {{{3}, {1, 1}}, 2, 2, 1, {{3, 1}, {1, 1, 0}}},
      {{{3}, {2, 0}}, 3, 4, 1, {{3, 2}, {2, 1, 0}}},
      {{{3, 2}, {2, 1, 1}}, 2, 2, 1, {{3, 2, 1}, {2, 1, 1, 0}}},
      {{{4}, {3, 0}}, 2, 2, 1, {{4, 1}, {3, 0, 0}}},
      {{{3}, {2, 0}}, 3, 4, 1, {{3, 2}, {2, 1, 0}}},
  };
  for (size_t i = 0; i < frozen.size(); ++i) {
    const Ext& e = frozen[i];
    std::string tag = "extension " + std::to_string(i);
    expect(extend_shape(e.base, e.r, e.u, e.v) == e.result, tag + " shape");
    expect(e.base.c2() + e.u * e.v == e.result.c2(), tag + " c2 increment");
    expect(e.result.c2() == 10, tag + " lands at c2 = 10");
  }

  std::vector<KnownMonad> ext_rows;
  for (const auto& row : known_table(10))
    if (row.method == "extension") ext_rows.push_back(row);
  expect(ext_rows.size() == frozen.size(), "extension row count");

  std::set<std::pair<Vec, Vec>> distinct;
  for (size_t i = 0; i < ext_rows.size(); ++i) {
    const KnownMonad& row = ext_rows[i];
    std::string tag = row.spectrum_id + " via " + row.ext_base;
    expect(known_row(row.ext_base).shape == frozen[i].base, tag + " base");
    expect(row.ext_r == frozen[i].r && row.ext_u == frozen[i].u &&
               row.ext_v == frozen[i].v,
           tag + " parameters");
    expect(row.shape == frozen[i].result, tag + " shape");
    MonadShape rebuilt =
        extend_shape(known_row(row.ext_base).shape, row.ext_r, row.ext_u,
                     row.ext_v);
    expect(rebuilt == row.shape, tag + " rebuild");
    distinct.insert({row.shape.a, row.shape.b});
  }
  expect(distinct.size() == 11, "eleven distinct extension shapes");
}

// 5. Negative-twist pipeline: the 1 + 1 + 4 split across the three spectra
// that admit negative generators, and the quadric-family series.
void criterion5() {
  auto records = negative_candidates(10);
  expect(records.size() == 6, "six negative records");

  std::map<Vec, int> by_spectrum;
  for (const auto& r : records) by_spectrum[r.spectrum.mult]++;
  expect(by_spectrum == std::map<Vec, int>{{{2, 3}, 1},
                                           {{1, 4}, 1},
                                           {{1, 3, 1}, 4}},
         "shape counts per spectrum");

  // Those three spectra sit at rows 5, 8 and 9 of the c2 = 10 enumeration.
  auto specs = mults(enumerate_spectra(10));
  expect(specs[4] == Vec{2, 3} && specs[7] == Vec{1, 4} &&
             specs[8] == Vec{1, 3, 1},
         "spectrum row positions");

  for (const auto& r : records) {
    if (r.spectrum.mult == Vec{1, 4})
      expect(r.shape() == quadric_family_shape(5),
             "the single (1,4) shape is the quadric family member");
    if (r.spectrum.mult == Vec{2, 3}) {
      Verdict v = eliminate(r.shape());
      expect(v.fate == Fate::Unstable && v.rule == "negative-quintet",
             "the (2,3) shape is killed by the negative-quintet rule");
    }
  }

  auto base = negative_candidates(8);
  expect(base.size() == 1, "one negative record at c2 = 8");
  expect(base[0].spectrum.mult == Vec{1, 3}, "its spectrum");
  expect(base[0].shape() == quadric_family_shape(4), "its shape");

  for (int n = 4; n <= 10; ++n) {
    MonadShape shape = quadric_family_shape(n);
    std::string tag = "quadric family n=" + std::to_string(n);
    expect(shape.c2() == 2 * n, tag + " c2");
    int negatives = 0;
    for (int ai : shape.a) negatives += ai < 0 ? 1 : 0;
    int cap = negative_rho_bounds(Spectrum{{1, n - 1}})[1];
    expect(cap == std::max(n - 1 - 2, 0), tag + " cap formula");
    expect(negatives == cap, tag + " negative generator count");
  }
}

// 6. Explicit presentations: both fixtures pass the whole battery and their
// twisted h1 series match the predicted spectra exactly.
void criterion6() {
  struct Case {
    const char* file;
    Vec spectrum;
  };
  const Case cases[] = {{"monad_s10_11.json", {1, 2, 1, 1}},
                        {"monad_s10_10.json", {1, 2, 2}}};
  for (const Case& c : cases) {
    MonadPresentation m = load_monad(fixture(c.file));
    std::string tag = std::string(c.file) + ": ";
    expect(validate_presentation(m).empty(), tag + "well-formed and minimal");
    expect(compose_is_zero(m), tag + "exact composition");
    expect(h0_E(m, 0) == 0, tag + "no global sections");

    VerifyOptions opt;
    opt.spectrum = Spectrum{c.spectrum};
    MonadReport report = verify_monad(m, opt);
    expect(report.checks.size() == 7, tag + "seven checks");
    for (const auto& check : report.checks)
      expect(check.status == CheckStatus::Pass, tag + check.name);
    expect(report.overall() == CheckStatus::Pass, tag + "overall");

    Spectrum spec{c.spectrum};
    for (int l = -8; l <= -1; ++l)
      expect(h1_E(m, l) == spectrum_h1(spec, l),
             tag + "h1 at l=" + std::to_string(l));
  }

  MonadPresentation second = load_monad(fixture("monad_s10_10.json"));
  expect(h1_E(second, -1) == 11 && h1_E(second, -2) == 6 &&
             h1_E(second, -3) == 2,
         "second presentation h1 at -1,-2,-3 is 11, 6, 2");
}

// 7. Dimension table: the homotopy-free filter keeps exactly seven shapes
// and every numeric cell matches.
void criterion7() {
  struct Row {
    std::string id;
    Vec a, b;
    long w, g, s, h, dim;
    bool bold;
  };
  const std::vector<Row> frozen = {
      {"S10.1", {1, 1, 1, 1, 1}, {0, 0, 0, 0, 0, 0}, 200, 25, 120, 420, 75,
       true},
      {"S10.2", {2, 1, 1}, {0, 0, 0, 0}, 90, 13, 56, 232, 73, false},
      {"S10.3", {2, 2}, {1, 0, 0}, 56, 4, 65, 198, 73, false},
      {"S10.6", {3}, {1, 0}, 0, 1, 40, 121, 80, false},
      {"S10.5", {2, 2, 2}, {1, 1, 1, 1}, 168, 9, 216, 468, 75, true},
      {"S10.10", {3, 3}, {2, 2, 1}, 120, 4, 271, 484, 89, false},
      {"S10.12", {5}, {4, 0}, 0, 1, 317, 430, 112, false},
  };

  auto table = dimension_table(10);
  expect(table.size() == 7, "seven homotopy-free rows");
  for (size_t i = 0; i < frozen.size(); ++i) {
    const Row& want = frozen[i];
    const DimensionRow& got = table[i];
    std::string tag = want.id + " ";
    expect(got.spectrum_id == want.id, tag + "id");
    expect(got.shape.a == want.a && got.shape.b == want.b, tag + "shape");
    expect(got.report.w == want.w, tag + "w");
    expect(got.report.g == want.g, tag + "g");
    expect(got.report.s == want.s, tag + "s");
    expect(got.report.h == want.h, tag + "h");
    expect(got.report.dim == want.dim, tag + "dim");
    expect(got.report.dim == got.report.h - got.report.w - got.report.g -
                                 got.report.s,
           tag + "dim identity");
    expect(got.expected_dimension == want.bold, tag + "expected-dimension flag");
  }

  std::set<std::pair<Vec, Vec>> free_shapes;
  for (const Row& r : frozen) free_shapes.insert({r.a, r.b});
  std::set<std::pair<Vec, Vec>> computed;
  for (const auto& rec : positive_candidates(10)) {
    if (rec.verdict.fate != Fate::Open || !rec.b) continue;
    if (homotopy_free(rec.shape())) computed.insert({rec.a, *rec.b});
  }
  expect(computed == free_shapes,
         "homotopy-free filter keeps exactly the table shapes");
}

// 8. Separation probes: the twisted-h1 values that place the families in
// distinct components, plus the one documented reference discrepancy.
void criterion8() {
  SeparationReport rep = component_separation(10);
  struct Probe {
    std::string name;
    long h1_m5, h1_m3, dim;
    bool component;
  };
  const std::vector<Probe> frozen = {
      {"C1", 0, 0, 75, true},
      {"C2", 0, 1, 80, true},
      {"C3", 1, 6, 112, true},
      {"V(2,2,2|1,1,1,1)", 0, 0, 75, false},
      {"V(3,3|2,2,1)", 0, 2, 89, false},
  };
  expect(rep.probes.size() == frozen.size(), "five probes");
  for (size_t i = 0; i < frozen.size(); ++i) {
    const Probe& want = frozen[i];
    const FamilyProbe& got = rep.probes[i];
    expect(got.name == want.name, "probe name " + want.name);
    expect(got.h1_m5 == want.h1_m5, want.name + " h1(-5)");
    expect(got.h1_m3 == want.h1_m3, want.name + " h1(-3)");
    expect(got.dim == want.dim, want.name + " dim");
    expect(got.component == want.component, want.name + " component flag");
  }
  expect(rep.exclusions.size() == 6, "six exclusions");
  expect(rep.flags.size() == 1, "exactly one flagged discrepancy");
  const std::string& flag = rep.flags[0];
  expect(flag.find("V(3,3|2,2,1)") != std::string::npos, "flagged family");
  expect(flag.find("computed 2") != std::string::npos, "computed value");
  expect(flag.find("reference value is 0") != std::string::npos,
         "reference value");
}

// 9. Curve-side dimensions: the two nodal plane unions and the rational
// curves on a quadric.
void criterion9() {
  expect(plane_union_omega_dim({2, 3, 1, 2}) == 10 &&
             plane_union_omega_dim({2, 3, 1, 1}) == 5 &&
             plane_union_omega_dim({2, 3, 1, 0}) == 1,
         "one-node union column (10, 5, 1)");
  expect(plane_union_omega_dim({2, 3, 2, 2}) == 11 &&
             plane_union_omega_dim({2, 3, 2, 1}) == 6 &&
             plane_union_omega_dim({2, 3, 2, 0}) == 2,
         "two-node union column (11, 6, 2)");
  for (int n = 4; n <= 6; ++n) {
    std::string tag = "quadric curve n=" + std::to_string(n);
    expect(rational_quadric_omega_dim(n, 1) == n - 1, tag + " at m=1");
    expect(rational_quadric_omega_dim(n, 0) == 0, tag + " at m=0");
    expect(rational_quadric_omega_dim(n, -1) == 0, tag + " at m=-1");
  }
}

// 10. Brute-force cross-checks: middle-term solving, Groebner invariants,
// ring axioms, and the c2 identity on every emitted shape.
void criterion10() {
  for (long target = 0; target <= 40; ++target)
    for (int count = 1; count <= 8; ++count)
      expect(solve_b(target, count) == oracle::brute_solve_b(target, count),
             "solve_b(" + std::to_string(target) + "," +
                 std::to_string(count) + ")");

  PrimeField F(32003);
  SplitMix64 grng(0x9e3779b97f4a7c15ull);
  for (int trial = 0; trial < 100; ++trial) {
    std::string tag = "ideal trial " + std::to_string(trial);
    int ngens = 2 + static_cast<int>(grng.below(2));
    std::vector<FpPoly> gens;
    for (int g = 0; g < ngens; ++g) {
      FpPoly p = fp_from(F, oracle::random_poly(grng, 3, 3));
      if (!p.is_zero()) gens.push_back(std::move(p));
    }
    if (gens.empty()) continue;
    auto gb = buchberger(F, gens);
    expect(!gb.empty(), tag + ": basis nonempty");
    for (size_t i = 0; i < gb.size(); ++i)
      for (size_t j = i + 1; j < gb.size(); ++j)
        expect(normal_form(F, s_poly(F, gb[i], gb[j]), gb).is_zero(),
               tag + ": S-polynomial reduces to zero");
    for (const auto& g : gens)
      expect(normal_form(F, g, gb).is_zero(), tag + ": input belongs");
  }

  SplitMix64 prng(0x2545f4914f6cdd1dull);
  for (int trial = 0; trial < 100; ++trial) {
    std::string tag = "ring trial " + std::to_string(trial);
    Poly f = oracle::random_poly(prng, 4, 3);
    Poly g = oracle::random_poly(prng, 4, 3);
    Poly h = oracle::random_poly(prng, 4, 3);
    expect(f * g == g * f, tag + ": commutativity");
    expect((f * g) * h == f * (g * h), tag + ": associativity");
    expect((f + g) * h == f * h + g * h, tag + ": distributivity");
    expect(oracle::dense_equal(
               oracle::dense_mul(oracle::to_dense(f), oracle::to_dense(g)),
               f * g),
           tag + ": dense product agreement");
  }

  for (long c2 : {2L, 4L, 6L, 8L, 10L, 12L}) {
    auto check_records = [&](const std::vector<CandidateRecord>& records) {
      for (const auto& r : records) {
        if (!r.b) continue;
        long lhs = 0;
        for (int ai : r.a) lhs += static_cast<long>(ai) * (ai + 1);
        for (int bj : *r.b) lhs -= static_cast<long>(bj) * (bj + 1);
        long total = 0;
        for (int sk : r.spectrum.mult) total += sk;
        expect(lhs == c2 && 2 * total == c2,
               "c2 identity at " + format_shape(r.shape()));
      }
    };
    check_records(positive_candidates(c2));
    check_records(negative_candidates(c2));
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* what;
    void (*body)();
  };
  const Criterion list[] = {
      {"spectrum enumeration for c2 <= 10", criterion1},
      {"generator bounds for all twelve spectra", criterion2},
      {"candidate enumeration and elimination at c2 = 10", criterion3},
      {"extension constructions rebuild their catalog rows", criterion4},
      {"negative-twist pipeline and the quadric family", criterion5},
      {"explicit presentations verify end to end", criterion6},
      {"dimension table for the homotopy-free shapes", criterion7},
      {"cohomology probes separating the families", criterion8},
      {"curve-side dualizing-sheaf dimensions", criterion9},
      {"brute-force and axiom cross-checks", criterion10},
  };

  int failures = 0;
  for (size_t i = 0; i < sizeof(list) / sizeof(list[0]); ++i) {
    try {
      list[i].body();
      std::cout << "criterion " << (i + 1) << ": PASS  (" << list[i].what
                << ")\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "criterion " << (i + 1) << ": FAIL  (" << list[i].what
                << "): " << e.what() << "\n";
    }
  }
  if (failures != 0)
    std::cout << failures << " of 10 criteria failed\n";
  else
    std::cout << "all 10 criteria passed\n";
  return failures;
}
