#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "horrocks/spectra.hpp"

namespace horrocks {

// Twist data of a candidate presentation.  a lists the outer twists in
// descending order; b lists the non-negative middle parameters (the middle
// term is the sum of O(b_j) + O(-b_j-1)) in descending order.
struct MonadShape {
  std::vector<int> a;
  std::vector<int> b;

  long c2() const;
  bool operator==(const MonadShape& o) const { return a == o.a && b == o.b; }
};

std::string format_shape(const MonadShape& shape);

// Generator-count constraints read off a spectrum.  The top interval is
// exact; the remaining degrees carry closed intervals.
struct RhoBounds {
  int top_degree = 0;  // -K-1
  int top_count = 0;   // forced multiplicity there
  // intervals[i] = [lo, hi] for generator degree -(i+1), i = 0..K-1.
  std::vector<std::pair<int, int>> intervals;
};

RhoBounds rho_bounds(const Spectrum& spec);

// bounds[i] (i = 1..K) caps the generators in positive degree i:
// max(s(i) - 2, 0).  Index 0 is unused and kept at 0.
std::vector<int> negative_rho_bounds(const Spectrum& spec);

// All descending tuples (b_1 >= ... >= b_count >= 0) with
// sum b_j (b_j + 1) = target, in descending lexicographic order.
std::vector<std::vector<int>> solve_b(long target, int count);

enum class Fate { Open, NoSolution, Nonexistent, Unstable, Exists };

struct Verdict {
  Fate fate = Fate::Open;
  std::string rule;    // elimination mechanism, set for Nonexistent/Unstable
  std::string method;  // construction, set for Exists
};

std::string format_verdict(const Verdict& v);

// Applies the elimination rules in their fixed order; first match wins.
// Returns an Open verdict when nothing applies.
Verdict eliminate(const MonadShape& shape);

struct CandidateRecord {
  Spectrum spectrum;
  std::map<int, int> rho;  // generator degree -> multiplicity (nonzero only)
  std::vector<int> a;
  std::optional<std::vector<int>> b;  // empty when no middle solves the c2 equation
  Verdict verdict;

  MonadShape shape() const { return MonadShape{a, b ? *b : std::vector<int>{}}; }
};

// Candidate presentations whose generators all sit in negative degrees.
// One record per (generator choice, middle solution); generator choices walk
// the rho_bounds intervals with the degree -1 count moving fastest.
std::vector<CandidateRecord> positive_candidates(long c2);

// Candidate presentations with at least one generator in positive degree.
// The degree -1 and degree 0 counts are pinned to the forced minimum, the
// remaining choices walk their bounds, and middle solutions that force a
// zero column are dropped.
std::vector<CandidateRecord> negative_candidates(long c2);

// Twist bookkeeping for the elementary-modification step: the new outer twist
// is r-1, the new middle parameter r-1-v, and c2 grows by u*v.
// Requires r >= 1, u >= v >= 1, u + v = 2r - 1, v <= r - 1.
MonadShape extend_shape(const MonadShape& base, int r, int u, int v);

// The shape of the curve family of bidegree (1, n-1) on a smooth quadric:
// a = (2^(n-1), (-1)^(n-3)), b = (1^(2n-3)), c2 = 2n.  Requires n >= 4.
MonadShape quadric_family_shape(int n);

// One row of the catalog of established (or refuted) presentations.
struct KnownMonad {
  long c2 = 0;
  std::string id;           // "M1".."M17" for the base catalog, else empty
  std::string spectrum_id;  // e.g. "S10.4"
  std::vector<int> spectrum;
  MonadShape shape;
  bool no_stable_bundle = false;  // shape admits no stable cohomology bundle
  std::string method;  // hartshorne | ein | serre-curve | extension |
                       // explicit-matrix | catalog (empty when refuted)
  std::string note;
  // Set when method == "extension".
  std::string ext_base;
  int ext_r = 0, ext_u = 0, ext_v = 0;
};

// The catalog for c2 in {2, 4, 6, 8, 10}; anything else is rejected.
std::vector<KnownMonad> known_table(long c2);

KnownMonad known_row(const std::string& id);

// Upgrades Open records to Exists where the catalog (or the quadric family)
// provides a construction for the same (spectrum, a, b).
void apply_known_constructions(std::vector<CandidateRecord>& records);

}  // namespace horrocks
