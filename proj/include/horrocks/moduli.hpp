#pragma once

#include <string>
#include <vector>

#include "horrocks/candidates.hpp"

namespace horrocks {

// The full list of middle twists {b_j} u {-b_j - 1} of a shape.
std::vector<int> expanded_middle(const MonadShape& shape);

// True when the shape admits no homotopies: no maps from the outer top term
// into the middle and none from the middle into the outer bottom term.
bool homotopy_free(const MonadShape& shape);

struct DimensionReport {
  Integer h;    // maps middle -> top
  Integer g;    // endomorphisms of the top term
  Integer w;    // symmetry reduction from the outer pairing
  Integer s;    // symmetry reduction from the middle pairing
  Integer dim;  // h - w - g - s
};

// Local dimension of the family of bundles presented by the shape; only
// defined for homotopy-free shapes (anything else is refused).
DimensionReport dimension_report(const MonadShape& shape);

struct DimensionRow {
  std::string spectrum_id;
  std::vector<int> spectrum;
  MonadShape shape;
  DimensionReport report;
  bool expected_dimension;  // dim equals 8*c2 - 5
};

// One row per homotopy-free shape of the catalog, c2 = 10 only.
std::vector<DimensionRow> dimension_table(long c2);

struct FamilyProbe {
  std::string name;
  std::string spectrum_id;
  std::vector<int> spectrum;
  MonadShape shape;
  bool component;  // generic member of an established component
  Integer dim;
  Integer h1_m5;  // h1 of a twist by -5, from the spectrum
  Integer h1_m3;  // h1 of a twist by -3, from the spectrum
};

struct SeparationEntry {
  std::string family;
  std::string component;
  std::string reason;
};

struct SeparationReport {
  std::vector<FamilyProbe> probes;
  std::vector<SeparationEntry> exclusions;
  std::vector<std::string> flags;  // reference values contradicted by computation
};

// Semicontinuity and dimension arguments separating the candidate families
// from the established components; c2 = 10 only.
SeparationReport component_separation(long c2);

}  // namespace horrocks
