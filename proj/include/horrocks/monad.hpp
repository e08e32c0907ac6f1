#pragma once

#include <optional>
#include <string>
#include <vector>

#include "horrocks/cohomology.hpp"
#include "horrocks/poly.hpp"

namespace horrocks {

// Explicit presentation of a complex of line-bundle sums
//   C --alpha--> B --beta--> A
// with the middle twists closed under d -> -d-1.  alpha is |B| x |C| and
// beta is |A| x |B|; entry (i, j) maps summand j of the source to summand i
// of the target and must be homogeneous of degree target_i - source_j (zero
// when that degree is not positive).
struct MonadPresentation {
  std::vector<int> cDegrees;
  std::vector<int> bDegrees;
  std::vector<int> aDegrees;
  std::vector<std::vector<Poly>> alpha;
  std::vector<std::vector<Poly>> beta;

  // Twist data (a, b) recovered from the degree lists.
  std::vector<int> outer_twists() const { return aDegrees; }
  std::vector<int> middle_parameters() const;
  long c2() const;
};

MonadPresentation parse_monad(const std::string& json_text);
MonadPresentation load_monad(const std::string& path);
std::string monad_to_json(const MonadPresentation& m);

// Structural problems: dimension mismatches, middle twists not closed under
// d -> -d-1, entries of the wrong degree, nonzero entries where minimality
// forces zero.  Empty result means well-formed.
std::vector<std::string> validate_presentation(const MonadPresentation& m);

// Exact check that beta . alpha vanishes identically.
bool compose_is_zero(const MonadPresentation& m);

struct SectionMatrix {
  long rows = 0;
  long cols = 0;
  std::vector<std::vector<Rational>> entries;
};

// Matrix of the map on twisted global sections induced by phi, with respect
// to the descending monomial bases in each degree.
SectionMatrix section_matrix(const std::vector<std::vector<Poly>>& phi,
                             const std::vector<int>& row_degrees,
                             const std::vector<int>& col_degrees, int l);

// Cohomology of the complex's homology bundle, valid for every twist l:
// sections come from the kernel of beta on sections minus the sections of
// the left term; h1 is the cokernel of beta on sections.
Integer h0_E(const MonadPresentation& m, int l);
Integer h1_E(const MonadPresentation& m, int l);

enum class CheckStatus { Pass, Fail, Inconclusive };

struct MonadCheck {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct MonadReport {
  std::vector<MonadCheck> checks;
  CheckStatus overall() const;
};

struct VerifyOptions {
  std::int64_t field_char = 32003;
  std::int64_t backup_char = 65537;
  int l_min = -8;
  int l_max = -1;
  std::optional<Spectrum> spectrum;  // enables the h1-series comparison
};

// Runs the whole battery: structure, exact composition, both degeneracy
// certificates (falling back to the backup prime), stability of the
// cohomology bundle, and the twisted h1 series against the spectrum when one
// is supplied.  A certificate that fails at both primes makes its check, and
// the whole report, inconclusive rather than failed.
MonadReport verify_monad(const MonadPresentation& m, const VerifyOptions& opt);

std::string format_report(const MonadReport& report);

}  // namespace horrocks
