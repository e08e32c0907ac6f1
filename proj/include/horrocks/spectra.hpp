#pragma once

#include <string>
#include <variant>
#include <vector>

#include "horrocks/cohomology.hpp"

namespace horrocks {

// All admissible spectra with the given c2, ordered by descending s(0) and,
// within equal s(0), by descending expanded multiset (compare the
// non-descending value lists entrywise; larger entry first wins).
// c2 must be a positive even integer.
std::vector<Spectrum> enumerate_spectra(long c2);

struct SpectrumValidation {
  // Set when the multiset passes every admissibility test.
  bool ok = false;
  Spectrum spectrum;               // meaningful only when ok
  std::vector<std::string> violations;  // human-readable, empty when ok
};

// Decides whether an integer multiset is the spectrum of some admissible
// candidate: symmetry of the shape described in Spectrum, every multiplicity
// positive, and the unit-multiplicity tail condition.  Violations are
// reported as data, not exceptions.
SpectrumValidation validate_spectrum(const std::vector<int>& values);

// Index of spec inside enumerate_spectra(spec.c2()), or -1.
int spectrum_index(const Spectrum& spec);

// Short identifier "S<c2>.<index>" used by every table renderer.
std::string spectrum_id(const Spectrum& spec);

std::string format_mult(const std::vector<int>& mult);

}  // namespace horrocks
