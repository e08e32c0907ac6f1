#include "horrocks/spectra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace horrocks {

namespace {

bool tail_rule_holds(const std::vector<int>& mult) {
  // Once a multiplicity equals 1 at some level >= 1, every higher level must
  // stay at 1.
  bool seen_one = false;
  for (size_t k = 1; k < mult.size(); ++k) {
    if (seen_one && mult[k] != 1) return false;
    if (mult[k] == 1) seen_one = true;
  }
  return true;
}

// Ordering used by every table: descending s(0) first, then descending
// expanded multiset (entrywise on the non-descending value lists).
bool spectrum_before(const Spectrum& a, const Spectrum& b) {
  if (a.mult[0] != b.mult[0]) return a.mult[0] > b.mult[0];
  std::vector<int> va = a.values();
  std::vector<int> vb = b.values();
  for (size_t i = 0; i < va.size() && i < vb.size(); ++i)
    if (va[i] != vb[i]) return va[i] > vb[i];
  return va.size() < vb.size();
}

}  // namespace

std::vector<Spectrum> enumerate_spectra(long c2) {
  if (c2 <= 0 || c2 % 2 != 0)
    throw std::invalid_argument(
        "enumerate_spectra: c2 must be a positive even integer");
  long n = c2 / 2;

  std::vector<Spectrum> out;
  std::vector<int> parts;
  // Walk all compositions of n into positive parts; keep those obeying the
  // tail rule.
  auto rec = [&](auto&& self, long remaining) -> void {
    if (remaining == 0) {
      if (tail_rule_holds(parts)) out.push_back(Spectrum{parts});
      return;
    }
    for (long v = 1; v <= remaining; ++v) {
      parts.push_back(static_cast<int>(v));
      self(self, remaining - v);
      parts.pop_back();
    }
  };
  rec(rec, n);

  std::stable_sort(out.begin(), out.end(), spectrum_before);
  return out;
}

SpectrumValidation validate_spectrum(const std::vector<int>& values) {
  SpectrumValidation res;
  if (values.empty()) {
    res.violations.push_back("empty multiset");
    return res;
  }

  std::map<int, int> count;
  for (int v : values) ++count[v];
  int max_val = *std::max_element(values.begin(), values.end());
  int min_val = *std::min_element(values.begin(), values.end());
  int K = std::max({max_val, -min_val - 1, 0});

  auto cnt = [&](int v) {
    auto it = count.find(v);
    return it == count.end() ? 0 : it->second;
  };

  std::ostringstream msg;
  std::vector<int> mult(static_cast<size_t>(K) + 1, 0);
  for (int k = 0; k <= K; ++k) {
    int pos = cnt(k);
    int neg = cnt(-k - 1);
    if (pos != neg) {
      msg.str("");
      msg << "multiplicity of " << k << " is " << pos << " but multiplicity of "
          << (-k - 1) << " is " << neg;
      res.violations.push_back(msg.str());
    }
    mult[static_cast<size_t>(k)] = pos;
    if (pos == 0 && neg == 0) {
      msg.str("");
      msg << "level " << k << " is missing";
      res.violations.push_back(msg.str());
    }
  }

  bool seen_one = false;
  for (int k = 1; k <= K; ++k) {
    int m = mult[static_cast<size_t>(k)];
    if (seen_one && m > 1) {
      msg.str("");
      msg << "multiplicity rises to " << m << " at level " << k
          << " after reaching 1";
      res.violations.push_back(msg.str());
      break;
    }
    if (m == 1) seen_one = true;
  }

  if (res.violations.empty()) {
    res.ok = true;
    res.spectrum = Spectrum{mult};
  }
  return res;
}

int spectrum_index(const Spectrum& spec) {
  long c2 = spec.c2();
  if (c2 <= 0 || c2 % 2 != 0) return -1;
  std::vector<Spectrum> all = enumerate_spectra(c2);
  for (size_t i = 0; i < all.size(); ++i)
    if (all[i] == spec) return static_cast<int>(i);
  return -1;
}

std::string spectrum_id(const Spectrum& spec) {
  std::ostringstream os;
  int idx = spectrum_index(spec);
  os << "S" << spec.c2() << ".";
  if (idx < 0)
    os << "?";
  else
    os << idx + 1;
  return os.str();
}

std::string format_mult(const std::vector<int>& mult) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < mult.size(); ++i) {
    if (i) os << ",";
    os << mult[i];
  }
  os << ")";
  return os.str();
}

}  // namespace horrocks
