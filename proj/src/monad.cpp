#include "horrocks/monad.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <map>
#include <sstream>

#include <json.hpp>

#include "horrocks/groebner.hpp"
#include "horrocks/linalg.hpp"

namespace horrocks {

std::vector<int> MonadPresentation::middle_parameters() const {
  std::vector<int> b;
  for (int d : bDegrees)
    if (d >= 0) b.push_back(d);
  std::sort(b.rbegin(), b.rend());
  return b;
}

long MonadPresentation::c2() const {
  long total = 0;
  for (int a : aDegrees) total += static_cast<long>(a) * (a + 1);
  for (int b : middle_parameters()) total -= static_cast<long>(b) * (b + 1);
  return total;
}

namespace {

using nlohmann::json;

Poly poly_from_json(const json& jp) {
  std::vector<Term> terms;
  for (const json& jt : jp) {
    Rational c;
    const json& jc = jt.at("c");
    if (jc.is_string()) {
      c = Rational(jc.get<std::string>());
      c.canonicalize();
    } else {
      c = Rational(jc.get<long>());
    }
    Monomial m;
    const json& je = jt.at("e");
    if (je.size() != 4)
      throw std::invalid_argument("monad JSON: exponent lists must have 4 entries");
    for (size_t i = 0; i < 4; ++i) m.e[i] = je[i].get<int>();
    terms.push_back({c, m});
  }
  return Poly::from_terms(std::move(terms));
}

json poly_to_json(const Poly& p) {
  json jp = json::array();
  for (const Term& t : p.terms()) {
    json jt;
    jt["c"] = t.c.get_str();
    jt["e"] = {t.m.e[0], t.m.e[1], t.m.e[2], t.m.e[3]};
    jp.push_back(jt);
  }
  return jp;
}

std::vector<std::vector<Poly>> matrix_from_json(const json& jm) {
  std::vector<std::vector<Poly>> mat;
  for (const json& jrow : jm) {
    std::vector<Poly> row;
    for (const json& jp : jrow) row.push_back(poly_from_json(jp));
    mat.push_back(std::move(row));
  }
  return mat;
}

}  // namespace

MonadPresentation parse_monad(const std::string& json_text) {
  json j = json::parse(json_text);
  if (j.contains("variables")) {
    std::vector<std::string> vars = j["variables"].get<std::vector<std::string>>();
    if (vars != std::vector<std::string>{"x", "y", "z", "w"})
      throw std::invalid_argument("monad JSON: variables must be x, y, z, w");
  }
  MonadPresentation m;
  m.cDegrees = j.at("cDegrees").get<std::vector<int>>();
  m.bDegrees = j.at("bDegrees").get<std::vector<int>>();
  m.aDegrees = j.at("aDegrees").get<std::vector<int>>();
  m.alpha = matrix_from_json(j.at("alpha"));
  m.beta = matrix_from_json(j.at("beta"));
  return m;
}

MonadPresentation load_monad(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open monad file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_monad(buf.str());
}

std::string monad_to_json(const MonadPresentation& m) {
  json j;
  j["variables"] = {"x", "y", "z", "w"};
  j["cDegrees"] = m.cDegrees;
  j["bDegrees"] = m.bDegrees;
  j["aDegrees"] = m.aDegrees;
  json ja = json::array();
  for (const auto& row : m.alpha) {
    json jrow = json::array();
    for (const Poly& p : row) jrow.push_back(poly_to_json(p));
    ja.push_back(jrow);
  }
  j["alpha"] = ja;
  json jb = json::array();
  for (const auto& row : m.beta) {
    json jrow = json::array();
    for (const Poly& p : row) jrow.push_back(poly_to_json(p));
    jb.push_back(jrow);
  }
  j["beta"] = jb;
  return j.dump(2);
}

namespace {

void check_matrix(const std::vector<std::vector<Poly>>& mat,
                  const std::vector<int>& target,
                  const std::vector<int>& source, const char* label,
                  std::vector<std::string>& issues) {
  std::ostringstream os;
  if (mat.size() != target.size()) {
    os << label << ": expected " << target.size() << " rows, got " << mat.size();
    issues.push_back(os.str());
    return;
  }
  for (size_t i = 0; i < mat.size(); ++i) {
    if (mat[i].size() != source.size()) {
      os.str("");
      os << label << " row " << i << ": expected " << source.size()
         << " entries, got " << mat[i].size();
      issues.push_back(os.str());
      return;
    }
  }
  for (size_t i = 0; i < target.size(); ++i) {
    for (size_t j = 0; j < source.size(); ++j) {
      int deg = target[i] - source[j];
      const Poly& p = mat[i][j];
      if (p.is_zero()) continue;
      if (deg < 0) {
        os.str("");
        os << label << "[" << i << "][" << j
           << "]: nonzero entry where the forced degree " << deg
           << " is negative";
        issues.push_back(os.str());
      } else if (deg == 0) {
        os.str("");
        os << label << "[" << i << "][" << j
           << "]: nonzero constant entry breaks minimality";
        issues.push_back(os.str());
      } else if (!p.homogeneous_of(deg)) {
        os.str("");
        os << label << "[" << i << "][" << j
           << "]: entry is not homogeneous of degree " << deg;
        issues.push_back(os.str());
      }
    }
  }
}

}  // namespace

std::vector<std::string> validate_presentation(const MonadPresentation& m) {
  std::vector<std::string> issues;

  std::vector<int> image = m.bDegrees;
  for (int& d : image) d = -d - 1;
  std::vector<int> sorted_b = m.bDegrees;
  std::sort(sorted_b.begin(), sorted_b.end());
  std::sort(image.begin(), image.end());
  if (sorted_b != image)
    issues.push_back("middle twists are not closed under d -> -d-1");

  check_matrix(m.alpha, m.bDegrees, m.cDegrees, "alpha", issues);
  check_matrix(m.beta, m.aDegrees, m.bDegrees, "beta", issues);
  return issues;
}

bool compose_is_zero(const MonadPresentation& m) {
  for (size_t i = 0; i < m.beta.size(); ++i) {
    for (size_t k = 0; k < m.cDegrees.size(); ++k) {
      Poly acc;
      for (size_t j = 0; j < m.bDegrees.size(); ++j)
        acc = acc + m.beta[i][j] * m.alpha[j][k];
      if (!acc.is_zero()) return false;
    }
  }
  return true;
}

namespace {

std::vector<Monomial> monomial_basis(int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b)
      for (int c = d - a - b; c >= 0; --c) {
        Monomial m;
        m.e = {a, b, c, d - a - b - c};
        out.push_back(m);
      }
  std::sort(out.begin(), out.end(),
            [](const Monomial& A, const Monomial& B) { return compare_drl(A, B) > 0; });
  return out;
}

}  // namespace

SectionMatrix section_matrix(const std::vector<std::vector<Poly>>& phi,
                             const std::vector<int>& row_degrees,
                             const std::vector<int>& col_degrees, int l) {
  std::vector<std::vector<Monomial>> row_bases, col_bases;
  std::vector<std::map<Monomial, size_t, DrlGreater>> row_index;
  std::vector<size_t> row_offsets, col_offsets;
  size_t rows = 0, cols = 0;
  for (int d : row_degrees) {
    row_offsets.push_back(rows);
    row_bases.push_back(monomial_basis(d + l));
    std::map<Monomial, size_t, DrlGreater> idx;
    for (size_t k = 0; k < row_bases.back().size(); ++k)
      idx[row_bases.back()[k]] = k;
    row_index.push_back(std::move(idx));
    rows += row_bases.back().size();
  }
  for (int d : col_degrees) {
    col_offsets.push_back(cols);
    col_bases.push_back(monomial_basis(d + l));
    cols += col_bases.back().size();
  }

  SectionMatrix sm;
  sm.rows = static_cast<long>(rows);
  sm.cols = static_cast<long>(cols);
  sm.entries.assign(rows, std::vector<Rational>(cols, Rational(0)));

  for (size_t i = 0; i < row_degrees.size(); ++i) {
    for (size_t j = 0; j < col_degrees.size(); ++j) {
      const Poly& p = phi[i][j];
      if (p.is_zero()) continue;
      for (size_t cb = 0; cb < col_bases[j].size(); ++cb) {
        const Monomial& mu = col_bases[j][cb];
        for (const Term& t : p.terms()) {
          Monomial target = t.m * mu;
          auto it = row_index[i].find(target);
          if (it == row_index[i].end()) continue;  // cannot happen for homogeneous entries
          sm.entries[row_offsets[i] + it->second][col_offsets[j] + cb] += t.c;
        }
      }
    }
  }
  return sm;
}

namespace {

long section_rank(const SectionMatrix& sm) {
  if (sm.rows == 0 || sm.cols == 0) return 0;
  return rank_rational(sm.entries);
}

}  // namespace

Integer h0_E(const MonadPresentation& m, int l) {
  SectionMatrix sm = section_matrix(m.beta, m.aDegrees, m.bDegrees, l);
  Integer kernel = sm.cols - section_rank(sm);
  for (int c : m.cDegrees) kernel -= h0_p3(c + l);
  return kernel;
}

Integer h1_E(const MonadPresentation& m, int l) {
  SectionMatrix sm = section_matrix(m.beta, m.aDegrees, m.bDegrees, l);
  return Integer(sm.rows - section_rank(sm));
}

CheckStatus MonadReport::overall() const {
  bool inconclusive = false;
  for (const MonadCheck& c : checks) {
    if (c.status == CheckStatus::Fail) return CheckStatus::Fail;
    if (c.status == CheckStatus::Inconclusive) inconclusive = true;
  }
  return inconclusive ? CheckStatus::Inconclusive : CheckStatus::Pass;
}

MonadReport verify_monad(const MonadPresentation& m, const VerifyOptions& opt) {
  MonadReport rep;
  auto add = [&](const std::string& name, CheckStatus st, const std::string& detail) {
    rep.checks.push_back({name, st, detail});
  };

  std::vector<std::string> issues = validate_presentation(m);
  if (!issues.empty()) {
    std::ostringstream os;
    for (size_t i = 0; i < issues.size(); ++i)
      os << (i ? "; " : "") << issues[i];
    add("structure", CheckStatus::Fail, os.str());
    return rep;
  }
  add("structure", CheckStatus::Pass, "");

  bool cz = compose_is_zero(m);
  add("composition", cz ? CheckStatus::Pass : CheckStatus::Fail,
      cz ? "" : "beta * alpha != 0");
  if (!cz) return rep;

  auto degeneracy = [&opt](const std::vector<std::vector<Poly>>& mat, int k)
      -> std::pair<CheckStatus, std::string> {
    std::ostringstream os;
    if (degeneracy_locus_empty(mat, k, opt.field_char)) {
      os << "certified empty at p=" << opt.field_char;
      return {CheckStatus::Pass, os.str()};
    }
    if (degeneracy_locus_empty(mat, k, opt.backup_char)) {
      os << "certified empty at backup p=" << opt.backup_char;
      return {CheckStatus::Pass, os.str()};
    }
    os << "no emptiness certificate at p=" << opt.field_char << " or p="
       << opt.backup_char;
    return {CheckStatus::Inconclusive, os.str()};
  };

  auto fut_alpha = std::async(std::launch::async, degeneracy, std::cref(m.alpha),
                              static_cast<int>(m.cDegrees.size()));
  auto fut_beta = std::async(std::launch::async, degeneracy, std::cref(m.beta),
                             static_cast<int>(m.aDegrees.size()));
  auto ra = fut_alpha.get();
  auto rb = fut_beta.get();
  add("alpha full rank everywhere", ra.first, ra.second);
  add("beta full rank everywhere", rb.first, rb.second);

  Integer h0 = h0_E(m, 0);
  {
    std::ostringstream os;
    os << "h0(E) = " << h0.get_str();
    add("stability", h0 == 0 ? CheckStatus::Pass : CheckStatus::Fail, os.str());
  }

  if (opt.spectrum) {
    const Spectrum& spec = *opt.spectrum;
    {
      std::ostringstream os;
      os << "c2 from twists = " << m.c2() << ", from spectrum = " << spec.c2();
      add("c2 consistency", m.c2() == spec.c2() ? CheckStatus::Pass : CheckStatus::Fail,
          os.str());
    }
    bool series_ok = true;
    std::ostringstream os;
    for (int l = opt.l_min; l <= std::min(opt.l_max, -1); ++l) {
      Integer got = h1_E(m, l);
      Integer want = spectrum_h1(spec, l);
      if (l > opt.l_min) os << " ";
      os << "h1(" << l << ")=" << got.get_str();
      if (got != want) {
        series_ok = false;
        os << "(expected " << want.get_str() << ")";
      }
    }
    add("h1 series matches spectrum",
        series_ok ? CheckStatus::Pass : CheckStatus::Fail, os.str());
  }

  return rep;
}

std::string format_report(const MonadReport& report) {
  std::ostringstream os;
  for (const MonadCheck& c : report.checks) {
    os << c.name << ": ";
    switch (c.status) {
      case CheckStatus::Pass:
        os << "PASS";
        break;
      case CheckStatus::Fail:
        os << "FAIL";
        break;
      case CheckStatus::Inconclusive:
        os << "INCONCLUSIVE";
        break;
    }
    if (!c.detail.empty()) os << "  [" << c.detail << "]";
    os << "\n";
  }
  os << "overall: ";
  switch (report.overall()) {
    case CheckStatus::Pass:
      os << "PASS";
      break;
    case CheckStatus::Fail:
      os << "FAIL";
      break;
    case CheckStatus::Inconclusive:
      os << "INCONCLUSIVE";
      break;
  }
  os << "\n";
  return os.str();
}

}  // namespace horrocks
