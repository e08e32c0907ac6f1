#include "horrocks/tables.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace horrocks {

namespace {

using nlohmann::json;

std::string aligned(const std::vector<std::string>& header,
                    const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> widths(header.size(), 0);
  for (size_t c = 0; c < header.size(); ++c) widths[c] = header[c].size();
  for (const auto& row : rows)
    for (size_t c = 0; c < row.size() && c < widths.size(); ++c)
      widths[c] = std::max(widths[c], row[c].size());

  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& cells) {
    std::string line;
    for (size_t c = 0; c < cells.size(); ++c) {
      std::string cell = cells[c];
      if (c + 1 < cells.size()) cell.resize(widths[c], ' ');
      line += cell;
      if (c + 1 < cells.size()) line += "  ";
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string csv(const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& cells) {
    for (size_t c = 0; c < cells.size(); ++c) {
      if (c) os << ",";
      os << csv_field(cells[c]);
    }
    os << "\n";
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return os.str();
}

std::string run_length(const std::vector<int>& vals) {
  std::ostringstream os;
  size_t i = 0;
  bool first = true;
  while (i < vals.size()) {
    size_t j = i;
    while (j < vals.size() && vals[j] == vals[i]) ++j;
    if (!first) os << " ";
    first = false;
    os << vals[i];
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

std::string rho_cell(const std::map<int, int>& rho) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [deg, count] : rho) {
    if (!first) os << " ";
    first = false;
    os << "rho(" << deg << ")=" << count;
  }
  return os.str();
}

json verdict_json(const Verdict& v) {
  json j;
  switch (v.fate) {
    case Fate::Open:
      j["fate"] = "OPEN";
      break;
    case Fate::NoSolution:
      j["fate"] = "NO_SOLUTION";
      break;
    case Fate::Nonexistent:
      j["fate"] = "NONEXISTENT";
      j["rule"] = v.rule;
      break;
    case Fate::Unstable:
      j["fate"] = "UNSTABLE";
      j["rule"] = v.rule;
      break;
    case Fate::Exists:
      j["fate"] = "EXISTS";
      j["method"] = v.method;
      break;
  }
  return j;
}

}  // namespace

TableFormat parse_format(const std::string& name) {
  if (name == "table") return TableFormat::Table;
  if (name == "csv") return TableFormat::Csv;
  if (name == "json") return TableFormat::Json;
  throw std::invalid_argument("unknown format: " + name);
}

std::string render_spectra(long c2, TableFormat f) {
  std::vector<Spectrum> all = enumerate_spectra(c2);
  if (f == TableFormat::Json) {
    json arr = json::array();
    for (size_t i = 0; i < all.size(); ++i) {
      json j;
      j["id"] = "S" + std::to_string(c2) + "." + std::to_string(i + 1);
      j["spectrum"] = all[i].mult;
      j["values"] = all[i].values();
      arr.push_back(j);
    }
    return arr.dump(2) + "\n";
  }
  std::vector<std::vector<std::string>> rows;
  for (size_t i = 0; i < all.size(); ++i)
    rows.push_back({"S" + std::to_string(c2) + "." + std::to_string(i + 1),
                    format_mult(all[i].mult), run_length(all[i].values())});
  std::vector<std::string> header = {"id", "spectrum", "values"};
  return f == TableFormat::Csv ? csv(header, rows) : aligned(header, rows);
}

namespace {

std::string bounds_cell(const Spectrum& spec) {
  RhoBounds rb = rho_bounds(spec);
  std::ostringstream os;
  os << "rho(" << rb.top_degree << ")=" << rb.top_count;
  for (int i = spec.top() - 1; i >= 0; --i) {
    auto [lo, hi] = rb.intervals[static_cast<size_t>(i)];
    os << ", rho(" << -(i + 1) << ") in {";
    for (int v = lo; v <= hi; ++v) {
      if (v > lo) os << ",";
      os << v;
    }
    os << "}";
  }
  return os.str();
}

}  // namespace

std::string render_terms(long c2, TableFormat f) {
  std::vector<Spectrum> all = enumerate_spectra(c2);
  if (f == TableFormat::Json) {
    json arr = json::array();
    for (size_t i = 0; i < all.size(); ++i) {
      json j;
      j["id"] = "S" + std::to_string(c2) + "." + std::to_string(i + 1);
      j["spectrum"] = all[i].mult;
      RhoBounds rb = rho_bounds(all[i]);
      json bounds = json::object();
      bounds[std::to_string(rb.top_degree)] = {rb.top_count, rb.top_count};
      for (int k = 0; k < all[i].top(); ++k)
        bounds[std::to_string(-(k + 1))] = {rb.intervals[static_cast<size_t>(k)].first,
                                            rb.intervals[static_cast<size_t>(k)].second};
      j["bounds"] = bounds;
      arr.push_back(j);
    }
    return arr.dump(2) + "\n";
  }
  std::vector<std::vector<std::string>> rows;
  for (size_t i = 0; i < all.size(); ++i)
    rows.push_back({"S" + std::to_string(c2) + "." + std::to_string(i + 1),
                    format_mult(all[i].mult), bounds_cell(all[i])});
  std::vector<std::string> header = {"id", "spectrum", "generator bounds"};
  return f == TableFormat::Csv ? csv(header, rows) : aligned(header, rows);
}

std::string render_candidates(long c2, bool negative, TableFormat f) {
  std::vector<CandidateRecord> records =
      negative ? negative_candidates(c2) : positive_candidates(c2);
  if (negative)
    for (CandidateRecord& rec : records) rec.verdict = eliminate(rec.shape());
  apply_known_constructions(records);

  if (f == TableFormat::Json) {
    json arr = json::array();
    for (const CandidateRecord& rec : records) {
      json j;
      j["spectrum"] = rec.spectrum.mult;
      j["a"] = rec.a;
      if (rec.b)
        j["b"] = *rec.b;
      else
        j["b"] = nullptr;
      j["verdict"] = verdict_json(rec.verdict);
      arr.push_back(j);
    }
    return arr.dump(2) + "\n";
  }

  std::vector<std::vector<std::string>> rows;
  for (const CandidateRecord& rec : records) {
    rows.push_back({spectrum_id(rec.spectrum), format_mult(rec.spectrum.mult),
                    rho_cell(rec.rho), format_mult(rec.a),
                    rec.b ? format_mult(*rec.b) : "-",
                    format_verdict(rec.verdict)});
  }
  std::vector<std::string> header = {"id",       "spectrum", "generators",
                                     "a",        "b",        "verdict"};
  return f == TableFormat::Csv ? csv(header, rows) : aligned(header, rows);
}

std::string render_dimensions(long c2, TableFormat f) {
  std::vector<DimensionRow> rows = dimension_table(c2);
  if (f == TableFormat::Json) {
    json arr = json::array();
    for (const DimensionRow& r : rows) {
      json j;
      j["id"] = r.spectrum_id;
      j["spectrum"] = r.spectrum;
      j["b"] = r.shape.b;
      j["a"] = r.shape.a;
      j["w"] = r.report.w.get_str();
      j["g"] = r.report.g.get_str();
      j["s"] = r.report.s.get_str();
      j["h"] = r.report.h.get_str();
      j["dim"] = r.report.dim.get_str();
      j["expectedDimension"] = r.expected_dimension;
      arr.push_back(j);
    }
    return arr.dump(2) + "\n";
  }
  std::vector<std::vector<std::string>> cells;
  for (const DimensionRow& r : rows) {
    std::vector<std::string> row = {
        format_mult(r.spectrum),       format_mult(r.shape.b),
        format_mult(r.shape.a),        r.report.w.get_str(),
        r.report.g.get_str(),          r.report.s.get_str(),
        r.report.h.get_str(),          r.report.dim.get_str()};
    if (f == TableFormat::Table)
      row.push_back(r.expected_dimension ? "*" : "");
    cells.push_back(std::move(row));
  }
  std::vector<std::string> header = {"spectrum", "b", "a", "w",
                                     "g",        "s", "h", "dim"};
  if (f == TableFormat::Table) header.push_back("");
  return f == TableFormat::Csv ? csv(header, cells) : aligned(header, cells);
}

std::string render_separation(long c2) {
  SeparationReport rep = component_separation(c2);
  std::vector<std::vector<std::string>> rows;
  for (const FamilyProbe& p : rep.probes)
    rows.push_back({p.name, p.spectrum_id, format_mult(p.spectrum),
                    p.component ? "component" : "family", p.dim.get_str(),
                    p.h1_m5.get_str(), p.h1_m3.get_str()});
  std::ostringstream os;
  os << aligned({"name", "id", "spectrum", "kind", "dim", "h1(-5)", "h1(-3)"},
                rows);
  os << "\nexclusions:\n";
  for (const SeparationEntry& e : rep.exclusions)
    os << "  " << e.family << " is not contained in " << e.component << ": "
       << e.reason << "\n";
  if (!rep.flags.empty()) {
    os << "\nflags:\n";
    for (const std::string& fl : rep.flags) os << "  " << fl << "\n";
  }
  return os.str();
}

}  // namespace horrocks
