#include "horrocks/cli.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "horrocks/monad.hpp"
#include "horrocks/tables.hpp"

namespace horrocks {

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> vals;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    if (token.empty()) continue;
    vals.push_back(std::stoi(token));
  }
  return vals;
}

std::pair<int, int> parse_l_range(const std::string& text) {
  size_t colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("l-range must look like -8:-1");
  int lo = std::stoi(text.substr(0, colon));
  int hi = std::stoi(text.substr(colon + 1));
  if (lo > hi) std::swap(lo, hi);
  return {lo, hi};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"classification pipeline for minimal rank-2 monads on P^3"};
  app.require_subcommand(0, 1);

  std::int64_t field_char = 32003;
  std::string format = "table";
  std::string l_range = "-8:-1";
  app.add_option("--char", field_char, "prime field characteristic (> 3)")
      ->envname("HORROCKS_CHAR");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->envname("HORROCKS_FORMAT");
  app.add_option("--l-range", l_range, "twist range lo:hi for h1 comparisons")
      ->envname("HORROCKS_LRANGE");

  auto* sp = app.add_subcommand("spectra", "enumerate admissible spectra");
  long sp_c2 = 0;
  std::string sp_validate;
  sp->add_option("--c2", sp_c2, "second Chern class (positive even)");
  sp->add_option("--validate", sp_validate,
                 "comma-separated integer multiset to test for admissibility");

  auto* cand = app.add_subcommand("candidates", "enumerate candidate presentations");
  long cand_c2 = 0;
  bool cand_negative = false;
  cand->add_option("--c2", cand_c2, "second Chern class (positive even)")
      ->required();
  cand->add_flag("--negative", cand_negative,
                 "presentations with generators in positive degree");

  auto* ver = app.add_subcommand("verify", "verify explicit presentation files");
  std::vector<std::string> ver_files;
  std::string ver_spectrum;
  ver->add_option("files", ver_files, "presentation JSON files")->required();
  ver->add_option("--spectrum", ver_spectrum,
                  "expected spectrum as a multiplicity vector, e.g. 1,2,1,1");

  auto* tab = app.add_subcommand("tables", "emit the reference tables");
  bool tab_all = false;
  std::string tab_only;
  long tab_c2 = 10;
  tab->add_flag("--all", tab_all, "emit all four reference tables");
  tab->add_option("--only", tab_only, "one table: spectra|terms|candidates|dimensions|separation");
  tab->add_option("--c2", tab_c2, "second Chern class for the tables");

  std::vector<std::string> argv_store;
  argv_store.push_back("horrocks");
  for (const std::string& a : args) argv_store.push_back(a);
  std::vector<const char*> argv;
  argv.reserve(argv_store.size());
  for (const std::string& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    TableFormat fmt = parse_format(format);

    if (sp->parsed()) {
      if (!sp_validate.empty()) {
        SpectrumValidation res = validate_spectrum(parse_int_list(sp_validate));
        if (res.ok) {
          out << "admissible: " << format_mult(res.spectrum.mult) << "\n";
          return 0;
        }
        for (const std::string& v : res.violations) out << v << "\n";
        return 1;
      }
      out << render_spectra(sp_c2, fmt);
      return 0;
    }

    if (cand->parsed()) {
      out << render_candidates(cand_c2, cand_negative, fmt);
      return 0;
    }

    if (ver->parsed()) {
      VerifyOptions opts;
      opts.field_char = field_char;
      opts.backup_char = field_char == 65537 ? 32003 : 65537;
      auto [lo, hi] = parse_l_range(l_range);
      opts.l_min = lo;
      opts.l_max = hi;
      if (!ver_spectrum.empty()) {
        std::vector<int> mult = parse_int_list(ver_spectrum);
        if (mult.empty())
          throw std::invalid_argument("--spectrum needs a multiplicity vector");
        opts.spectrum = Spectrum{mult};
      }

      // Bounded pool: at most four presentations in flight.
      size_t n = ver_files.size();
      std::vector<MonadReport> reports(n);
      std::vector<std::string> load_errors(n);
      std::atomic<size_t> next{0};
      auto work = [&]() {
        while (true) {
          size_t i = next.fetch_add(1);
          if (i >= n) break;
          try {
            MonadPresentation m = load_monad(ver_files[i]);
            reports[i] = verify_monad(m, opts);
          } catch (const std::exception& e) {
            load_errors[i] = e.what();
          }
        }
      };
      size_t workers = std::min<size_t>(4, n);
      std::vector<std::thread> pool;
      for (size_t i = 0; i < workers; ++i) pool.emplace_back(work);
      for (std::thread& t : pool) t.join();

      bool any_fail = false, any_inconclusive = false, any_error = false;
      for (size_t i = 0; i < n; ++i) {
        out << "== " << ver_files[i] << " ==\n";
        if (!load_errors[i].empty()) {
          err << "error: " << load_errors[i] << "\n";
          any_error = true;
          continue;
        }
        out << format_report(reports[i]);
        if (reports[i].overall() == CheckStatus::Fail) any_fail = true;
        if (reports[i].overall() == CheckStatus::Inconclusive)
          any_inconclusive = true;
      }
      if (any_error) return 2;
      if (any_fail) return 1;
      if (any_inconclusive) return 3;
      return 0;
    }

    if (tab->parsed()) {
      if (!tab_only.empty()) {
        if (tab_only == "spectra")
          out << render_spectra(tab_c2, fmt);
        else if (tab_only == "terms")
          out << render_terms(tab_c2, fmt);
        else if (tab_only == "candidates")
          out << render_candidates(tab_c2, false, fmt);
        else if (tab_only == "dimensions")
          out << render_dimensions(tab_c2, fmt);
        else if (tab_only == "separation")
          out << render_separation(tab_c2);
        else
          throw std::invalid_argument("unknown table: " + tab_only);
        return 0;
      }
      if (tab_all) {
        out << "== spectra (c2=" << tab_c2 << ") ==\n"
            << render_spectra(tab_c2, fmt) << "\n"
            << "== generator bounds (c2=" << tab_c2 << ") ==\n"
            << render_terms(tab_c2, fmt) << "\n"
            << "== candidates (c2=" << tab_c2 << ") ==\n"
            << render_candidates(tab_c2, false, fmt) << "\n"
            << "== dimensions (c2=" << tab_c2 << ") ==\n"
            << render_dimensions(tab_c2, fmt);
        return 0;
      }
      throw std::invalid_argument("tables: pass --all or --only <name>");
    }

    out << app.help();
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace horrocks
