#include "kdvgal/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kdvgal/cache.hpp"
#include "kdvgal/errors.hpp"
#include "kdvgal/verify.hpp"

namespace kdvgal {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

constexpr int kMaxGenus = 6;
constexpr int kMaxDegree = 10;

struct Options {
  std::string cache;
  std::string format = "table";
  int jobs = 1;
  bool deterministic = false;

  int g = 0;
  std::string ks;
  int n = -1;

  std::string suite;
  SuiteConfig suite_cfg;
  std::string route = "virasoro";
  std::string output;
};

std::vector<int> parse_ks_list(const std::string& text) {
  std::vector<int> ks;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty() || part.size() > 4 || part.find_first_not_of("0123456789") != std::string::npos) {
      throw ConfigError("malformed --ks '" + text + "': expected comma-separated non-negative integers");
    }
    ks.push_back(std::stoi(part));
  }
  if (ks.empty() || text.back() == ',') throw ConfigError("malformed --ks '" + text + "'");
  return ks;
}

void print_value(std::ostream& out, OutputFormat f, const std::string& kind, int g, const std::vector<int>& ks,
                 const Rational& value, const std::string& text, const int* yexp) {
  switch (f) {
    case OutputFormat::Table:
      out << text << "\n";
      return;
    case OutputFormat::Json: {
      nlohmann::ordered_json j;
      j["kind"] = kind;
      j["g"] = g;
      j["ks"] = ks;
      j["value"] = to_string(value);
      if (yexp) j["yexp"] = *yexp;
      out << j.dump() << "\n";
      return;
    }
    case OutputFormat::Csv:
      out << "kind,g,ks,value" << (yexp ? ",yexp" : "") << "\n"
          << kind << "," << g << ",\"" << CorrelatorKey::make(g, ks).ks_string() << "\"," << to_string(value);
      if (yexp) out << "," << *yexp;
      out << "\n";
      return;
  }
}

void check_guard_rails(const SuiteConfig& c) {
  if (c.gmax > kMaxGenus) throw ConfigError("--gmax above the guard rail " + std::to_string(kMaxGenus));
  if (c.nmax > kMaxDegree) throw ConfigError("--nmax above the guard rail " + std::to_string(kMaxDegree));
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact KdV, Galilean-symmetry and BGW/NBI correlator computations", "kdvgal"};
  app.require_subcommand(1);
  app.add_option("--cache", o.cache, std::string("Correlator cache file (default: $") + kCacheEnv + ")");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--jobs", o.jobs, "Worker threads for verification fan-out")->check(CLI::Range(1, 256));
  app.add_flag("--deterministic", o.deterministic, "Single-threaded traversal");

  auto add_point = [&](CLI::App* sub) {
    sub->fallthrough();
    sub->add_option("--g", o.g, "Genus")->required()->check(CLI::Range(0, 1000));
    return sub;
  };
  CLI::App* wk = add_point(app.add_subcommand("wk", "Witten-Kontsevich intersection number"));
  wk->add_option("--ks", o.ks, "Comma-separated psi exponents")->required();
  CLI::App* cbgw = add_point(app.add_subcommand("cbgw", "cBGW correlator c with its power of x^2"));
  cbgw->add_option("--ks", o.ks, "Comma-separated time indices")->required();
  CLI::App* nbi = add_point(app.add_subcommand("nbi", "NBI correlator with its power of x^2/2"));
  nbi->add_option("--ks", o.ks, "Comma-separated time indices")->required();
  CLI::App* kn = add_point(app.add_subcommand("kn", "Integral of K_{3g-3+n-|k|} times psi classes"));
  CLI::Option* kn_ks = kn->add_option("--ks", o.ks, "Comma-separated psi exponents");
  CLI::Option* kn_n = kn->add_option("--n", o.n, "Number of points; only 0 is meaningful without --ks");
  kn_ks->excludes(kn_n);

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->fallthrough();
  verify->add_option("suite", o.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--gmax", o.suite_cfg.gmax, "Largest genus")->check(CLI::NonNegativeNumber);
  verify->add_option("--nmax", o.suite_cfg.nmax, "Largest number of points (kdv: checked time degree)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--kmax", o.suite_cfg.kmax, "Largest time index")->check(CLI::NonNegativeNumber);
  verify->add_option("--qmax", o.suite_cfg.qmax, "Largest power of the Galilean parameter")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--order", o.suite_cfg.order, "X-order of the initial-value and genus-1 checks")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--route", o.route, "NBI route for theorem18")->check(CLI::IsMember({"virasoro", "kappa"}));
  verify->add_option("--output", o.output, "Write the report to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const OutputFormat format = parse_output_format(o.format);
    if (o.cache.empty()) {
      if (const char* env = std::getenv(kCacheEnv)) o.cache = env;
    }
    Engines engines;
    if (!o.cache.empty()) {
      {
        std::ofstream probe(o.cache, std::ios::app);
        if (!probe) throw ConfigError("cache path " + o.cache + " is not writable");
      }
      load_cache_file(o.cache, engines);
    }

    int status = kExitOk;
    if (wk->parsed() || cbgw->parsed() || nbi->parsed() || kn->parsed()) {
      std::vector<int> ks;
      if (kn->parsed() && o.ks.empty()) {
        if (o.n != 0) throw ConfigError("kn needs --ks, or --n 0 for the zero-point integral");
      } else {
        ks = parse_ks_list(o.ks);
      }
      const CorrelatorKey key = CorrelatorKey::make(o.g, ks);
      if (wk->parsed()) {
        Rational v = engines.wk.correlator(key.genus, key.ks);
        print_value(out, format, "wk", key.genus, key.ks, v, to_string(v), nullptr);
      } else if (cbgw->parsed()) {
        BgwCoefficient c = engines.bgw.cbgw_correlator(key.genus, key.ks);
        print_value(out, format, "cbgw", key.genus, key.ks, c.value,
                    to_string(c.value) + " · (x²)^" + std::to_string(c.yexp), &c.yexp);
      } else if (nbi->parsed()) {
        NbiCoefficient c = engines.bgw.nbi_correlator(key.genus, key.ks);
        print_value(out, format, "nbi", key.genus, key.ks, c.value,
                    to_string(c.value) + " · (x²/2)^" + std::to_string(c.yexp), &c.yexp);
      } else {
        Rational v = engines.kappa.kn_psi_integral(key.genus, key.ks);
        print_value(out, format, "kn", key.genus, key.ks, v, to_string(v), nullptr);
      }
    } else {
      SuiteConfig cfg = o.suite_cfg;
      check_guard_rails(cfg);
      cfg.jobs = o.deterministic ? 1 : o.jobs;
      cfg.route = o.route == "kappa" ? NbiRoute::Kappa : NbiRoute::Virasoro;
      std::vector<VerificationReport> reports = run_suite(engines, o.suite, cfg);
      const std::string text = format_reports(reports, format);
      if (o.output.empty()) {
        out << text;
      } else {
        std::ofstream file(o.output, std::ios::trunc);
        if (!file) throw ConfigError("cannot write " + o.output);
        file << text;
      }
      for (const auto& r : reports) {
        if (!r.ok()) status = kExitFailed;
      }
      if (status != kExitOk) {
        for (const auto& r : reports) {
          if (const CheckRecord* f = r.first_failure()) {
            err << "FAILED " << r.identity << ": " << f->identity << " at " << f->location << " (lhs=" << f->lhs
                << ", rhs=" << f->rhs << ")\n";
          }
        }
      }
    }

    if (!o.cache.empty()) {
      bool dirty = false;
      for (Provenance p : {Provenance::WK, Provenance::cBGW, Provenance::NBI}) dirty = dirty || engines.table(p).dirty();
      if (dirty) save_cache_file(o.cache, engines);
    }
    return status;
  } catch (const ConsistencyError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace kdvgal
