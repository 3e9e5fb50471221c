#include <algorithm>
#include <chrono>

#include "kdvgal/errors.hpp"
#include "kdvgal/galilean.hpp"
#include "kdvgal/verify.hpp"

namespace kdvgal {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"kdv",   "hirota",     "theorem18", "cor41", "cor42",     "galilean-group",
                                                 "initial", "dual-route", "wk",        "structure", "all"};
  return names;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

std::vector<VerificationReport> kdv_suite(Engines& e, const SuiteConfig& c) {
  require(c.nmax >= 0, "kdv needs nmax >= 0");
  TruncationSpec t{c.gmax, c.nmax + 5, std::max(c.kmax, 1), c.qmax, c.qmax};
  const GradedSeries u = solution_from_free_energy(e.wk.free_energy(t));
  VerificationReport plain = check_kdv(u);
  plain.identity = "kdv-wk";
  std::vector<VerificationReport> out{plain};
  if (c.qmax > 0) {
    VerificationReport moved = check_kdv(transform_solution(u, GalileanMap::formal()));
    moved.identity = "kdv-galilean";
    out.push_back(moved);
  }
  return out;
}

std::vector<VerificationReport> hirota_suite(Engines& e, const SuiteConfig& c) {
  require(c.gmax >= 1 && c.nmax >= 1 && c.kmax >= 1, "hirota needs gmax, nmax, kmax >= 1");
  TruncationSpec t{c.gmax, c.nmax + 2, c.kmax, c.qmax, c.qmax};
  const HirotaWindow w{std::min(c.nmax, 2 * c.gmax), c.nmax};
  const GradedSeries f = e.wk.free_energy(t);
  VerificationReport plain = check_hirota(f, {0, 1}, w);
  plain.identity = "hirota-wk";
  std::vector<VerificationReport> out{plain};
  if (c.qmax > 0) {
    VerificationReport moved = check_hirota(transform_log_tau(f, GalileanMap::formal()), {0, 1}, w);
    moved.identity = "hirota-galilean";
    out.push_back(moved);
  }
  return out;
}

std::vector<VerificationReport> one(const std::string& name, Engines& e, const SuiteConfig& c) {
  const Bounds b{c.gmax, c.nmax, c.kmax};
  if (name == "kdv") return kdv_suite(e, c);
  if (name == "hirota") return hirota_suite(e, c);
  if (name == "theorem18") return {check_theorem18(e, b, c.route, c.jobs)};
  if (name == "cor41") return {check_cor41(e, b, c.jobs)};
  if (name == "cor42") return {check_cor42(e, b, c.jobs)};
  if (name == "dual-route") return {check_dual_route(e, b, c.jobs)};
  if (name == "galilean-group") {
    require(c.qmax >= 1, "galilean-group needs qmax >= 1");
    return {check_galilean_group(e, {c.gmax, std::max(c.nmax + 2, 4), c.kmax, c.qmax, c.qmax})};
  }
  if (name == "initial") {
    require(c.order >= 0, "initial needs order >= 0");
    return {e.bgw.initial_value_check(InitialSide::cBGW, c.order, c.gmax),
            e.bgw.initial_value_check(InitialSide::NBI, c.order, c.gmax)};
  }
  if (name == "wk") return {check_wk_consistency(e, c.gmax, c.nmax + 1)};
  if (name == "structure") return {check_genus1_structure(e, c.order)};
  throw ConfigError("unknown suite '" + name + "'");
}

}  // namespace

std::vector<VerificationReport> run_suite(Engines& e, const std::string& name, const SuiteConfig& cfg) {
  require(cfg.gmax >= 0 && cfg.nmax >= 0 && cfg.kmax >= 0 && cfg.qmax >= 0, "bounds must be non-negative");
  require(cfg.jobs >= 1, "jobs must be >= 1");
  std::vector<std::string> names;
  if (name == "all") {
    names.assign(suite_names().begin(), suite_names().end() - 1);
  } else {
    require(std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end(),
            "unknown suite '" + name + "'");
    names.push_back(name);
  }
  std::vector<VerificationReport> out;
  for (const auto& n : names) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<VerificationReport> part = one(n, e, cfg);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!part.empty()) part.front().seconds = secs;
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace kdvgal
