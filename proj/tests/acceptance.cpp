// Acceptance run: one PASS/FAIL line per criterion, each on fresh engines and
// timed against its runtime limit.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "kdvgal/engines.hpp"
#include "kdvgal/galilean.hpp"
#include "kdvgal/kappa.hpp"
#include "kdvgal/verify.hpp"

using namespace kdvgal;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

Outcome from_reports(const std::vector<VerificationReport>& reports, std::size_t min_records = 1) {
  Outcome o{true, ""};
  std::size_t passed = 0;
  std::size_t failed = 0;
  for (const auto& r : reports) {
    passed += r.passed();
    failed += r.failed();
    if (const CheckRecord* f = r.first_failure()) {
      if (o.ok) o.detail = "; first failure " + r.identity + "/" + f->identity + " at " + f->location;
      o.ok = false;
    }
  }
  if (passed < min_records) o.ok = false;
  o.detail = std::to_string(passed) + " passed, " + std::to_string(failed) + " failed" + o.detail;
  return o;
}

Outcome snbi_sequence() {
  const std::vector<long> expected = {1, 7, 69, 843, 12081};
  SchurShift s = snbi_coefficients(5);
  Outcome o{true, ""};
  std::ostringstream seq;
  for (int j = 1; j <= 5; ++j) {
    Rational v = abs(j * s.svals[static_cast<std::size_t>(j - 1)]) / 3;
    seq << (j > 1 ? ", " : "") << to_string(v);
    if (v != expected[static_cast<std::size_t>(j - 1)]) o.ok = false;
  }
  Engines e;
  const Rational pin = e.kappa.kn_psi_integral(1, {0});
  if (pin != Rational(1, 8)) o.ok = false;
  o.detail = "|j s_j|/3 = " + seq.str() + "; K_1 on M_{1,1} = " + to_string(pin);
  return o;
}

Outcome zero_point() {
  Engines e;
  const Rational k2 = e.kappa.kn_psi_integral(2, {});
  const Rational k3 = e.kappa.kn_psi_integral(3, {});
  return {k2 == Rational(-1, 240) && k3 == Rational(-1, 1008),
          "K_3 on M_2 = " + to_string(k2) + ", K_6 on M_3 = " + to_string(k3)};
}

Outcome galilean() {
  Engines e;
  std::vector<VerificationReport> reports;
  reports.push_back(check_galilean_group(e, {1, 4, 4, 2, 2}));
  const GradedSeries u = solution_from_free_energy(e.wk.free_energy({1, 8, 4, 2, 2}));
  reports.push_back(check_kdv(transform_solution(u, GalileanMap::formal())));
  const GradedSeries f = e.wk.free_energy({1, 5, 4, 2, 2});
  reports.push_back(check_hirota(transform_log_tau(f, GalileanMap::formal()), {0, 1}, {2, 3}));
  return from_reports(reports);
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "s^NBI renormalized sequence 1, 7, 69, 843, 12081", 1, snbi_sequence},
      {2, "zero-point K integrals -1/240 and -1/1008", 30, zero_point},
      {3, "dual-route NBI equivalence g<=2 n<=3 k<=4", 120,
       [] {
         Engines e;
         return from_reports({check_dual_route(e, {2, 3, 4})}, 150);
       }},
      {4, "cBGW/NBI free-energy resummation g<=2 n<=3 k<=4", 120,
       [] {
         Engines e;
         return from_reports({check_theorem18(e, {2, 3, 4})});
       }},
      {5, "K-class vanishing and cBGW identities g<=3 n<=3 k<=4", 180,
       [] {
         Engines e;
         return from_reports({check_cor41(e, {3, 3, 4})});
       }},
      {6, "NBI/cBGW kappa relations g<=3 n<=3 k<=4", 120,
       [] {
         Engines e;
         return from_reports({check_cor42(e, {3, 3, 4})});
       }},
      {7, "Galilean generators, group law, KdV and Hirota on transformed WK", 300, galilean},
      {8, "cBGW and NBI initial values to X^6, genus <= 2", 60,
       [] {
         Engines e;
         return from_reports({e.bgw.initial_value_check(InitialSide::cBGW, 6, 2),
                              e.bgw.initial_value_check(InitialSide::NBI, 6, 2)});
       }},
      {9, "WK string, dilaton, dimension and closed forms g<=3 n<=4", 60,
       [] {
         Engines e;
         return from_reports({check_wk_consistency(e, 3, 4)});
       }},
      {10, "genus-1 cBGW and NBI structure to degree 6", 30,
       [] {
         Engines e;
         return from_reports({check_genus1_structure(e, 6)});
       }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = o.ok && in_time;
    if (!pass) ++failures;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " [" << o.detail << "; "
         << secs << " s of " << c.limit_seconds << " s" << (in_time ? "" : ", over the limit") << "]";
    std::cout << line.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
