#ifndef KDVGAL_VERIFY_HPP
#define KDVGAL_VERIFY_HPP

#include <string>
#include <vector>

#include "kdvgal/engines.hpp"
#include "kdvgal/report.hpp"
#include "kdvgal/series.hpp"

namespace kdvgal {

// du/dt_1 = u du/dt_0 + (eps^2/12) d^3u/dt_0^3, checked on every monomial of
// time degree <= u.trunc().nmax - 3 (the degrees at which both sides are exact).
VerificationReport check_kdv(const GradedSeries& u, int tflow = 1);

// Coefficients of the Hirota residue that are asserted. A monomial
// eps^m q^a t^alpha t'^beta has weight m + |alpha| + |beta|.
struct HirotaWindow {
  int wmax = 0;  // weight bound; must be <= min(nmax - 2, 2 gmax) of F
  int dmax = 0;  // joint (t, t') degree bound
  std::string describe() const;
};

// Residue in z of tau(t - [z^-1]) tau(t' + [z^-1]) e^{xi(t - t', z)} z^{2p}, tau = e^F.
VerificationReport check_hirota(const GradedSeries& f, const std::vector<int>& plist, const HirotaWindow& window);

enum class NbiRoute { Virasoro, Kappa };

struct Bounds {
  int gmax = 0;
  int nmax = 1;
  int kmax = 0;
};

// cBGW/NBI coefficient identities in both directions, the M/C antisymmetry
// and the series-level Galilean resummation with q = y.
VerificationReport check_theorem18(Engines& e, const Bounds& b, NbiRoute route = NbiRoute::Virasoro, int jobs = 1);
VerificationReport check_cor41(Engines& e, const Bounds& b, int jobs = 1);
VerificationReport check_cor42(Engines& e, const Bounds& b, int jobs = 1);

// Generators, group law, invertibility and transform consistency on the
// WK free energy with the given truncation (headroom must cover qmax).
VerificationReport check_galilean_group(Engines& e, const TruncationSpec& trunc);

// String, dilaton and dimension constraints plus the genus-0/1 closed forms.
VerificationReport check_wk_consistency(Engines& e, int gmax, int nmax);

// Virasoro-route NBI coefficients against (2y)^{|k|+1-g} times the kappa integral.
VerificationReport check_dual_route(Engines& e, const Bounds& b, int jobs = 1);

// F_1 of cBGW and NBI restricted to the zeroth time is -(1/8) log(1 - t_0).
VerificationReport check_genus1_structure(Engines& e, int degree);

// Closed-form correction series at genus 0, as functions of t (C) or r (M).
GradedSeries theorem18_c1(const TruncationSpec& trunc);
GradedSeries theorem18_c2(const TruncationSpec& trunc);
GradedSeries theorem18_m1(const TruncationSpec& trunc);
GradedSeries theorem18_m2(const TruncationSpec& trunc);

// The solution u = eps^2 d0^2 F, stored at the grade of F and truncated to
// the degrees where it is exact (two below F).
GradedSeries solution_from_free_energy(const GradedSeries& f);

// Bounds shared by the named suites. For kdv, nmax is the time degree of the
// checked KdV coefficients; F is computed five degrees deeper.
struct SuiteConfig {
  int gmax = 2;
  int nmax = 3;
  int kmax = 4;
  int qmax = 3;
  int order = 6;  // X-order of the initial-value and genus-1 structure checks
  int jobs = 1;
  NbiRoute route = NbiRoute::Virasoro;
};

// kdv, hirota, theorem18, cor41, cor42, galilean-group, initial, dual-route,
// wk, structure, all.
const std::vector<std::string>& suite_names();

// Throws ConfigError for an unknown suite or bounds the suite cannot honour.
std::vector<VerificationReport> run_suite(Engines& e, const std::string& name, const SuiteConfig& cfg);

}  // namespace kdvgal

#endif
