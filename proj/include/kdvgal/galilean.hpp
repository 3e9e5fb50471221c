#ifndef KDVGAL_GALILEAN_HPP
#define KDVGAL_GALILEAN_HPP

#include <compare>
#include <map>
#include <vector>

#include "kdvgal/correlator_table.hpp"
#include "kdvgal/free_energy.hpp"
#include "kdvgal/series.hpp"

namespace kdvgal {

// The Galilean parameter q: a rational constant, c*y^e, or c times the
// formal variable q of the series ring.
struct GalileanMap {
  enum class Kind { Formal, Constant, YPower };
  Kind kind = Kind::Formal;
  Rational coeff = 1;
  int yexp = 0;

  static GalileanMap formal(const Rational& c = 1) { return {Kind::Formal, c, 0}; }
  static GalileanMap constant(const Rational& c) { return {Kind::Constant, c, 0}; }
  static GalileanMap ypower(const Rational& c, int e) { return {Kind::YPower, c, e}; }

  GalileanMap negated() const { return {kind, -coeff, yexp}; }
  // q^a as a single monomial coefficient.
  Monomial power_monomial(int a) const;
  Rational power_coeff(int a) const { return power(coeff, a); }
  GradedSeries q_series(const TruncationSpec& trunc, Family family) const;
  // Largest power of q that can survive the truncation (formal q only).
  int max_power(const TruncationSpec& trunc) const;
};

// t_n -> sum_k q^k/k! t_{n+k}. Throws ConfigError when a formal q lacks headroom.
GradedSeries galilean_times(const GradedSeries& s, const GalileanMap& m);

// g(t;q) = 1/2 sum q^{i+j+1}/(i+j+1) t_i t_j/(i! j!), at grade 0.
GradedSeries quadratic_correction(const GalileanMap& m, const TruncationSpec& trunc, Family family = Family::T);

GradedSeries transform_log_tau(const GradedSeries& f, const GalileanMap& m);
FreeEnergy transform_log_tau(const FreeEnergy& f, const GalileanMap& m);

// u o t^G + q.
GradedSeries transform_solution(const GradedSeries& u, const GalileanMap& m);

// Partial correlation functions d^n F_g / dt_k1..dt_kn at t_{>=1} = 0, each a
// series in X = t_0 (and q, y) stored at grade 0.
struct CorrelatorView {
  TruncationSpec trunc;  // of the X-series
  int gmax = 0;
  int nmax = 0;
  int kmax = 0;
  std::map<CorrelatorKey, GradedSeries> entries;
};

CorrelatorView correlator_view(const GradedSeries& f, int nmax, int kmax, int xorder);
CorrelatorView transform_correlators(const CorrelatorView& view, const GalileanMap& m);

enum class NPointKind { C, W };

struct NPointKey {
  int eps = 0;
  int qexp = 0;
  int yexp = 0;
  int xexp = 0;            // power of X
  std::vector<int> zexp;   // powers of x_i (C) or z_i (W)
  auto operator<=>(const NPointKey&) const = default;
};

// Generating n-point function. For C the x_i-degrees are <= depth; for W the
// z_i-exponents are >= -(2 depth + 3). Coefficients are exact inside that box.
struct NPointSeries {
  NPointKind kind = NPointKind::C;
  int n = 1;
  int depth = 0;
  TruncationSpec trunc;  // q and X bounds
  std::map<NPointKey, Rational> terms;

  void add(const NPointKey& k, const Rational& c);
  bool admits(const NPointKey& k) const;
  bool operator==(const NPointSeries&) const = default;
};

NPointSeries npoint_from_view(const CorrelatorView& view, NPointKind kind, int n, int depth);
NPointSeries npoint_C_transform(const NPointSeries& c, const GalileanMap& m);
NPointSeries npoint_W_transform(const NPointSeries& w, const GalileanMap& m);

}  // namespace kdvgal

#endif
