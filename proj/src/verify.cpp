#include "kdvgal/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "kdvgal/errors.hpp"
#include "kdvgal/galilean.hpp"
#include "kdvgal/parallel.hpp"

namespace kdvgal {

namespace {

int weight_of(const std::vector<int>& ks) {
  int w = 0;
  for (int k : ks) w += k;
  return w;
}

std::vector<CorrelatorKey> targets(const Bounds& b, int nmin = 1) {
  if (b.gmax < 0 || b.nmax < nmin || b.kmax < 0) throw ConfigError("infeasible bounds");
  std::vector<CorrelatorKey> out;
  for (int g = 0; g <= b.gmax; ++g) {
    for (int n = nmin; n <= b.nmax; ++n) {
      for_each_multiset(n, b.kmax, [&](const std::vector<int>& ks) { out.push_back(CorrelatorKey::make(g, ks)); });
    }
  }
  return out;
}

// Calls f on every tuple j with 0 <= j_i <= k_i.
void for_each_below(const std::vector<int>& k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> j(k.size(), 0);
  while (true) {
    f(j);
    std::size_t i = 0;
    while (i < j.size() && j[i] == k[i]) j[i++] = 0;
    if (i == j.size()) return;
    ++j[i];
  }
}

Rational inv_factorial_gap(const std::vector<int>& k, const std::vector<int>& j) {
  Rational w = 1;
  for (std::size_t i = 0; i < k.size(); ++i) w /= factorial(k[i] - j[i]);
  return w;
}

std::string key_location(const CorrelatorKey& key) {
  return "g=" + std::to_string(key.genus) + " ks=" + ks_label(key.ks);
}

VerificationReport fan_out(const std::vector<CorrelatorKey>& keys, int jobs,
                           const std::function<VerificationReport(const CorrelatorKey&)>& one) {
  std::vector<VerificationReport> parts =
      parallel_map<VerificationReport>(keys.size(), jobs, [&](std::size_t i) { return one(keys[i]); });
  VerificationReport all;
  for (const auto& p : parts) all.merge(p);
  return all;
}

void header(VerificationReport& r, const std::string& id, const Bounds& b, const std::string& window) {
  r.identity = id;
  r.gmax = b.gmax;
  r.nmax = b.nmax;
  r.kmax = b.kmax;
  r.window = window;
}

// Every monomial of a or b accepted by `keep`, compared coefficientwise.
void compare_series(VerificationReport& r, const std::string& id, const GradedSeries& a, const GradedSeries& b,
                    const std::function<bool(const Monomial&)>& keep) {
  std::set<Monomial> monos;
  for (const auto& [m, c] : a.terms()) monos.insert(m);
  for (const auto& [m, c] : b.terms()) monos.insert(m);
  for (const Monomial& m : monos) {
    if (!keep(m)) continue;
    r.check(id, render(m, a.family()), m.genus, {}, a.coeff(m), b.coeff(m));
  }
}

}  // namespace

GradedSeries solution_from_free_energy(const GradedSeries& f) {
  TruncationSpec t = f.trunc();
  if (t.nmax < 2) throw ConfigError("the solution needs F to time degree >= 2");
  t.nmax -= 2;
  return retruncate(series_derive(series_derive(f, 0), 0), t);
}

VerificationReport check_kdv(const GradedSeries& u, int tflow) {
  if (tflow != 1) throw ConfigError("check_kdv supports the t_1 flow only");
  const TruncationSpec& t = u.trunc();
  const int window = t.nmax - 3;
  if (window < 0 || t.cap() < 1) {
    throw ConfigError("check_kdv needs u to time degree >= 3 and t_1 present (" + t.describe() + ")");
  }
  VerificationReport r;
  r.identity = "kdv";
  r.gmax = t.gmax;
  r.nmax = window;
  r.kmax = t.kmax;
  r.qmax = t.qmax;
  r.window = "time degree <= " + std::to_string(window) + ", genus <= " + std::to_string(t.gmax) +
             ", q-order <= " + std::to_string(t.qmax);
  GradedSeries u0 = series_derive(u, 0);
  GradedSeries lhs = series_derive(u, 1);
  GradedSeries rhs = u * u0 + shift_genus(series_derive(series_derive(u0, 0), 0), 1) * Rational(1, 12);
  compare_series(r, "kdv", lhs, rhs, [&](const Monomial& m) { return m.degree() <= window; });
  return r;
}

GradedSeries theorem18_c1(const TruncationSpec& trunc) {
  GradedSeries s(trunc, Family::T);
  for (int i = 0; i <= trunc.cap(); ++i) {
    s.add_term(Monomial::of({{i, 1}}, 0, i + 1), Rational(1) / (factorial(i + 1) * (2 * i + 1)));
  }
  return s;
}

GradedSeries theorem18_c2(const TruncationSpec& trunc) {
  return quadratic_correction(GalileanMap::ypower(1, 1), trunc, Family::T);
}

GradedSeries theorem18_m1(const TruncationSpec& trunc) {
  GradedSeries s(trunc, Family::R);
  for (int i = 0; i <= trunc.cap(); ++i) {
    Rational c = power(Rational(2), i + 1) * factorial(i + 1) / double_factorial(2 * i + 1) - 1;
    s.add_term(Monomial::of({{i, 1}}, 0, i + 1), c * power(Rational(-1), i + 1) / factorial(i + 1));
  }
  return s;
}

GradedSeries theorem18_m2(const TruncationSpec& trunc) {
  return quadratic_correction(GalileanMap::ypower(-1, 1), trunc, Family::R);
}

VerificationReport check_theorem18(Engines& e, const Bounds& b, NbiRoute route, int jobs) {
  auto nbi = [&](int g, const std::vector<int>& j) -> YPoly {
    if (route == NbiRoute::Virasoro) return e.bgw.nbi_correlator(g, j).as_ypoly();
    const int n = static_cast<int>(j.size());
    const int w = weight_of(j);
    if (!is_stable(g, n) || w > 3 * g - 3 + n) return YPoly();
    return YPoly::scaled_power(e.kappa.kn_psi_integral(g, j), 2, w + 1 - g);
  };
  auto cbgw = [&](int g, const std::vector<int>& j) { return e.bgw.cbgw_correlator(g, j).as_ypoly(); };

  VerificationReport r = fan_out(targets(b), jobs, [&](const CorrelatorKey& key) {
    VerificationReport part;
    const int g = key.genus;
    const int n = key.n();
    const std::vector<int>& k = key.ks;
    const int wk = key.weight();

    YPoly fwd;
    YPoly inv;
    for_each_below(k, [&](const std::vector<int>& j) {
      const int gap = wk - weight_of(j);
      const Rational w = inv_factorial_gap(k, j);
      fwd += (nbi(g, j) * w).shifted(gap);
      inv += (cbgw(g, j) * (w * power(Rational(-1), gap))).shifted(gap);
    });
    if (g == 0 && n == 1) {
      const int k1 = k[0];
      fwd += YPoly::monomial(Rational(1) / (factorial(k1 + 1) * (2 * k1 + 1)), k1 + 1);
      Rational m = power(Rational(2), k1 + 1) * factorial(k1 + 1) / double_factorial(2 * k1 + 1) - 1;
      inv += YPoly::monomial(power(Rational(-1), k1 + 1) * m / factorial(k1 + 1), k1 + 1);
    }
    if (g == 0 && n == 2) {
      const int a = k[0] + k[1] + 1;
      Rational c = Rational(1) / (factorial(k[0]) * factorial(k[1]) * a);
      fwd += YPoly::monomial(c, a);
      inv += YPoly::monomial(power(Rational(-1), a) * c, a);
    }
    part.check("cBGW-from-NBI", key_location(key), g, k, cbgw(g, k), fwd);
    part.check("NBI-from-cBGW", key_location(key), g, k, nbi(g, k), inv);
    return part;
  });
  header(r, route == NbiRoute::Virasoro ? "theorem18" : "theorem18-kappa", b,
         "g <= " + std::to_string(b.gmax) + ", 1 <= n <= " + std::to_string(b.nmax) +
             ", k_i <= " + std::to_string(b.kmax));

  // Series form at genus 0 corrections: M_i = -C_i o t^G(r; -y).
  TruncationSpec lin{0, 2, b.kmax, 0, 0};
  const GalileanMap back = GalileanMap::ypower(-1, 1);
  compare_series(r, "M1-antisymmetry", theorem18_m1(lin),
                 -relabel(galilean_times(theorem18_c1(lin), back), Family::R), [](const Monomial&) { return true; });
  compare_series(r, "M2-antisymmetry", theorem18_m2(lin),
                 -relabel(galilean_times(theorem18_c2(lin), back), Family::R), [](const Monomial&) { return true; });

  // Whole free energies, both directions, on the same box.
  TruncationSpec box{b.gmax, b.nmax, b.kmax, 0, 0};
  GradedSeries fc = e.bgw.cbgw_free_energy(box);
  GradedSeries fn = route == NbiRoute::Virasoro ? e.bgw.nbi_free_energy(box) : e.kappa.nbi_free_energy_kappa(box);
  GradedSeries fwd = galilean_times(relabel(fn, Family::T), GalileanMap::ypower(1, 1)) + theorem18_c1(box) +
                     theorem18_c2(box);
  GradedSeries inv = relabel(galilean_times(fc, back), Family::R) + theorem18_m1(box) + theorem18_m2(box);
  compare_series(r, "cBGW-series", fc, fwd, [](const Monomial&) { return true; });
  compare_series(r, "NBI-series", fn, inv, [](const Monomial&) { return true; });
  return r;
}

VerificationReport check_cor41(Engines& e, const Bounds& b, int jobs) {
  VerificationReport r = fan_out(targets(b), jobs, [&](const CorrelatorKey& key) {
    VerificationReport part;
    const int g = key.genus;
    const int n = key.n();
    const std::vector<int>& k = key.ks;
    const int wk = key.weight();
    const std::string loc = key_location(key);
    if (wk < g - 1) {
      part.check("vanishing", loc, g, k, e.kappa.kn_psi_integral(g, k), Rational(0));
      return part;
    }
    const Rational c = e.bgw.cbgw_correlator(g, k).value;
    Rational sum = 0;
    if (is_stable(g, n)) {
      for_each_below(k, [&](const std::vector<int>& l) {
        const int wl = weight_of(l);
        if (wl < g - 1 || wl > 3 * g - 3 + n) return;
        sum += e.kappa.kn_psi_integral(g, l) * power(Rational(2), wl) * inv_factorial_gap(k, l);
      });
    }
    Rational rhs = power(Rational(2), g - 1 - 2 * wk) * sum;
    if (g == 0 && n == 1) rhs += Rational(1) / (power(Rational(4), k[0] + 1) * factorial(k[0] + 1) * (2 * k[0] + 1));
    if (g == 0 && n == 2) {
      const int a = k[0] + k[1] + 1;
      rhs += Rational(1) / (power(Rational(4), a) * factorial(k[0]) * factorial(k[1]) * a);
    }
    part.check("cBGW-kappa", loc, g, k, c, rhs);
    if (wk == g - 1 && g >= 1) part.check("cBGW-kappa-lowest", loc, g, k, c, e.kappa.kn_psi_integral(g, k));
    return part;
  });
  header(r, "cor41", b,
         "g <= " + std::to_string(b.gmax) + ", 1 <= n <= " + std::to_string(b.nmax) +
             ", k_i <= " + std::to_string(b.kmax));
  std::vector<Rational> bern = bernoulli_numbers(2 * std::max(b.gmax, 2));
  for (int g = 2; g <= b.gmax; ++g) {
    Rational expected = power(Rational(-1), g) * bern[static_cast<std::size_t>(2 * g)] / (2 * g * (2 * g - 2));
    r.check("zero-point", "g=" + std::to_string(g) + " n=0", g, {}, e.kappa.kn_psi_integral(g, {}), expected);
  }
  return r;
}

VerificationReport check_cor42(Engines& e, const Bounds& b, int jobs) {
  VerificationReport r = fan_out(targets(b), jobs, [&](const CorrelatorKey& key) {
    VerificationReport part;
    const int g = key.genus;
    const int n = key.n();
    const std::vector<int>& k = key.ks;
    const int wk = key.weight();
    const std::string loc = key_location(key);
    if (wk < g - 1) return part;
    Rational sum = 0;
    for_each_below(k, [&](const std::vector<int>& j) {
      const int wj = weight_of(j);
      if (wj < g - 1) return;
      sum += power(Rational(-1, 4), wk - wj) * inv_factorial_gap(k, j) * e.bgw.cbgw_correlator(g, j).value;
    });
    if (wk <= 3 * g - 3 + n) {
      part.check("kappa-from-cBGW", loc, g, k, e.kappa.kn_psi_integral(g, k), power(Rational(2), wk + 1 - g) * sum);
      return part;
    }
    Rational rhs = 0;
    if (g == 0 && n == 1) {
      const int k1 = k[0];
      rhs -= power(Rational(-1, 2), k1 + 1) / double_factorial(2 * k1 + 1) -
             power(Rational(-1, 4), k1 + 1) / factorial(k1 + 1);
    }
    if (g == 0 && n == 2) {
      const int a = k[0] + k[1] + 1;
      rhs -= power(Rational(-1, 4), a) / (factorial(k[0]) * factorial(k[1]) * a);
    }
    part.check("cBGW-linear", loc, g, k, sum, rhs);
    return part;
  });
  header(r, "cor42", b,
         "g <= " + std::to_string(b.gmax) + ", 1 <= n <= " + std::to_string(b.nmax) +
             ", k_i <= " + std::to_string(b.kmax));
  return r;
}

VerificationReport check_dual_route(Engines& e, const Bounds& b, int jobs) {
  VerificationReport r = fan_out(targets(b), jobs, [&](const CorrelatorKey& key) {
    VerificationReport part;
    const int g = key.genus;
    const int n = key.n();
    const int w = key.weight();
    YPoly viras = e.bgw.nbi_correlator(g, key.ks).as_ypoly();
    YPoly kappa;
    if (is_stable(g, n) && w <= 3 * g - 3 + n) {
      kappa = YPoly::scaled_power(e.kappa.kn_psi_integral(g, key.ks), 2, w + 1 - g);
    }
    part.check("NBI-dual-route", key_location(key), g, key.ks, viras, kappa);
    return part;
  });
  header(r, "dual-route", b,
         "g <= " + std::to_string(b.gmax) + ", 1 <= n <= " + std::to_string(b.nmax) +
             ", k_i <= " + std::to_string(b.kmax));
  return r;
}

VerificationReport check_genus1_structure(Engines& e, int degree) {
  if (degree < 1) throw ConfigError("genus-1 structure check needs degree >= 1");
  VerificationReport r;
  r.identity = "genus1-structure";
  r.gmax = 1;
  r.nmax = degree;
  r.window = "t_0^n, n <= " + std::to_string(degree);
  for (int n = 1; n <= degree; ++n) {
    std::vector<int> ks(static_cast<std::size_t>(n), 0);
    const Rational expected(1, 8 * n);
    BgwCoefficient c = e.bgw.cbgw_correlator(1, ks);
    NbiCoefficient v = e.bgw.nbi_correlator(1, ks);
    r.check("cBGW-genus1", "t0^" + std::to_string(n), 1, ks, c.as_ypoly() * (Rational(1) / factorial(n)),
            YPoly(expected));
    r.check("NBI-genus1", "r0^" + std::to_string(n), 1, ks, v.as_ypoly() * (Rational(1) / factorial(n)),
            YPoly(expected));
  }
  return r;
}

VerificationReport check_wk_consistency(Engines& e, int gmax, int nmax) {
  if (gmax < 0 || nmax < 1) throw ConfigError("infeasible bounds");
  VerificationReport r;
  r.identity = "wk-consistency";
  r.gmax = gmax;
  r.nmax = nmax;
  r.window = "g <= " + std::to_string(gmax) + ", n <= " + std::to_string(nmax);
  const WkEngine& wk = e.wk;
  for (int g = 0; g <= gmax; ++g) {
    for (int n = 1; n <= nmax; ++n) {
      const int dim = 3 * g - 3 + n;
      for_each_multiset(n, std::max(dim, 0) + 1, [&](const std::vector<int>& ks) {
        const CorrelatorKey key = CorrelatorKey::make(g, ks);
        const std::string loc = key_location(key);
        const Rational value = wk.correlator(g, ks);
        if (!is_stable(g, n) || key.weight() != dim) {
          r.check("dimension", loc, g, ks, value, Rational(0));
          return;
        }
        if (ks.front() == 0 && n >= 2) {
          // string: <tau_0 K> = sum_j <K with k_j lowered>
          std::vector<int> rest(ks.begin() + 1, ks.end());
          bool all_positive = true;
          for (int k : rest) all_positive = all_positive && k >= 1;
          if (all_positive) {
            Rational rhs = 0;
            for (std::size_t j = 0; j < rest.size(); ++j) {
              std::vector<int> lowered = rest;
              --lowered[j];
              rhs += wk.correlator(g, lowered);
            }
            r.check("string", loc, g, ks, value, rhs);
          }
        }
        const auto one = std::find(ks.begin(), ks.end(), 1);
        if (one != ks.end() && is_stable(g, n - 1)) {
          std::vector<int> rest = ks;
          rest.erase(rest.begin() + (one - ks.begin()));
          r.check("dilaton", loc, g, ks, value, Rational(2 * g - 2 + n - 1) * wk.correlator(g, rest));
        }
      });
    }
  }

  // Closed forms in genus 0 and 1 with t_0..t_3 free.
  const int kfree = 3;
  const int deg = 5;
  TruncationSpec t{1, deg, kfree, 0, 0};
  std::map<int, GradedSeries> assign;
  for (int k = 0; k <= kfree; ++k) assign.emplace(k, GradedSeries::variable(k, t));
  GradedSeries v = solve_el(assign);
  GradedSeries f = wk.free_energy(t);
  compare_series(r, "genus0-closed-form", genus_part(f, 0), genus0_free_energy(v, assign),
                 [](const Monomial&) { return true; });
  FreeEnergy f1 = genus1_free_energy(v);
  compare_series(r, "genus1-closed-form", genus_part(f, 1), f1.series,
                 [&](const Monomial& m) { return m.degree() <= deg - 1; });
  GradedSeries v0 = series_derive(v, 0);
  for (int k = 1; k <= kfree; ++k) {
    compare_series(r, "dispersionless-flow-t" + std::to_string(k), series_derive(v, k),
                   power(v, k) * v0 * (Rational(1) / factorial(k)),
                   [&](const Monomial& m) { return m.degree() <= deg - 1; });
  }
  compare_series(r, "genus0-solution", solution_from_free_energy(genus_part(f, 0)), v,
                 [&](const Monomial& m) { return m.degree() <= deg - 2; });
  return r;
}

VerificationReport check_galilean_group(Engines& e, const TruncationSpec& trunc) {
  trunc.validate();
  if (trunc.qmax < 1) throw ConfigError("galilean-group needs qmax >= 1");
  if (trunc.nmax < 4) throw ConfigError("galilean-group needs nmax >= 4 for the two-point view");
  VerificationReport r;
  r.identity = "galilean-group";
  r.gmax = trunc.gmax;
  r.nmax = trunc.nmax;
  r.kmax = trunc.kmax;
  r.qmax = trunc.qmax;
  r.window = trunc.describe() + "; generators to q-order " + std::to_string(trunc.qmax - 1);
  auto all = [](const Monomial&) { return true; };

  const GradedSeries f = e.wk.free_energy(trunc);
  const GradedSeries u = solution_from_free_energy(f);
  const GalileanMap q = GalileanMap::formal();
  const GradedSeries ft = transform_log_tau(f, q);
  const GradedSeries ut = transform_solution(u, q);
  const int cap = trunc.cap();

  // Infinitesimal generators, exact below the top q-order.
  auto below_top = [&](const Monomial& m) { return m.qexp <= trunc.qmax - 1; };
  auto flow = [&](const GradedSeries& s) {
    GradedSeries acc(s.trunc(), s.family());
    for (int k = 0; k + 1 <= cap; ++k) acc += GradedSeries::variable(k + 1, s.trunc()) * series_derive(s, k);
    return acc;
  };
  compare_series(r, "tau-generator", derive_q(ft),
                 flow(ft) + GradedSeries::term(Monomial::of({{0, 2}}), Rational(1, 2), trunc), below_top);
  compare_series(r, "solution-generator", derive_q(ut), flow(ut) + GradedSeries::constant(1, ut.trunc()), below_top);

  // Group law: q1 = q, q2 = -q/3 as multiples of the formal q.
  const GalileanMap q1 = GalileanMap::formal(1);
  const GalileanMap q2 = GalileanMap::formal(Rational(-1, 3));
  const GalileanMap q12 = GalileanMap::formal(Rational(2, 3));
  GradedSeries lin(trunc);
  for (int i = 0; i <= cap; ++i) lin += GradedSeries::variable(i, trunc) * Rational(i + 1);
  compare_series(r, "group-law-times", galilean_times(galilean_times(lin, q1), q2), galilean_times(lin, q12), all);
  compare_series(r, "group-law-correction",
                 galilean_times(quadratic_correction(q1, trunc), q2) + quadratic_correction(q2, trunc),
                 quadratic_correction(q12, trunc), all);
  compare_series(r, "group-law-tau", transform_log_tau(transform_log_tau(f, q1), q2), transform_log_tau(f, q12), all);
  compare_series(r, "inverse-times", galilean_times(galilean_times(lin, q), q.negated()), lin, all);
  compare_series(r, "inverse-tau", transform_log_tau(ft, q.negated()), f, all);
  compare_series(r, "inverse-solution", transform_solution(ut, q.negated()), u, all);
  compare_series(r, "solution-from-tau", solution_from_free_energy(ft), ut, all);

  // Correlator view and generating n-point functions.
  const int xorder = trunc.nmax - 2;
  const int kview = std::min(3, trunc.kmax);
  const CorrelatorView before = correlator_view(f, 2, kview, xorder);
  const CorrelatorView after = correlator_view(ft, 2, kview, xorder);
  const CorrelatorView moved = transform_correlators(before, q);
  for (const auto& [key, s] : after.entries) {
    compare_series(r, "correlator-view", moved.entries.at(key), s, [&](const Monomial&) { return true; });
  }
  for (int n = 1; n <= 2; ++n) {
    for (NPointKind kind : {NPointKind::C, NPointKind::W}) {
      NPointSeries src = npoint_from_view(before, kind, n, kview);
      NPointSeries want = npoint_from_view(after, kind, n, kview);
      NPointSeries got = kind == NPointKind::C ? npoint_C_transform(src, q) : npoint_W_transform(src, q);
      std::set<NPointKey> keys;
      for (const auto& [k, c] : want.terms) keys.insert(k);
      for (const auto& [k, c] : got.terms) keys.insert(k);
      const std::string id = std::string(kind == NPointKind::C ? "C" : "W") + std::to_string(n) + "-transform";
      for (const NPointKey& k : keys) {
        auto get = [&](const NPointSeries& s) {
          auto it = s.terms.find(k);
          return it == s.terms.end() ? Rational(0) : it->second;
        };
        std::string loc = "eps^" + std::to_string(k.eps) + " q^" + std::to_string(k.qexp) + " X^" +
                          std::to_string(k.xexp) + " z=" + ks_label(k.zexp);
        r.check(id, loc, -1, k.zexp, get(got), get(want));
      }
    }
  }
  return r;
}

}  // namespace kdvgal
