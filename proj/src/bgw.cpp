#include "kdvgal/bgw.hpp"

#include "kdvgal/errors.hpp"
#include "kdvgal/report.hpp"
#include "kdvgal/wk.hpp"
#include "virasoro.hpp"

namespace kdvgal {

BgwEngine::BgwEngine(CorrelatorTable& cbgw, CorrelatorTable& nbi) : cbgw_(cbgw), nbi_(nbi) {
  if (cbgw.provenance() != Provenance::cBGW || nbi.provenance() != Provenance::NBI) {
    throw ConfigError("BgwEngine needs a cBGW and an NBI table");
  }
}

YPoly BgwEngine::cbgw_full(int g, std::vector<int> ks) const {
  CorrelatorKey key = CorrelatorKey::make(g, std::move(ks));
  if (key.ks.empty()) throw DomainError("cBGW correlators need at least one insertion");
  const int e = key.weight() - g + 1;

  Rational c = cbgw_.get_or_compute(key, [&]() -> Rational {
    detail::VirasoroModel model;
    model.lead = 0;
    model.shift = [](int i) { return i == 0 ? YPoly(-1) : YPoly(); };
    model.max_shift = [](int, int, int) { return 0; };
    model.inhom = [](int k, int gg, const std::vector<int>& D) {
      if (k != 0 || !D.empty()) return YPoly();
      if (gg == 1) return YPoly(Rational(1, 16));
      if (gg == 0) return YPoly::monomial(Rational(1, 2), 1);
      return YPoly();
    };
    model.lookup = [this](int gg, std::vector<int> v) { return cbgw_full(gg, std::move(v)); };

    // L_m with m the smallest index; there is no L_{-1} here.
    std::vector<int> D(key.ks.begin() + 1, key.ks.end());
    YPoly r = detail::virasoro_solve(model, g, key.ks.front(), D);
    if (r.is_zero()) return 0;
    if (r.single_power() != e) {
      throw ConsistencyError("cBGW g=" + std::to_string(g) + " ks=" + key.ks_string() +
                             " is not a multiple of (4y)^" + std::to_string(e) + ": " + r.str());
    }
    return r.coeff(e) / power(Rational(4), e);
  });
  return YPoly::scaled_power(c, 4, e);
}

YPoly BgwEngine::nbi_full(int g, std::vector<int> ks) const {
  CorrelatorKey key = CorrelatorKey::make(g, std::move(ks));
  const int n = key.n();
  if (n == 0) throw DomainError("NBI correlators need at least one insertion");
  if (!is_stable(g, n) || key.weight() > 3 * g - 3 + n) return YPoly();
  const int e = key.weight() + 1 - g;

  Rational c = nbi_.get_or_compute(key, [&]() -> Rational {
    detail::VirasoroModel model;
    model.lead = 1;
    // r_i + (2i-1)!! (-2/x^2)^i - delta_{i,0}, with -2/x^2 = -1/(2y).
    model.shift = [](int i) {
      if (i == 0) return YPoly();
      return YPoly::monomial(double_factorial(2 * i - 1) * power(Rational(-1, 2), i), -i);
    };
    // Terms C(g, {i+k} u D) vanish once |D|+k+i exceeds 3g-3+n.
    model.max_shift = [](int gg, int nn, int base) { return 3 * gg - 3 + nn - base; };
    model.inhom = [](int k, int gg, const std::vector<int>& D) {
      if (k == 0 && gg == 1 && D.empty()) return YPoly(Rational(1, 16));
      if (k == -1 && gg == 0 && D == std::vector<int>{0, 0}) return YPoly(1);
      return YPoly();
    };
    model.lookup = [this](int gg, std::vector<int> v) { return nbi_full(gg, std::move(v)); };
    model.vanishes = [](int gg, int nn) { return !is_stable(gg, nn); };

    std::vector<int> D(key.ks.begin() + 1, key.ks.end());
    YPoly r = detail::virasoro_solve(model, g, key.ks.front() - 1, D);
    if (r.is_zero()) return 0;
    if (r.single_power() != e) {
      throw ConsistencyError("NBI g=" + std::to_string(g) + " ks=" + key.ks_string() +
                             " did not collapse to (2y)^" + std::to_string(e) + ": " + r.str());
    }
    return r.coeff(e) / power(Rational(2), e);
  });
  return YPoly::scaled_power(c, 2, e);
}

BgwCoefficient BgwEngine::cbgw_correlator(int g, std::vector<int> ks) const {
  CorrelatorKey key = CorrelatorKey::make(g, std::move(ks));
  const int e = key.weight() - g + 1;
  YPoly full = cbgw_full(g, key.ks);
  return {g, key.ks, full.coeff(e) / power(Rational(4), e), e};
}

NbiCoefficient BgwEngine::nbi_correlator(int g, std::vector<int> ks) const {
  CorrelatorKey key = CorrelatorKey::make(g, std::move(ks));
  const int e = key.weight() + 1 - g;
  YPoly full = nbi_full(g, key.ks);
  return {g, key.ks, full.coeff(e) / power(Rational(2), e), e};
}

namespace {

void add_ypoly_term(GradedSeries& f, int g, const std::vector<int>& ks, const YPoly& c) {
  std::vector<std::pair<int, int>> t;
  for (int k : ks) t.emplace_back(k, 1);
  Rational aut = automorphisms(ks);
  for (const auto& [e, v] : c.terms()) f.add_term(Monomial::of(t, g, e), v / aut);
}

}  // namespace

GradedSeries BgwEngine::cbgw_free_energy(const TruncationSpec& trunc) const {
  GradedSeries f(trunc, Family::T);
  for (int g = 0; g <= trunc.gmax; ++g) {
    for (int n = 1; n <= trunc.nmax; ++n) {
      for_each_multiset(n, trunc.cap(), [&](const std::vector<int>& ks) { add_ypoly_term(f, g, ks, cbgw_full(g, ks)); });
    }
  }
  return f;
}

GradedSeries BgwEngine::nbi_free_energy(const TruncationSpec& trunc) const {
  GradedSeries f(trunc, Family::R);
  for (int g = 0; g <= trunc.gmax; ++g) {
    for (int n = 1; n <= trunc.nmax; ++n) {
      if (!is_stable(g, n)) continue;
      for_each_multiset(n, trunc.cap(), [&](const std::vector<int>& ks) {
        int w = 0;
        for (int k : ks) w += k;
        if (w > 3 * g - 3 + n) return;
        add_ypoly_term(f, g, ks, nbi_full(g, ks));
      });
    }
  }
  return f;
}

VerificationReport BgwEngine::initial_value_check(InitialSide side, int order, int gmax) const {
  VerificationReport rep;
  const bool cbgw = side == InitialSide::cBGW;
  rep.identity = cbgw ? "initial-value-cBGW" : "initial-value-NBI";
  rep.gmax = gmax;
  rep.nmax = order;
  rep.window = "X^m, m <= " + std::to_string(order) + ", genus <= " + std::to_string(gmax);
  for (int g = 0; g <= gmax; ++g) {
    for (int m = 0; m <= order; ++m) {
      std::vector<int> ks(static_cast<std::size_t>(m + 2), 0);
      YPoly lhs = (cbgw ? cbgw_full(g, ks) : nbi_full(g, ks)) * (Rational(1) / factorial(m));
      YPoly rhs;
      if (g == 0) rhs = YPoly::monomial(m + 1 - ((!cbgw && m == 0) ? 1 : 0), 1);
      if (g == 1) rhs = YPoly(fraction(m + 1, 8));
      rep.check(rep.identity, "g=" + std::to_string(g) + " X^" + std::to_string(m), g, ks, lhs, rhs);
    }
  }
  return rep;
}

}  // namespace kdvgal
