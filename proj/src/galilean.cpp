#include "kdvgal/galilean.hpp"

#include <climits>
#include <functional>

#include "kdvgal/errors.hpp"

namespace kdvgal {

Monomial GalileanMap::power_monomial(int a) const {
  Monomial m;
  if (kind == Kind::Formal) m.qexp = a;
  if (kind == Kind::YPower) m.yexp = yexp * a;
  return m;
}

GradedSeries GalileanMap::q_series(const TruncationSpec& trunc, Family family) const {
  return GradedSeries::term(power_monomial(1), coeff, trunc, family);
}

int GalileanMap::max_power(const TruncationSpec& trunc) const {
  if (kind == Kind::Formal) return trunc.qmax;
  if (coeff == 0) return 0;
  return INT_MAX;
}

namespace {

void require_headroom(const TruncationSpec& t, const GalileanMap& m) {
  if (m.kind == GalileanMap::Kind::Formal && t.headroom < t.qmax) {
    throw ConfigError("Galilean substitution with formal q needs headroom >= qmax (" + t.describe() + ")");
  }
}

// Calls f on every tuple a with 0 <= a_i <= bound[i].
void for_each_tuple(const std::vector<int>& bound, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> a(bound.size(), 0);
  while (true) {
    f(a);
    std::size_t i = 0;
    while (i < a.size() && a[i] == bound[i]) a[i++] = 0;
    if (i == a.size()) return;
    ++a[i];
  }
}

}  // namespace

GradedSeries galilean_times(const GradedSeries& s, const GalileanMap& m) {
  const TruncationSpec& t = s.trunc();
  require_headroom(t, m);
  const int cap = t.cap();
  const int amax = m.max_power(t);
  std::vector<GradedSeries> images;
  images.reserve(static_cast<std::size_t>(cap + 1));
  for (int n = 0; n <= cap; ++n) {
    GradedSeries img(t, s.family());
    for (int k = 0; n + k <= cap && k <= amax; ++k) {
      Monomial mono = m.power_monomial(k).times(Monomial::of({{n + k, 1}}));
      img.add_term(mono, m.power_coeff(k) / factorial(k));
    }
    images.push_back(std::move(img));
  }
  return substitute(s, images);
}

GradedSeries quadratic_correction(const GalileanMap& m, const TruncationSpec& trunc, Family family) {
  GradedSeries g(trunc, family);
  const int cap = trunc.cap();
  for (int i = 0; i <= cap; ++i) {
    for (int j = 0; j <= cap; ++j) {
      int a = i + j + 1;
      if (a > m.max_power(trunc)) continue;
      Monomial mono = m.power_monomial(a).times(Monomial::of({{i, 1}, {j, 1}}));
      g.add_term(mono, m.power_coeff(a) / (2 * a * factorial(i) * factorial(j)));
    }
  }
  return g;
}

GradedSeries transform_log_tau(const GradedSeries& f, const GalileanMap& m) {
  return galilean_times(f, m) + quadratic_correction(m, f.trunc(), f.family());
}

FreeEnergy transform_log_tau(const FreeEnergy& f, const GalileanMap& m) {
  return {transform_log_tau(f.series, m), f.ledger};
}

GradedSeries transform_solution(const GradedSeries& u, const GalileanMap& m) {
  return galilean_times(u, m) + m.q_series(u.trunc(), u.family());
}

CorrelatorView correlator_view(const GradedSeries& f, int nmax, int kmax, int xorder) {
  const TruncationSpec& t = f.trunc();
  if (nmax < 1 || kmax < 0 || xorder < 0) throw ConfigError("correlator_view: invalid bounds");
  if (t.nmax < nmax + xorder) {
    throw ConfigError("correlator_view: source degree " + std::to_string(t.nmax) + " < n + X-order " +
                      std::to_string(nmax + xorder));
  }
  if (kmax > t.kmax) throw ConfigError("correlator_view: kmax beyond the exact index range");
  CorrelatorView view;
  view.trunc = TruncationSpec{0, xorder, 0, t.qmax, 0};
  view.gmax = t.gmax;
  view.nmax = nmax;
  view.kmax = kmax;
  for (int n = 1; n <= nmax; ++n) {
    std::vector<int> bound(static_cast<std::size_t>(n), kmax);
    for_each_tuple(bound, [&](const std::vector<int>& ks) {
      for (std::size_t i = 1; i < ks.size(); ++i) {
        if (ks[i] < ks[i - 1]) return;
      }
      GradedSeries d = f;
      for (int k : ks) d = series_derive(d, k);
      for (int g = 0; g <= t.gmax; ++g) {
        GradedSeries e(view.trunc, f.family());
        for (const auto& [mono, c] : d.terms()) {
          if (mono.genus != g || mono.max_index() > 0) continue;
          Monomial x = mono;
          x.genus = 0;
          e.add_term(x, c);
        }
        view.entries.emplace(CorrelatorKey::make(g, ks), std::move(e));
      }
    });
  }
  return view;
}

CorrelatorView transform_correlators(const CorrelatorView& view, const GalileanMap& m) {
  CorrelatorView out = view;
  out.entries.clear();
  const TruncationSpec& t = view.trunc;
  const Family fam = Family::T;
  for (const auto& [key, src] : view.entries) {
    GradedSeries acc(t, fam);
    std::vector<int> bound = key.ks;
    for_each_tuple(bound, [&](const std::vector<int>& j) {
      int a = 0;
      Rational w = 1;
      for (std::size_t i = 0; i < j.size(); ++i) {
        a += key.ks[i] - j[i];
        w /= factorial(key.ks[i] - j[i]);
      }
      if (a > m.max_power(t)) return;
      auto it = view.entries.find(CorrelatorKey::make(key.genus, j));
      if (it == view.entries.end()) {
        throw ConfigError("transform_correlators: view lacks g=" + std::to_string(key.genus) + " ks=" +
                          CorrelatorKey::make(key.genus, j).ks_string());
      }
      acc += GradedSeries::term(m.power_monomial(a), m.power_coeff(a) * w, t, fam) * it->second;
    });
    if (key.genus == 0 && key.n() == 1) {
      int k = key.ks[0];
      if (k + 1 <= m.max_power(t)) {
        acc.add_term(m.power_monomial(k + 1).times(Monomial::of({{0, 1}})), m.power_coeff(k + 1) / factorial(k + 1));
      }
    }
    if (key.genus == 0 && key.n() == 2) {
      int a = key.ks[0] + key.ks[1] + 1;
      if (a <= m.max_power(t)) {
        acc.add_term(m.power_monomial(a), m.power_coeff(a) / (a * factorial(key.ks[0]) * factorial(key.ks[1])));
      }
    }
    out.entries.emplace(key, std::move(acc));
  }
  return out;
}

void NPointSeries::add(const NPointKey& k, const Rational& c) {
  if (c == 0 || !admits(k)) return;
  auto [it, inserted] = terms.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

bool NPointSeries::admits(const NPointKey& k) const {
  if (k.qexp > trunc.qmax || k.xexp > trunc.nmax) return false;
  if (static_cast<int>(k.zexp.size()) != n) return false;
  for (int z : k.zexp) {
    if (kind == NPointKind::C && (z < 0 || z > depth)) return false;
    if (kind == NPointKind::W && z < -(2 * depth + 3)) return false;
  }
  return true;
}

NPointSeries npoint_from_view(const CorrelatorView& view, NPointKind kind, int n, int depth) {
  if (n < 1 || n > view.nmax || depth > view.kmax) throw ConfigError("npoint_from_view: view too shallow");
  NPointSeries s;
  s.kind = kind;
  s.n = n;
  s.depth = depth;
  s.trunc = view.trunc;
  std::vector<int> bound(static_cast<std::size_t>(n), depth);
  for (int g = 0; g <= view.gmax; ++g) {
    for_each_tuple(bound, [&](const std::vector<int>& ks) {
      const GradedSeries& e = view.entries.at(CorrelatorKey::make(g, ks));
      Rational w = 1;
      std::vector<int> z;
      for (int k : ks) {
        if (kind == NPointKind::W) {
          w *= double_factorial(2 * k + 1);
          z.push_back(-(2 * k + 3));
        } else {
          z.push_back(k);
        }
      }
      for (const auto& [mono, c] : e.terms()) {
        s.add({n + 2 * g - 2, mono.qexp, mono.yexp, mono.exponent(0), z}, c * w);
      }
    });
  }
  return s;
}

namespace {

NPointKey raised(NPointKey k, const GalileanMap& m, int a) {
  Monomial p = m.power_monomial(a);
  k.qexp += p.qexp;
  k.yexp += p.yexp;
  return k;
}

}  // namespace

NPointSeries npoint_C_transform(const NPointSeries& c, const GalileanMap& m) {
  if (c.kind != NPointKind::C) throw ConfigError("npoint_C_transform expects a C-type series");
  NPointSeries r = c;
  r.terms.clear();
  const int amax = m.max_power(c.trunc);
  for (const auto& [key, v] : c.terms) {
    std::vector<int> bound;
    for (int z : key.zexp) bound.push_back(c.depth - z);
    for_each_tuple(bound, [&](const std::vector<int>& a) {
      int total = 0;
      Rational w = 1;
      NPointKey k = key;
      for (std::size_t i = 0; i < a.size(); ++i) {
        total += a[i];
        w /= factorial(a[i]);
        k.zexp[i] += a[i];
      }
      if (total > amax) return;
      r.add(raised(k, m, total), v * w * m.power_coeff(total));
    });
  }
  if (c.n == 1) {
    for (int k = 0; k <= c.depth && k + 1 <= amax; ++k) {
      r.add(raised({-1, 0, 0, 1, {k}}, m, k + 1), m.power_coeff(k + 1) / factorial(k + 1));
    }
  }
  if (c.n == 2) {
    for (int k1 = 0; k1 <= c.depth; ++k1) {
      for (int k2 = 0; k2 <= c.depth; ++k2) {
        int a = k1 + k2 + 1;
        if (a > amax) continue;
        r.add(raised({0, 0, 0, 0, {k1, k2}}, m, a), m.power_coeff(a) * binomial(a - 1, k1) / factorial(a));
      }
    }
  }
  return r;
}

namespace {

// Coefficient of q^a z^{-m-2a} in (z^2 - 2q)^{-m/2}.
Rational sqrt_shift_coeff(int m, int a) {
  Rational c = 1;
  for (int i = 0; i < a; ++i) c *= m + 2 * i;
  return c / factorial(a);
}

// Exact quotient of sum_i p[i] A^i B^{d-i} by (A-B)^2.
std::vector<Rational> divide_by_square_difference(std::vector<Rational> p) {
  // In t = A/B: divide by t^2 - 2t + 1, highest degree first.
  const int d = static_cast<int>(p.size()) - 1;
  if (d < 2) {
    for (const auto& c : p) {
      if (c != 0) throw ConsistencyError("n=2 correction is not divisible by (A-B)^2");
    }
    return {};
  }
  std::vector<Rational> q(static_cast<std::size_t>(d - 1), 0);
  for (int i = d; i >= 2; --i) {
    Rational c = p[static_cast<std::size_t>(i)];
    q[static_cast<std::size_t>(i - 2)] = c;
    p[static_cast<std::size_t>(i)] = 0;
    p[static_cast<std::size_t>(i - 1)] += 2 * c;
    p[static_cast<std::size_t>(i - 2)] -= c;
  }
  if (p[0] != 0 || p[1] != 0) throw ConsistencyError("n=2 correction is not divisible by (A-B)^2");
  return q;
}

}  // namespace

NPointSeries npoint_W_transform(const NPointSeries& w, const GalileanMap& m) {
  if (w.kind != NPointKind::W) throw ConfigError("npoint_W_transform expects a W-type series");
  if (m.kind != GalileanMap::Kind::Formal) throw ConfigError("npoint_W_transform needs a formal q");
  NPointSeries r = w;
  r.terms.clear();
  const int floor = -(2 * w.depth + 3);
  for (const auto& [key, v] : w.terms) {
    for (int z : key.zexp) {
      if (z < floor || z % 2 == 0) throw ConfigError("npoint_W_transform: z-exponent outside the depth");
    }
    std::vector<int> bound;
    for (int z : key.zexp) bound.push_back((z - floor) / 2);
    for_each_tuple(bound, [&](const std::vector<int>& a) {
      int total = 0;
      Rational c = v;
      NPointKey k = key;
      for (std::size_t i = 0; i < a.size(); ++i) {
        total += a[i];
        c *= sqrt_shift_coeff(-key.zexp[i], a[i]);
        k.zexp[i] -= 2 * a[i];
      }
      if (key.qexp + total > w.trunc.qmax) return;
      r.add(raised(k, m, total), c * m.power_coeff(total));
    });
  }
  const int qmax = w.trunc.qmax;
  if (w.n == 1) {
    for (int a = 1; a <= qmax && -1 - 2 * a >= floor; ++a) {
      r.add(raised({-1, 0, 0, 1, {-1 - 2 * a}}, m, a), m.power_coeff(a) * sqrt_shift_coeff(1, a));
    }
  }
  if (w.n == 2) {
    // A = z1^-2, B = z2^-2, S = (1-2qA)^{-1/2}(1-2qB)^{-1/2}:
    //   correction = AB/(z1 z2 (A-B)^2) [((A+B) - 4qAB) S - (A+B)].
    auto s = [](int i) -> Rational { return double_factorial(2 * i - 1) / factorial(i); };
    for (int a = 1; a <= qmax; ++a) {
      std::vector<Rational> br(static_cast<std::size_t>(a + 2), 0);  // degree a+1
      for (int i = 0; i <= a; ++i) {
        Rational sa = s(i) * s(a - i);  // A^i B^{a-i} in S_a
        br[static_cast<std::size_t>(i + 1)] += sa;
        br[static_cast<std::size_t>(i)] += sa;
      }
      for (int i = 0; i <= a - 1; ++i) {
        br[static_cast<std::size_t>(i + 1)] -= 4 * s(i) * s(a - 1 - i);
      }
      std::vector<Rational> quo = divide_by_square_difference(br);
      for (int i = 0; i < static_cast<int>(quo.size()); ++i) {
        int j = a - 1 - i;
        r.add(raised({0, 0, 0, 0, {-2 * i - 3, -2 * j - 3}}, m, a), quo[static_cast<std::size_t>(i)] * m.power_coeff(a));
      }
    }
  }
  return r;
}

}  // namespace kdvgal
