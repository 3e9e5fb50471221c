#include "kdvgal/kappa.hpp"

#include <algorithm>
#include <functional>

#include "kdvgal/errors.hpp"

namespace kdvgal {

SchurShift snbi_coefficients(int J) {
  if (J < 1) throw RangeError("snbi_coefficients needs J >= 1");
  SchurShift out;
  for (int j = 0; j <= J; ++j) {
    out.pvals.push_back(power(Rational(-1), j) * double_factorial(2 * j + 1));
  }
  // j p_j = -sum_{i=1}^{j} i s_i p_{j-i}
  for (int j = 1; j <= J; ++j) {
    Rational acc = j * out.pvals[static_cast<std::size_t>(j)];
    for (int i = 1; i < j; ++i) {
      acc += i * out.svals[static_cast<std::size_t>(i - 1)] * out.pvals[static_cast<std::size_t>(j - i)];
    }
    out.svals.push_back(-acc / j);
  }
  return out;
}

namespace {

void spoly_add(SPoly& p, const std::vector<int>& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = p.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

std::vector<int> padded(std::vector<int> m, std::size_t len) {
  if (m.size() < len) m.resize(len, 0);
  return m;
}

// Product restricted to monomials dividing `cap`.
SPoly spoly_mul(const SPoly& a, const SPoly& b, const std::vector<int>& cap) {
  SPoly r;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      std::vector<int> m(cap.size(), 0);
      bool fits = true;
      for (std::size_t i = 0; i < cap.size() && fits; ++i) {
        int e = (i < ma.size() ? ma[i] : 0) + (i < mb.size() ? mb[i] : 0);
        if (e > cap[i]) fits = false;
        m[i] = e;
      }
      for (std::size_t i = cap.size(); fits && i < std::max(ma.size(), mb.size()); ++i) {
        if ((i < ma.size() && ma[i]) || (i < mb.size() && mb[i])) fits = false;
      }
      if (fits) spoly_add(r, m, ca * cb);
    }
  }
  return r;
}

}  // namespace

std::vector<SPoly> schur_polynomials(int J) {
  std::vector<SPoly> p(static_cast<std::size_t>(J + 1));
  p[0][{}] = 1;
  for (int j = 1; j <= J; ++j) {
    SPoly acc;
    for (int i = 1; i <= j; ++i) {
      for (const auto& [m, c] : p[static_cast<std::size_t>(j - i)]) {
        std::vector<int> mm = padded(m, static_cast<std::size_t>(J));
        mm[static_cast<std::size_t>(i - 1)] += 1;
        spoly_add(acc, mm, -fraction(i, j) * c);
      }
    }
    SPoly trimmed;
    for (auto& [m, c] : acc) {
      std::vector<int> t = m;
      while (!t.empty() && t.back() == 0) t.pop_back();
      spoly_add(trimmed, t, c);
    }
    p[static_cast<std::size_t>(j)] = std::move(trimmed);
  }
  return p;
}

std::vector<std::vector<int>> partitions(int e) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  if (e >= 0) rec(e, e);
  return out;
}

KappaEngine::KappaEngine(const WkEngine& wk) : wk_(wk) {}

namespace {

std::vector<int> with_insertions(const std::vector<int>& ks, const std::vector<int>& lambda) {
  std::vector<int> all = ks;
  for (int part : lambda) all.push_back(part + 1);
  return all;
}

}  // namespace

Rational KappaEngine::kappa_psi_integral(const KappaQuery& q) const {
  const int n = static_cast<int>(q.ks.size());
  int wk = 0;
  for (int k : q.ks) {
    if (k < 0) throw RangeError("negative psi exponent");
    wk += k;
  }
  int wj = 0;
  int jmax = 0;
  for (int j : q.js) {
    if (j < 1) throw RangeError("kappa index must be >= 1");
    wj += j;
    jmax = std::max(jmax, j);
  }
  if (q.g < 0 || !is_stable(q.g, n)) return 0;
  const int e = 3 * q.g - 3 + n - wk;
  if (e < 0 || wj != e) return 0;

  std::vector<int> target(static_cast<std::size_t>(jmax), 0);
  for (int j : q.js) target[static_cast<std::size_t>(j - 1)] += 1;
  Rational aut_js = 1;
  for (int a : target) aut_js *= factorial(a);

  // Shift t_m -> t_m - p_{m-1}(s) for m >= 2; inserted tau_m consume m-1 of
  // the excess e, so the expansion runs over partitions of e.
  std::vector<SPoly> p = schur_polynomials(std::max(e, 1));
  Rational total = 0;
  for (const auto& lambda : partitions(e)) {
    SPoly prod;
    prod[{}] = 1;
    for (int part : lambda) {
      SPoly neg;
      for (const auto& [m, c] : p[static_cast<std::size_t>(part)]) neg[m] = -c;
      prod = spoly_mul(prod, neg, target);
      if (prod.empty()) break;
    }
    Rational c = 0;
    for (const auto& [m, v] : prod) {
      if (padded(m, target.size()) == target) c += v;
    }
    if (c == 0) continue;
    total += c / automorphisms(lambda) * wk_.correlator(q.g, with_insertions(q.ks, lambda));
  }
  return total * aut_js;
}

Rational KappaEngine::kn_psi_integral(int g, const std::vector<int>& ks) const {
  const int n = static_cast<int>(ks.size());
  if (g < 0 || !is_stable(g, n)) {
    throw DomainError("kn_psi_integral: (g,n) = (" + std::to_string(g) + "," + std::to_string(n) + ") is unstable");
  }
  int wk = 0;
  for (int k : ks) {
    if (k < 0) throw RangeError("negative psi exponent");
    wk += k;
  }
  const int e = 3 * g - 3 + n - wk;
  if (e < 0) return 0;
  // p_j(s^NBI) = (-1)^j (2j+1)!!, so each inserted tau_{j+1} carries -p_j.
  Rational total = 0;
  for (const auto& lambda : partitions(e)) {
    Rational w = 1;
    for (int part : lambda) w *= -power(Rational(-1), part) * double_factorial(2 * part + 1);
    total += w / automorphisms(lambda) * wk_.correlator(g, with_insertions(ks, lambda));
  }
  return total;
}

GradedSeries KappaEngine::nbi_free_energy_kappa(const TruncationSpec& trunc) const {
  GradedSeries f(trunc, Family::R);
  for (int g = 0; g <= trunc.gmax; ++g) {
    for (int n = 1; n <= trunc.nmax; ++n) {
      if (!is_stable(g, n)) continue;
      for_each_multiset(n, trunc.cap(), [&](const std::vector<int>& ks) {
        int w = 0;
        for (int k : ks) w += k;
        if (w > 3 * g - 3 + n) return;
        Rational v = kn_psi_integral(g, ks);
        if (v == 0) return;
        const int e = w + 1 - g;
        std::vector<std::pair<int, int>> t;
        for (int k : ks) t.emplace_back(k, 1);
        f.add_term(Monomial::of(t, g, e), v * power(Rational(2), e) / automorphisms(ks));
      });
    }
  }
  return f;
}

}  // namespace kdvgal
