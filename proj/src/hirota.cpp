#include <algorithm>
#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "kdvgal/errors.hpp"
#include "kdvgal/verify.hpp"

namespace kdvgal {

namespace {

// eps^eps z^z q^q y^y t^t t'^tp; t and tp hold one exponent per index.
struct HKey {
  int eps = 0;
  int z = 0;
  int q = 0;
  int y = 0;
  std::vector<int> t;
  std::vector<int> tp;
  auto operator<=>(const HKey&) const = default;
};

using HSeries = std::map<HKey, Rational>;

// Bounds that keep only terms able to reach an asserted coefficient.
struct Pruner {
  int wmax = 0;
  int dmax = 0;
  int qmax = 0;
  int bwin = 0;    // budget for sum (2j+1) over time exponents
  int ztarget = 0;

  bool keep(const HKey& k) const {
    int d = 0;
    int b = 0;
    for (std::size_t j = 0; j < k.t.size(); ++j) {
      d += k.t[j] + k.tp[j];
      b += static_cast<int>(2 * j + 1) * (k.t[j] + k.tp[j]);
    }
    if (d > dmax || k.eps + d > wmax || k.q > qmax || b > bwin) return false;
    // Later factors raise z by at most the time budget they consume.
    return k.z + (bwin - b) >= ztarget;
  }
};

void accumulate(HSeries& s, const HKey& k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = s.try_emplace(k, c);
  if (!inserted) it->second += c;
}

HKey product_key(const HKey& a, const HKey& b) {
  HKey k{a.eps + b.eps, a.z + b.z, a.q + b.q, a.y + b.y, a.t, a.tp};
  for (std::size_t j = 0; j < k.t.size(); ++j) {
    k.t[j] += b.t[j];
    k.tp[j] += b.tp[j];
  }
  return k;
}

HSeries multiply(const HSeries& a, const HSeries& b, const Pruner& p) {
  HSeries r;
  for (const auto& [ka, ca] : a) {
    if (ca == 0) continue;
    for (const auto& [kb, cb] : b) {
      if (cb == 0) continue;
      HKey k = product_key(ka, kb);
      if (p.keep(k)) accumulate(r, k, ca * cb);
    }
  }
  return r;
}

// Every term of the exponent has positive weight or positive z, so the
// exponential terminates under the pruner.
HSeries exponential(const HSeries& a, const Pruner& p, std::size_t vars) {
  HSeries result;
  HKey one;
  one.t.assign(vars, 0);
  one.tp.assign(vars, 0);
  result[one] = 1;
  HSeries term = result;
  for (int n = 1; !term.empty(); ++n) {
    term = multiply(term, a, p);
    for (auto it = term.begin(); it != term.end();) {
      if (it->second == 0) {
        it = term.erase(it);
      } else {
        it->second /= n;
        ++it;
      }
    }
    for (const auto& [k, c] : term) accumulate(result, k, c);
  }
  return result;
}

std::string render_key(const HKey& k) {
  std::string s = "eps^" + std::to_string(k.eps);
  if (k.q) s += " q^" + std::to_string(k.q);
  if (k.y) s += " y^" + std::to_string(k.y);
  for (std::size_t j = 0; j < k.t.size(); ++j) {
    if (k.t[j]) s += " t" + std::to_string(j) + "^" + std::to_string(k.t[j]);
  }
  for (std::size_t j = 0; j < k.tp.size(); ++j) {
    if (k.tp[j]) s += " t'" + std::to_string(j) + "^" + std::to_string(k.tp[j]);
  }
  return s;
}

}  // namespace

std::string HirotaWindow::describe() const {
  return "eps-power + (t,t')-degree <= " + std::to_string(wmax) + ", (t,t')-degree <= " + std::to_string(dmax);
}

VerificationReport check_hirota(const GradedSeries& f, const std::vector<int>& plist, const HirotaWindow& window) {
  const TruncationSpec& tr = f.trunc();
  const int wlimit = std::min(tr.nmax - 2, 2 * tr.gmax);
  if (window.wmax < 0 || window.dmax < 0 || window.wmax > wlimit) {
    throw ConfigError("Hirota window " + window.describe() + " exceeds the exact range of F (weight <= " +
                      std::to_string(wlimit) + " for " + tr.describe() + ")");
  }
  if (f.family() != Family::T) throw ConfigError("check_hirota expects a series in t");
  const int cap = tr.kmax;
  const std::size_t vars = static_cast<std::size_t>(cap + 1);

  VerificationReport rep;
  rep.identity = "hirota";
  rep.gmax = tr.gmax;
  rep.nmax = tr.nmax;
  rep.kmax = tr.kmax;
  rep.qmax = tr.qmax;
  rep.window = window.describe() + ", q-order <= " + std::to_string(tr.qmax) + ", time indices <= " +
               std::to_string(cap);

  for (int p : plist) {
    if (p < 0) throw ConfigError("Hirota p must be >= 0");
    Pruner pr{window.wmax, window.dmax, tr.qmax, 2 * cap + 1 - 2 * p, -1 - 2 * p};
    if (pr.bwin < 0) throw ConfigError("Hirota p = " + std::to_string(p) + " exceeds the time-index range");

    HSeries a;
    HKey blank;
    blank.t.assign(vars, 0);
    blank.tp.assign(vars, 0);
    for (const auto& [m, coef] : f.terms()) {
      const int deg = m.degree();
      if (deg == 0) continue;
      if (m.genus == 0 && (deg == 1 || (deg == 2 && m.qexp == 0))) {
        throw ConfigError("genus-0 part of F has degree <= 2 terms outside the Galilean correction");
      }
      if (m.max_index() > cap) continue;
      // F(t - [z^-1]) - F(t) and F(t' + [z^-1]) - F(t'), each expanded termwise.
      for (int sign : {-1, 1}) {
        std::vector<int> bound;
        std::vector<int> idx;
        for (const auto& [i, e] : m.texp) {
          idx.push_back(i);
          bound.push_back(e);
        }
        std::vector<int> s(bound.size(), 0);
        while (true) {
          std::size_t pos = 0;
          while (pos < s.size() && s[pos] == bound[pos]) s[pos++] = 0;
          if (pos == s.size()) break;
          ++s[pos];
          HKey k = blank;
          k.eps = 2 * m.genus - 2;
          k.q = m.qexp;
          k.y = m.yexp;
          Rational c = 1;
          for (std::size_t i = 0; i < s.size(); ++i) {
            const int j = idx[i];
            c *= binomial(bound[i], s[i]) * power(sign * double_factorial(2 * j - 1), s[i]);
            k.eps += s[i];
            k.z -= s[i] * (2 * j + 1);
            (sign < 0 ? k.t : k.tp)[static_cast<std::size_t>(j)] += bound[i] - s[i];
          }
          if (pr.keep(k)) accumulate(a, k, c * coef);
        }
      }
    }
    // xi(t - t', z) = sum_j (t_j - t'_j) z^{2j+1} / (eps (2j+1)!!)
    for (int j = 0; j <= cap; ++j) {
      HKey k = blank;
      k.eps = -1;
      k.z = 2 * j + 1;
      Rational c = Rational(1) / double_factorial(2 * j + 1);
      k.t[static_cast<std::size_t>(j)] = 1;
      if (pr.keep(k)) accumulate(a, k, c);
      k.t[static_cast<std::size_t>(j)] = 0;
      k.tp[static_cast<std::size_t>(j)] = 1;
      if (pr.keep(k)) accumulate(a, k, -c);
    }

    HSeries e = exponential(a, pr, vars);
    for (const auto& [k, c] : e) {
      if (k.z != -1 - 2 * p) continue;
      rep.check("hirota-p" + std::to_string(p), render_key(k), -1, {}, c, Rational(0));
    }
  }
  return rep;
}

}  // namespace kdvgal
