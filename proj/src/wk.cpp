#include "kdvgal/wk.hpp"

#include <numeric>

#include "kdvgal/errors.hpp"
#include "virasoro.hpp"

namespace kdvgal {

bool is_stable(int g, int n) { return 2 * g - 2 + n > 0; }

namespace {

void multisets_rec(int n, int lo, int kmax, std::vector<int>& cur,
                   const std::function<void(const std::vector<int>&)>& f) {
  if (static_cast<int>(cur.size()) == n) {
    f(cur);
    return;
  }
  for (int k = lo; k <= kmax; ++k) {
    cur.push_back(k);
    multisets_rec(n, k, kmax, cur, f);
    cur.pop_back();
  }
}

// Ascending multisets of size n, entries <= kmax, summing to `sum`.
void multisets_with_sum(int n, int lo, int kmax, int sum, std::vector<int>& cur,
                        const std::function<void(const std::vector<int>&)>& f) {
  int left = n - static_cast<int>(cur.size());
  if (left == 0) {
    if (sum == 0) f(cur);
    return;
  }
  for (int k = lo; k <= kmax && k * left <= sum; ++k) {
    cur.push_back(k);
    multisets_with_sum(n, k, kmax, sum - k, cur, f);
    cur.pop_back();
  }
}

}  // namespace

void for_each_multiset(int n, int kmax, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> cur;
  multisets_rec(n, 0, kmax, cur, f);
}

Rational automorphisms(const std::vector<int>& ks) {
  Rational aut = 1;
  std::size_t i = 0;
  while (i < ks.size()) {
    std::size_t j = i;
    while (j < ks.size() && ks[j] == ks[i]) ++j;
    aut *= factorial(static_cast<int>(j - i));
    i = j;
  }
  return aut;
}

WkEngine::WkEngine(CorrelatorTable& table) : table_(table) {
  if (table.provenance() != Provenance::WK) throw ConfigError("WkEngine needs a WK table");
}

Rational WkEngine::correlator(int g, std::vector<int> ks) const {
  CorrelatorKey key = CorrelatorKey::make(g, std::move(ks));
  const int n = key.n();
  if (!is_stable(g, n) || key.weight() != 3 * g - 3 + n) return 0;

  return table_.get_or_compute(key, [&]() -> Rational {
    detail::VirasoroModel model;
    model.lead = 1;
    model.shift = [](int i) { return i == 1 ? YPoly(-1) : YPoly(); };
    model.max_shift = [](int, int, int) { return 1; };
    model.inhom = [](int k, int gg, const std::vector<int>& D) {
      if (k == 0 && gg == 1 && D.empty()) return YPoly(Rational(1, 16));
      if (k == -1 && gg == 0 && D == std::vector<int>{0, 0}) return YPoly(1);
      return YPoly();
    };
    model.lookup = [this](int gg, std::vector<int> v) { return YPoly(correlator(gg, std::move(v))); };
    model.vanishes = [](int gg, int nn) { return !is_stable(gg, nn); };

    // Solve L_{m-1} for the smallest index m: string equation when m = 0,
    // dilaton-type when m = 1.
    std::vector<int> D(key.ks.begin() + 1, key.ks.end());
    YPoly r = detail::virasoro_solve(model, g, key.ks.front() - 1, D);
    if (!r.is_zero() && r.single_power() != 0) {
      throw ConsistencyError("WK correlator picked up a y-dependence");
    }
    return r.coeff(0);
  });
}

GradedSeries WkEngine::free_energy(const TruncationSpec& trunc) const {
  GradedSeries f(trunc, Family::T);
  for (int g = 0; g <= trunc.gmax; ++g) {
    for (int n = 1; n <= trunc.nmax; ++n) {
      if (!is_stable(g, n)) continue;
      int sum = 3 * g - 3 + n;
      if (sum < 0) continue;
      std::vector<int> cur;
      multisets_with_sum(n, 0, trunc.cap(), sum, cur, [&](const std::vector<int>& ks) {
        Rational c = correlator(g, ks);
        if (c == 0) return;
        std::vector<std::pair<int, int>> t;
        for (int k : ks) t.emplace_back(k, 1);
        f.add_term(Monomial::of(t, g), c / automorphisms(ks));
      });
    }
  }
  return f;
}

namespace {

const GradedSeries& any_series(const std::map<int, GradedSeries>& assignment) {
  if (assignment.empty()) throw ConfigError("empty time assignment");
  return assignment.begin()->second;
}

GradedSeries el_rhs(const GradedSeries& v, const std::map<int, GradedSeries>& assignment) {
  GradedSeries r(v.trunc(), v.family());
  GradedSeries vp = GradedSeries::constant(1, v.trunc(), v.family());
  int k = 0;
  for (const auto& [idx, a] : assignment) {
    while (k < idx) {
      vp = vp * v;
      ++k;
    }
    r += a * vp * (Rational(1) / factorial(idx));
  }
  return r;
}

}  // namespace

GradedSeries solve_el(const std::map<int, GradedSeries>& assignment) {
  const GradedSeries& ref = any_series(assignment);
  for (const auto& [idx, a] : assignment) {
    if (idx < 0) throw RangeError("negative time index in assignment");
    if (a.family() != ref.family() || !(a.trunc() == ref.trunc())) {
      throw ConfigError("solve_el: assignment series are incompatible");
    }
    for (const auto& [m, c] : a.terms()) {
      if (m.weight() == 0) {
        throw DomainError("solve_el: t_" + std::to_string(idx) + " has a constant term");
      }
    }
  }
  GradedSeries v(ref.trunc(), ref.family());
  // Each pass fixes at least one more weight level, so the bound is never hit
  // for a valid input.
  const int bound = ref.trunc().nmax + ref.trunc().qmax + ref.trunc().gmax + 4;
  for (int it = 0; it < bound; ++it) {
    GradedSeries next = el_rhs(v, assignment);
    if (next == v) return v;
    v = std::move(next);
  }
  throw ConsistencyError("solve_el: fixed-point iteration did not stabilize");
}

GradedSeries genus0_free_energy(const GradedSeries& v, const std::map<int, GradedSeries>& assignment) {
  if (!(el_rhs(v, assignment) == v)) {
    throw DomainError("genus0_free_energy: v does not solve the Euler-Lagrange equation");
  }
  std::map<int, GradedSeries> shifted = assignment;
  if (!shifted.count(1)) shifted.emplace(1, GradedSeries(v.trunc(), v.family()));
  shifted.at(1) = shifted.at(1) - GradedSeries::constant(1, v.trunc(), v.family());

  int top = shifted.rbegin()->first;
  std::vector<GradedSeries> vpow{GradedSeries::constant(1, v.trunc(), v.family())};
  for (int e = 1; e <= 2 * top + 1; ++e) vpow.push_back(vpow.back() * v);

  GradedSeries f(v.trunc(), v.family());
  for (const auto& [k, ak] : shifted) {
    for (const auto& [l, al] : shifted) {
      Rational w = Rational(1, 2) / (factorial(k) * factorial(l) * (k + l + 1));
      f += ak * al * vpow[static_cast<std::size_t>(k + l + 1)] * w;
    }
  }
  return f;
}

FreeEnergy genus1_free_energy(const GradedSeries& v) {
  GradedSeries d = series_derive(v, 0);
  const Monomial* lead = nullptr;
  Rational c;
  GradedSeries rest(v.trunc(), v.family());
  for (const auto& [m, coef] : d.terms()) {
    if (m.weight() == 0) {
      if (lead) throw DomainError("genus1_free_energy: d0 v has several constant monomials");
      lead = &m;
      c = coef;
    }
  }
  if (!lead) throw DomainError("genus1_free_energy: d0 v has no constant part");
  const int e = lead->yexp;
  for (const auto& [m, coef] : d.terms()) {
    if (&m == lead) continue;
    Monomial s = m;
    s.yexp -= e;
    rest.add_term(s, coef / c);
  }
  GradedSeries one = GradedSeries::constant(1, v.trunc(), v.family());
  GradedSeries lg = log_truncated(one + rest);
  FreeEnergy out{shift_genus(lg * Rational(1, 24), 1), {}};
  if (c != 1) out.ledger.add(1, Rational(1, 24), "log(" + to_string(c) + ")");
  if (e != 0) out.ledger.add(1, fraction(e, 24), "log(y)");
  return out;
}

}  // namespace kdvgal
