// Coefficient form of L_k Z = 0 for operators of the shape
//
//   L_k = (eps^2/2) sum_{i+j=k-1} a_ij d_i d_j + sum_i b_{k,i} (t_i + s_i) d_{i+k} + inhom_k
//
// with a_ij = (2i+1)!!(2j+1)!!/2^{k+1} and b_{k,i} = (2k+2i+1)!!/(2^{k+1}(2i-1)!!).
// Dividing by Z and reading the eps^{2g-2} d_D coefficient at t = 0 gives
//
//   sum_i b_{k,i} s_i C(g, {i+k} u D) + sum_{d in D} b_{k,d} C(g, {d+k} u D\d)
//   + 1/2 sum a_ij [C(g-1, {i,j} u D) + sum_{I u J = D, g1+g2=g} C(g1,{i} u I) C(g2,{j} u J)]
//   + inhom = 0,
//
// which is solved for the term with i = lead.
#ifndef KDVGAL_SRC_VIRASORO_HPP
#define KDVGAL_SRC_VIRASORO_HPP

#include <functional>
#include <vector>

#include "kdvgal/errors.hpp"
#include "kdvgal/ypoly.hpp"

namespace kdvgal::detail {

struct VirasoroModel {
  int lead = 0;
  // s_i; only consulted for i in [0, max_shift].
  std::function<YPoly(int i)> shift;
  // Largest i whose shift term can contribute for the given (g, n, |D|+k).
  std::function<int(int g, int n, int base)> max_shift;
  std::function<YPoly(int k, int g, const std::vector<int>& D)> inhom;
  std::function<YPoly(int g, std::vector<int> ks)> lookup;
  // True when every correlator of shape (g, n) vanishes; such product terms
  // are skipped before any lookup, which keeps the recursion well founded.
  std::function<bool(int g, int n)> vanishes = [](int, int) { return false; };
};

inline Rational vir_b(int k, int i) {
  return double_factorial(2 * k + 2 * i + 1) / (power(Rational(2), k + 1) * double_factorial(2 * i - 1));
}

inline Rational vir_a(int k, int i, int j) {
  return double_factorial(2 * i + 1) * double_factorial(2 * j + 1) / power(Rational(2), k + 1);
}

// Returns C(g, {lead+k} u D) from L_k.
inline YPoly virasoro_solve(const VirasoroModel& m, int g, int k, const std::vector<int>& D) {
  const int n = static_cast<int>(D.size()) + 1;
  int base = k;
  for (int d : D) base += d;

  auto with = [&](std::vector<int> ks, int extra) {
    ks.push_back(extra);
    return ks;
  };

  YPoly rest = m.inhom(k, g, D);

  int imax = m.max_shift(g, n, base);
  for (int i = 0; i <= imax; ++i) {
    if (i == m.lead || i + k < 0) continue;
    YPoly s = m.shift(i);
    if (s.is_zero()) continue;
    YPoly c = m.lookup(g, with(D, i + k));
    if (c.is_zero()) continue;
    rest += s * c * vir_b(k, i);
  }

  for (std::size_t p = 0; p < D.size(); ++p) {
    int d = D[p];
    if (d + k < 0) continue;
    std::vector<int> ks = D;
    ks[p] = d + k;
    YPoly c = m.lookup(g, ks);
    if (!c.is_zero()) rest += c * vir_b(k, d);
  }

  if (k >= 1) {
    const std::size_t nd = D.size();
    for (int i = 0; i <= k - 1; ++i) {
      int j = k - 1 - i;
      YPoly acc;
      if (g >= 1) {
        std::vector<int> ks = D;
        ks.push_back(i);
        ks.push_back(j);
        acc += m.lookup(g - 1, ks);
      }
      for (std::size_t mask = 0; mask < (std::size_t{1} << nd); ++mask) {
        std::vector<int> left{i};
        std::vector<int> right{j};
        for (std::size_t p = 0; p < nd; ++p) {
          ((mask >> p) & 1 ? left : right).push_back(D[p]);
        }
        for (int g1 = 0; g1 <= g; ++g1) {
          if (m.vanishes(g1, static_cast<int>(left.size())) ||
              m.vanishes(g - g1, static_cast<int>(right.size()))) {
            continue;
          }
          YPoly a = m.lookup(g1, left);
          if (a.is_zero()) continue;
          YPoly b = m.lookup(g - g1, right);
          if (b.is_zero()) continue;
          acc += a * b;
        }
      }
      if (!acc.is_zero()) rest += acc * (vir_a(k, i, j) / 2);
    }
  }

  YPoly lead_coeff = m.shift(m.lead) * vir_b(k, m.lead);
  auto e = lead_coeff.single_power();
  if (!e) throw ConsistencyError("leading Virasoro coefficient is not a monomial in y");
  Rational c = lead_coeff.coeff(*e);
  return rest.shifted(-*e) * (Rational(-1) / c);
}

}  // namespace kdvgal::detail

#endif
