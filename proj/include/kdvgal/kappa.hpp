#ifndef KDVGAL_KAPPA_HPP
#define KDVGAL_KAPPA_HPP

#include <map>
#include <vector>

#include "kdvgal/series.hpp"
#include "kdvgal/wk.hpp"

namespace kdvgal {

// s_1..s_J and p_0..p_J tied by exp(-sum s_j z^j) = sum p_j z^j.
struct SchurShift {
  std::vector<Rational> svals;  // svals[j-1] = s_j
  std::vector<Rational> pvals;  // pvals[j] = p_j, pvals[0] = 1
};

// s^NBI from p_j = (-1)^j (2j+1)!!.
SchurShift snbi_coefficients(int J);

struct KappaQuery {
  int g = 0;
  std::vector<int> ks;  // psi exponents
  std::vector<int> js;  // kappa indices, each >= 1
};

// Sparse polynomial in s_1, s_2, ...: exponent vector (index j-1) -> coefficient.
using SPoly = std::map<std::vector<int>, Rational>;

// p_0(s)..p_J(s) as polynomials in formal s.
std::vector<SPoly> schur_polynomials(int J);

class KappaEngine {
 public:
  explicit KappaEngine(const WkEngine& wk);

  // Integral of prod kappa_j prod psi^k over M_{g,n}.
  Rational kappa_psi_integral(const KappaQuery& q) const;

  // Integral of K_{3g-3+n-|k|} prod psi^k, K from s^NBI.
  Rational kn_psi_integral(int g, const std::vector<int>& ks) const;

  // Coefficient of r^K/Aut at genus g is (2y)^{|k|+1-g} kn_psi_integral(g, K).
  GradedSeries nbi_free_energy_kappa(const TruncationSpec& trunc) const;

 private:
  const WkEngine& wk_;
};

// Integer partitions of e into positive parts, each in non-increasing order.
std::vector<std::vector<int>> partitions(int e);

}  // namespace kdvgal

#endif
