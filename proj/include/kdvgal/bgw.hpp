#ifndef KDVGAL_BGW_HPP
#define KDVGAL_BGW_HPP

#include <vector>

#include "kdvgal/correlator_table.hpp"
#include "kdvgal/series.hpp"
#include "kdvgal/ypoly.hpp"

namespace kdvgal {

struct VerificationReport;

// d^n F_g^cBGW at t = 0 equals value * (4y)^yexp with yexp = |k| - g + 1.
struct BgwCoefficient {
  int g = 0;
  std::vector<int> ks;
  Rational value;
  int yexp = 0;

  YPoly as_ypoly() const { return YPoly::scaled_power(value, 4, yexp); }
};

// d^n F_g^NBI at r = 0 equals value * (2y)^yexp with yexp = |k| + 1 - g.
struct NbiCoefficient {
  int g = 0;
  std::vector<int> ks;
  Rational value;
  int yexp = 0;

  YPoly as_ypoly() const { return YPoly::scaled_power(value, 2, yexp); }
};

enum class InitialSide { cBGW, NBI };

class BgwEngine {
 public:
  BgwEngine(CorrelatorTable& cbgw, CorrelatorTable& nbi);

  BgwCoefficient cbgw_correlator(int g, std::vector<int> ks) const;
  NbiCoefficient nbi_correlator(int g, std::vector<int> ks) const;

  GradedSeries cbgw_free_energy(const TruncationSpec& trunc) const;
  GradedSeries nbi_free_energy(const TruncationSpec& trunc) const;

  // u(x, X, 0; eps) against (y + eps^2/8)/(1-X)^2 (minus y for NBI), X^m for m <= order.
  VerificationReport initial_value_check(InitialSide side, int order, int gmax) const;

 private:
  YPoly cbgw_full(int g, std::vector<int> ks) const;
  YPoly nbi_full(int g, std::vector<int> ks) const;

  CorrelatorTable& cbgw_;
  CorrelatorTable& nbi_;
};

}  // namespace kdvgal

#endif
