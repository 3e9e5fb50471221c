#ifndef KDVGAL_FREE_ENERGY_HPP
#define KDVGAL_FREE_ENERGY_HPP

#include <map>
#include <string>
#include <vector>

#include "kdvgal/series.hpp"

namespace kdvgal {

// Time-independent parts of a free energy, kept outside the series ring.
// Each genus holds a formal sum of coeff*symbol, where symbol is an opaque
// tag such as "1", "log(y)" or "log(-x/2)".
class ConstantLedger {
 public:
  void add(int genus, const Rational& coeff, const std::string& symbol);
  Rational coeff(int genus, const std::string& symbol) const;
  bool empty() const { return entries_.empty(); }
  const std::map<int, std::map<std::string, Rational>>& entries() const { return entries_; }
  std::string str() const;

  bool operator==(const ConstantLedger&) const = default;

 private:
  std::map<int, std::map<std::string, Rational>> entries_;
};

struct FreeEnergy {
  GradedSeries series;
  ConstantLedger ledger;
};

}  // namespace kdvgal

#endif
