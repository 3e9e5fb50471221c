#ifndef KDVGAL_YPOLY_HPP
#define KDVGAL_YPOLY_HPP

#include <map>
#include <optional>
#include <string>

#include "kdvgal/rational.hpp"

namespace kdvgal {

// Laurent polynomial in y (= x^2/4) over Q.
class YPoly {
 public:
  YPoly() = default;
  YPoly(const Rational& c) { add(0, c); }  // NOLINT: constants convert implicitly

  static YPoly monomial(const Rational& c, int e);
  // c * (base*y)^e, e.g. (4y)^e or (2y)^e.
  static YPoly scaled_power(const Rational& c, int base, int e);

  void add(int e, const Rational& c);
  Rational coeff(int e) const;
  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Rational>& terms() const { return terms_; }

  // The exponent if exactly one power is present.
  std::optional<int> single_power() const;

  YPoly& operator+=(const YPoly& o);
  YPoly& operator-=(const YPoly& o);
  YPoly& operator*=(const Rational& c);
  YPoly shifted(int by) const;

  friend YPoly operator+(YPoly a, const YPoly& b) { return a += b; }
  friend YPoly operator-(YPoly a, const YPoly& b) { return a -= b; }
  friend YPoly operator*(const YPoly& a, const YPoly& b);
  friend YPoly operator*(YPoly a, const Rational& c) { return a *= c; }
  bool operator==(const YPoly& o) const { return terms_ == o.terms_; }

  std::string str() const;

 private:
  std::map<int, Rational> terms_;
};

}  // namespace kdvgal

#endif
