#include "kdvgal/ypoly.hpp"

#include <sstream>

namespace kdvgal {

YPoly YPoly::monomial(const Rational& c, int e) {
  YPoly p;
  p.add(e, c);
  return p;
}

YPoly YPoly::scaled_power(const Rational& c, int base, int e) {
  return monomial(c * power(Rational(base), e), e);
}

void YPoly::add(int e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational YPoly::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> YPoly::single_power() const {
  if (terms_.size() != 1) return std::nullopt;
  return terms_.begin()->first;
}

YPoly& YPoly::operator+=(const YPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

YPoly& YPoly::operator-=(const YPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

YPoly& YPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [e, v] : terms_) v *= c;
  }
  return *this;
}

YPoly YPoly::shifted(int by) const {
  YPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + by, c);
  return r;
}

YPoly operator*(const YPoly& a, const YPoly& b) {
  YPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add(ea + eb, ca * cb);
  }
  return r;
}

std::string YPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c);
    if (e != 0) os << "*y^" << e;
  }
  return os.str();
}

}  // namespace kdvgal
