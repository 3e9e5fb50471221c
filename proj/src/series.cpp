#include "kdvgal/series.hpp"

#include <algorithm>
#include <sstream>

#include "kdvgal/errors.hpp"

namespace kdvgal {

char family_letter(Family f) { return f == Family::T ? 't' : 'r'; }

void TruncationSpec::validate() const {
  if (gmax < 0 || nmax < 0 || kmax < 0 || qmax < 0 || headroom < 0) {
    throw ConfigError("truncation bounds must be non-negative: " + describe());
  }
}

std::string TruncationSpec::describe() const {
  std::ostringstream os;
  os << "gmax=" << gmax << " nmax=" << nmax << " kmax=" << kmax << " qmax=" << qmax
     << " headroom=" << headroom;
  return os.str();
}

Monomial Monomial::of(std::vector<std::pair<int, int>> t, int genus, int yexp, int qexp) {
  std::sort(t.begin(), t.end());
  Monomial m;
  m.genus = genus;
  m.yexp = yexp;
  m.qexp = qexp;
  for (auto [i, e] : t) {
    if (e == 0) continue;
    if (e < 0 || i < 0) throw RangeError("monomial needs non-negative indices and exponents");
    if (!m.texp.empty() && m.texp.back().first == i) {
      m.texp.back().second += e;
    } else {
      m.texp.emplace_back(i, e);
    }
  }
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto [i, e] : texp) d += e;
  return d;
}

int Monomial::max_index() const { return texp.empty() ? -1 : texp.back().first; }

int Monomial::exponent(int index) const {
  for (auto [i, e] : texp) {
    if (i == index) return e;
  }
  return 0;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial r;
  r.genus = genus + other.genus;
  r.yexp = yexp + other.yexp;
  r.qexp = qexp + other.qexp;
  r.texp.reserve(texp.size() + other.texp.size());
  auto a = texp.begin();
  auto b = other.texp.begin();
  while (a != texp.end() || b != other.texp.end()) {
    if (b == other.texp.end() || (a != texp.end() && a->first < b->first)) {
      r.texp.push_back(*a++);
    } else if (a == texp.end() || b->first < a->first) {
      r.texp.push_back(*b++);
    } else {
      r.texp.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return r;
}

GradedSeries::GradedSeries(const TruncationSpec& trunc, Family family) : trunc_(trunc), family_(family) {
  trunc_.validate();
}

GradedSeries GradedSeries::constant(const Rational& c, const TruncationSpec& trunc, Family family) {
  GradedSeries s(trunc, family);
  s.add_term(Monomial{}, c);
  return s;
}

GradedSeries GradedSeries::variable(int index, const TruncationSpec& trunc, Family family) {
  if (index < 0 || index > trunc.cap()) {
    throw RangeError("time index " + std::to_string(index) + " outside cap " + std::to_string(trunc.cap()));
  }
  GradedSeries s(trunc, family);
  s.add_term(Monomial::of({{index, 1}}), Rational(1));
  return s;
}

GradedSeries GradedSeries::term(const Monomial& m, const Rational& c, const TruncationSpec& trunc,
                                Family family) {
  GradedSeries s(trunc, family);
  s.add_term(m, c);
  return s;
}

bool GradedSeries::admits(const Monomial& m) const {
  if (m.genus < 0 || m.genus > trunc_.gmax) return false;
  if (m.qexp < 0 || m.qexp > trunc_.qmax) return false;
  if (m.degree() > trunc_.nmax) return false;
  if (m.max_index() > trunc_.cap()) return false;
  return true;
}

void GradedSeries::add_term(const Monomial& m, const Rational& c) {
  if (c == 0 || !admits(m)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational GradedSeries::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GradedSeries::require_compatible(const GradedSeries& other, const char* op) const {
  if (family_ != other.family_) {
    throw ConfigError(std::string(op) + ": series families differ");
  }
  if (!(trunc_ == other.trunc_)) {
    throw ConfigError(std::string(op) + ": truncations differ (" + trunc_.describe() + " vs " +
                      other.trunc_.describe() + ")");
  }
}

GradedSeries& GradedSeries::operator+=(const GradedSeries& other) {
  require_compatible(other, "series_add");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

GradedSeries& GradedSeries::operator-=(const GradedSeries& other) {
  require_compatible(other, "series_sub");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

GradedSeries& GradedSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
  a.require_compatible(b, "series_mul");
  GradedSeries r(a.trunc_, a.family_);
  const auto& t = a.trunc_;
  for (const auto& [ma, ca] : a.terms_) {
    int da = ma.degree();
    for (const auto& [mb, cb] : b.terms_) {
      // Cheap pre-checks before building the product monomial.
      if (ma.genus + mb.genus > t.gmax || ma.qexp + mb.qexp > t.qmax) continue;
      if (da + mb.degree() > t.nmax) continue;
      r.add_term(ma.times(mb), ca * cb);
    }
  }
  return r;
}

GradedSeries GradedSeries::operator-() const {
  GradedSeries r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

bool GradedSeries::operator==(const GradedSeries& other) const {
  return family_ == other.family_ && trunc_ == other.trunc_ && terms_ == other.terms_;
}

GradedSeries series_add(const GradedSeries& a, const GradedSeries& b) { return a + b; }
GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b) { return a * b; }

GradedSeries series_derive(const GradedSeries& a, int index) {
  if (index < 0 || index > a.trunc().cap()) {
    throw RangeError("derivative index " + std::to_string(index) + " outside cap " +
                     std::to_string(a.trunc().cap()));
  }
  GradedSeries r(a.trunc(), a.family());
  for (const auto& [m, c] : a.terms()) {
    int e = m.exponent(index);
    if (e == 0) continue;
    Monomial d = m;
    for (auto it = d.texp.begin(); it != d.texp.end(); ++it) {
      if (it->first != index) continue;
      if (--it->second == 0) d.texp.erase(it);
      break;
    }
    r.add_term(d, c * e);
  }
  return r;
}

GradedSeries derive_q(const GradedSeries& a) {
  GradedSeries r(a.trunc(), a.family());
  for (const auto& [m, c] : a.terms()) {
    if (m.qexp == 0) continue;
    Monomial d = m;
    d.qexp -= 1;
    r.add_term(d, c * m.qexp);
  }
  return r;
}

Rational coeff_extract(const GradedSeries& a, const Monomial& m) { return a.coeff(m); }

GradedSeries exp_truncated(const GradedSeries& a) {
  for (const auto& [m, c] : a.terms()) {
    if (m.weight() == 0) {
      throw DomainError("exp_truncated: argument has a constant term " + render(m, a.family()));
    }
  }
  GradedSeries result = GradedSeries::constant(1, a.trunc(), a.family());
  GradedSeries term = result;
  for (int k = 1; !term.is_zero(); ++k) {
    term = term * a;
    term *= Rational(1, k);
    result += term;
  }
  return result;
}

GradedSeries log_truncated(const GradedSeries& a) {
  GradedSeries rest(a.trunc(), a.family());
  bool unit = false;
  for (const auto& [m, c] : a.terms()) {
    if (m.weight() > 0) {
      rest.add_term(m, c);
    } else if (m == Monomial{} && c == 1) {
      unit = true;
    } else {
      throw DomainError("log_truncated: constant part is not 1 (found " + to_string(c) + "*" +
                        render(m, a.family()) + ")");
    }
  }
  if (!unit) throw DomainError("log_truncated: constant term must be 1");
  GradedSeries result(a.trunc(), a.family());
  GradedSeries pw = rest;
  for (int k = 1; !pw.is_zero(); ++k) {
    result += pw * Rational(k % 2 == 1 ? 1 : -1, k);
    pw = pw * rest;
  }
  return result;
}

GradedSeries power(const GradedSeries& a, int k) {
  if (k < 0) throw DomainError("negative power of a series");
  GradedSeries r = GradedSeries::constant(1, a.trunc(), a.family());
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

GradedSeries substitute(const GradedSeries& a, const std::vector<GradedSeries>& images) {
  GradedSeries result(a.trunc(), a.family());
  // powers[i][e] = images[i]^e, filled lazily.
  std::vector<std::vector<GradedSeries>> powers(images.size());
  auto image_power = [&](int i, int e) -> const GradedSeries& {
    auto& p = powers[static_cast<std::size_t>(i)];
    if (p.empty()) p.push_back(GradedSeries::constant(1, a.trunc(), a.family()));
    while (static_cast<int>(p.size()) <= e) p.push_back(p.back() * images[static_cast<std::size_t>(i)]);
    return p[static_cast<std::size_t>(e)];
  };
  for (const auto& img : images) {
    if (img.family() != a.family() || !(img.trunc() == a.trunc())) {
      throw ConfigError("substitute: image series incompatible with the source");
    }
  }
  for (const auto& [m, c] : a.terms()) {
    Monomial base;
    base.genus = m.genus;
    base.yexp = m.yexp;
    base.qexp = m.qexp;
    GradedSeries acc = GradedSeries::term(base, c, a.trunc(), a.family());
    for (auto [i, e] : m.texp) {
      if (i >= static_cast<int>(images.size())) {
        throw RangeError("substitute: no image for index " + std::to_string(i));
      }
      acc = acc * image_power(i, e);
      if (acc.is_zero()) break;
    }
    result += acc;
  }
  return result;
}

GradedSeries filter(const GradedSeries& a, const std::function<bool(const Monomial&)>& keep) {
  GradedSeries r(a.trunc(), a.family());
  for (const auto& [m, c] : a.terms()) {
    if (keep(m)) r.add_term(m, c);
  }
  return r;
}

GradedSeries shift_genus(const GradedSeries& a, int by) {
  GradedSeries r(a.trunc(), a.family());
  for (const auto& [m, c] : a.terms()) {
    Monomial s = m;
    s.genus += by;
    r.add_term(s, c);
  }
  return r;
}

GradedSeries relabel(const GradedSeries& a, Family family) {
  GradedSeries r(a.trunc(), family);
  for (const auto& [m, c] : a.terms()) r.add_term(m, c);
  return r;
}

GradedSeries retruncate(const GradedSeries& a, const TruncationSpec& trunc) {
  GradedSeries r(trunc, a.family());
  for (const auto& [m, c] : a.terms()) r.add_term(m, c);
  return r;
}

GradedSeries genus_part(const GradedSeries& a, int genus) {
  return filter(a, [genus](const Monomial& m) { return m.genus == genus; });
}

std::string render(const Monomial& m, Family family) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << '*';
    first = false;
  };
  if (m.genus != 0) {
    sep();
    os << 'g' << m.genus;
  }
  if (m.yexp != 0) {
    sep();
    os << 'y';
    if (m.yexp != 1) os << '^' << m.yexp;
  }
  if (m.qexp != 0) {
    sep();
    os << 'q';
    if (m.qexp != 1) os << '^' << m.qexp;
  }
  for (auto [i, e] : m.texp) {
    sep();
    os << family_letter(family) << i;
    if (e != 1) os << '^' << e;
  }
  if (first) os << '1';
  return os.str();
}

std::string render(const GradedSeries& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c) << '*' << render(m, a.family());
  }
  return os.str();
}

}  // namespace kdvgal
