#ifndef KDVGAL_SERIES_HPP
#define KDVGAL_SERIES_HPP

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kdvgal/rational.hpp"

namespace kdvgal {

// Which time family a series is written in: t_k (WK, cBGW) or r_k (NBI).
enum class Family { T, R };

char family_letter(Family f);

// Bounds of the graded ring. Time indices up to cap() = kmax + headroom are
// stored; only indices <= kmax are promised to callers.
struct TruncationSpec {
  int gmax = 0;
  int nmax = 0;
  int kmax = 0;
  int qmax = 0;
  int headroom = 0;

  int cap() const { return kmax + headroom; }
  void validate() const;
  std::string describe() const;

  bool operator==(const TruncationSpec&) const = default;
};

// A monomial eps^{2 genus} y^{yexp} q^{qexp} prod t_i^{e_i}.
//
// The genus grade is additive under multiplication, so a free energy
// sum_g eps^{2g-2} F_g is stored with F_g at grade g (the overall eps^{-2}
// stays implicit) and a solution u = eps^2 d0^2 F carries eps^{2g} at grade g.
// y stands for x^2/4. Field order gives the canonical term order.
struct Monomial {
  int genus = 0;
  int yexp = 0;
  int qexp = 0;
  std::vector<std::pair<int, int>> texp;  // (index, exponent>0), sorted by index

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

  static Monomial of(std::vector<std::pair<int, int>> t, int genus = 0, int yexp = 0, int qexp = 0);

  int degree() const;
  int max_index() const;
  int exponent(int index) const;
  // Weight used for convergence of exp/log: time degree + q order + genus.
  int weight() const { return degree() + qexp + genus; }

  Monomial times(const Monomial& other) const;
};

// Sparse truncated series over Q in Q[y, 1/y][[t_0..t_cap, q]] with a genus grade.
// Terms outside the truncation are dropped on insertion, so every operation
// is closed under the truncation.
class GradedSeries {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit GradedSeries(const TruncationSpec& trunc, Family family = Family::T);

  static GradedSeries constant(const Rational& c, const TruncationSpec& trunc, Family family = Family::T);
  static GradedSeries variable(int index, const TruncationSpec& trunc, Family family = Family::T);
  static GradedSeries term(const Monomial& m, const Rational& c, const TruncationSpec& trunc,
                           Family family = Family::T);

  const TruncationSpec& trunc() const { return trunc_; }
  Family family() const { return family_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool admits(const Monomial& m) const;
  // Accumulates c into the coefficient of m; inadmissible monomials are dropped.
  void add_term(const Monomial& m, const Rational& c);
  Rational coeff(const Monomial& m) const;

  GradedSeries& operator+=(const GradedSeries& other);
  GradedSeries& operator-=(const GradedSeries& other);
  GradedSeries& operator*=(const Rational& c);

  friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
  friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }
  friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
  friend GradedSeries operator*(GradedSeries a, const Rational& c) { return a *= c; }
  friend GradedSeries operator*(const Rational& c, GradedSeries a) { return a *= c; }
  GradedSeries operator-() const;

  bool operator==(const GradedSeries& other) const;

 private:
  void require_compatible(const GradedSeries& other, const char* op) const;

  TruncationSpec trunc_;
  Family family_;
  TermMap terms_;
};

GradedSeries series_add(const GradedSeries& a, const GradedSeries& b);
GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b);
GradedSeries series_derive(const GradedSeries& a, int index);
GradedSeries derive_q(const GradedSeries& a);
Rational coeff_extract(const GradedSeries& a, const Monomial& m);

GradedSeries exp_truncated(const GradedSeries& a);
GradedSeries log_truncated(const GradedSeries& a);

GradedSeries power(const GradedSeries& a, int k);

// Replaces every t_i by images[i]; throws RangeError if a used index has no image.
GradedSeries substitute(const GradedSeries& a, const std::vector<GradedSeries>& images);

GradedSeries filter(const GradedSeries& a, const std::function<bool(const Monomial&)>& keep);
GradedSeries shift_genus(const GradedSeries& a, int by);
GradedSeries relabel(const GradedSeries& a, Family family);
GradedSeries retruncate(const GradedSeries& a, const TruncationSpec& trunc);
// Part of `a` at a single genus grade.
GradedSeries genus_part(const GradedSeries& a, int genus);

std::string render(const Monomial& m, Family family);
// Canonical deterministic rendering, e.g. "1/6*t0^3 + 1/24*g1*t1".
std::string render(const GradedSeries& a);

}  // namespace kdvgal

#endif
