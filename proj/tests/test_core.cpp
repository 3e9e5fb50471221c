#include <doctest.h>

#include "kdvgal/errors.hpp"
#include "kdvgal/rational.hpp"
#include "kdvgal/series.hpp"
#include "kdvgal/ypoly.hpp"

using namespace kdvgal;

namespace {

const TruncationSpec kSmall{1, 4, 2, 2, 0};

GradedSeries t(int i, const TruncationSpec& tr = kSmall) { return GradedSeries::variable(i, tr); }

}  // namespace

TEST_SUITE("core") {
  TEST_CASE("rational text round trip and canonical parsing") {
    CHECK(to_string(Rational(3, 4)) == "3/4");
    CHECK(to_string(Rational(-5)) == "-5");
    CHECK(parse_rational("-7/21") == Rational(-1, 3));
    CHECK(parse_rational("12") == 12);
    CHECK_THROWS_AS(parse_rational("2/4", true), DomainError);
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("1/-3", true), DomainError);
    CHECK_THROWS_AS(parse_rational("x"), DomainError);
    CHECK_THROWS_AS(parse_rational(""), DomainError);
    CHECK(fraction(6, 8) == Rational(3, 4));
    CHECK(to_string(fraction(6, -8)) == "-3/4");
  }

  TEST_CASE("combinatorial helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(7) == 105);
    CHECK(double_factorial(8) == 384);
    CHECK_THROWS_AS(double_factorial(-3), DomainError);
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(3, 5) == 0);
    CHECK(power(Rational(-1, 2), 3) == Rational(-1, 8));
    CHECK(power(Rational(2, 3), -2) == Rational(9, 4));
    CHECK_THROWS_AS(power(Rational(0), -1), DomainError);
  }

  TEST_CASE("Bernoulli numbers") {
    std::vector<Rational> b = bernoulli_numbers(10);
    CHECK(b[0] == 1);
    CHECK(b[1] == Rational(-1, 2));
    CHECK(b[2] == Rational(1, 6));
    CHECK(b[3] == 0);
    CHECK(b[4] == Rational(-1, 30));
    CHECK(b[6] == Rational(1, 42));
    CHECK(b[8] == Rational(-1, 30));
    CHECK(b[10] == Rational(5, 66));
  }

  TEST_CASE("Laurent polynomials in y") {
    YPoly a = YPoly::monomial(2, 1) + YPoly(Rational(1, 2));
    YPoly b = YPoly::monomial(-1, -1);
    CHECK((a * b) == YPoly::monomial(-2, 0) + YPoly::monomial(Rational(-1, 2), -1));
    CHECK(YPoly::scaled_power(3, 4, 2) == YPoly::monomial(48, 2));
    CHECK(YPoly::scaled_power(0, 4, 2).is_zero());
    CHECK(a.single_power() == std::nullopt);
    CHECK(b.single_power() == -1);
    CHECK((a - a).is_zero());
    CHECK(a.shifted(2).coeff(3) == 2);
  }

  TEST_CASE("truncation drops out-of-window terms") {
    GradedSeries s = t(0) * t(0) * t(0) * t(0) * t(0);
    CHECK(s.is_zero());
    GradedSeries p = t(0) * t(1);
    CHECK(p.coeff(Monomial::of({{0, 1}, {1, 1}})) == 1);
    CHECK_FALSE(kSmall == TruncationSpec{1, 4, 2, 2, 1});
    CHECK_THROWS_AS(GradedSeries::variable(5, kSmall), RangeError);
  }

  TEST_CASE("mixing truncations or families is a configuration error") {
    GradedSeries a = t(0);
    GradedSeries b = GradedSeries::variable(0, TruncationSpec{1, 5, 2, 2, 0});
    CHECK_THROWS_AS(a + b, ConfigError);
    CHECK_THROWS_AS(a * b, ConfigError);
    CHECK_THROWS_AS(a + relabel(a, Family::R), ConfigError);
    CHECK_THROWS_AS((TruncationSpec{-1, 1, 1, 1, 0}.validate()), ConfigError);
  }

  TEST_CASE("differentiation") {
    GradedSeries s = t(0) * t(0) * t(1) * Rational(1, 2) + t(2);
    CHECK(series_derive(s, 0) == t(0) * t(1));
    CHECK(series_derive(s, 2) == GradedSeries::constant(1, kSmall));
    CHECK_THROWS_AS(series_derive(s, 3), RangeError);
    GradedSeries q = GradedSeries::term(Monomial::of({{0, 1}}, 0, 0, 2), 3, kSmall);
    CHECK(derive_q(q) == GradedSeries::term(Monomial::of({{0, 1}}, 0, 0, 1), 6, kSmall));
  }

  TEST_CASE("exp and log are mutually inverse on the truncation") {
    GradedSeries x = t(0) * Rational(1, 3) + t(1) * t(2) - t(0) * t(1) * Rational(2, 5);
    GradedSeries e = exp_truncated(x);
    CHECK(log_truncated(e) == x);
    CHECK(exp_truncated(log_truncated(GradedSeries::constant(1, kSmall) + x)) ==
          GradedSeries::constant(1, kSmall) + x);
    CHECK_THROWS_AS(exp_truncated(GradedSeries::constant(1, kSmall)), DomainError);
    CHECK_THROWS_AS(log_truncated(GradedSeries::constant(2, kSmall) + x), DomainError);
  }

  TEST_CASE("substitution") {
    GradedSeries s = t(0) * t(0) + t(1);
    std::vector<GradedSeries> img = {t(0) + t(1), t(2) * Rational(2), t(2)};
    CHECK(substitute(s, img) == t(0) * t(0) + t(0) * t(1) * Rational(2) + t(1) * t(1) + t(2) * Rational(2));
    CHECK_THROWS_AS(substitute(s, {t(0)}), RangeError);
  }

  TEST_CASE("genus grade shifting and rendering") {
    GradedSeries s = GradedSeries::term(Monomial::of({{0, 3}}), Rational(1, 6), kSmall);
    GradedSeries g1 = shift_genus(s, 1);
    CHECK(genus_part(g1, 1) == g1);
    CHECK(genus_part(g1, 0).is_zero());
    CHECK(shift_genus(g1, 1).is_zero());
    CHECK(render(s) == "1/6*t0^3");
    CHECK(render(GradedSeries(kSmall)) == "0");
    CHECK(render(Monomial::of({{1, 2}}, 1, -1, 1), Family::R).find("r1^2") != std::string::npos);
  }
}
