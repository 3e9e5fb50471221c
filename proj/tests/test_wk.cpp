#include <doctest.h>

#include "kdvgal/engines.hpp"
#include "kdvgal/errors.hpp"
#include "kdvgal/report.hpp"
#include "oracles.hpp"

using namespace kdvgal;

TEST_SUITE("wk") {
  TEST_CASE("known intersection numbers") {
    Engines e;
    CHECK(e.wk.correlator(0, {0, 0, 0}) == 1);
    CHECK(e.wk.correlator(1, {1}) == Rational(1, 24));
    CHECK(e.wk.correlator(1, {2}) == 0);
    CHECK(e.wk.correlator(2, {4}) == Rational(1, 1152));
    CHECK(e.wk.correlator(0, {0, 0, 0, 0, 2}) == 1);
    CHECK(e.wk.correlator(2, {2, 3}) == Rational(29, 5760));
    CHECK(e.wk.correlator(1, {1, 1}) == Rational(1, 24));
  }

  TEST_CASE("engine matches the classical DVV recursion for g <= 3, n <= 4") {
    Engines e;
    oracle::Dvv dvv;
    int compared = 0;
    for (int g = 0; g <= 3; ++g) {
      for (int n = 1; n <= 4; ++n) {
        for_each_multiset(n, 3 * g - 3 + n + 1, [&](const std::vector<int>& ks) {
          CHECK_MESSAGE(e.wk.correlator(g, ks) == dvv(g, ks), "g=", g, " ks=", ks_label(ks));
          ++compared;
        });
      }
    }
    CHECK(compared > 500);
  }

  TEST_CASE("closed forms: genus-0 multinomial and one-point numbers") {
    Engines e;
    for (int n = 3; n <= 7; ++n) {
      for_each_multiset(n, n - 3, [&](const std::vector<int>& ks) {
        CHECK(e.wk.correlator(0, ks) == oracle::genus0_multinomial(ks));
      });
    }
    for (int g = 1; g <= 5; ++g) CHECK(e.wk.correlator(g, {3 * g - 2}) == oracle::one_point(g));
  }

  TEST_CASE("order of insertions is irrelevant and bad input is rejected") {
    Engines e;
    CHECK(e.wk.correlator(2, {3, 2}) == e.wk.correlator(2, {2, 3}));
    CHECK_THROWS_AS(e.wk.correlator(1, {-1, 3}), RangeError);
    CHECK_THROWS_AS(e.wk.correlator(-1, {0}), RangeError);
  }

  TEST_CASE("free energy coefficients carry 1/Aut") {
    Engines e;
    TruncationSpec t{1, 4, 3, 0, 0};
    GradedSeries f = e.wk.free_energy(t);
    CHECK(f.coeff(Monomial::of({{0, 3}})) == Rational(1, 6));
    CHECK(f.coeff(Monomial::of({{1, 1}}, 1)) == Rational(1, 24));
    CHECK(f.coeff(Monomial::of({{0, 1}, {2, 1}}, 1)) == Rational(1, 24));
    CHECK(f.coeff(Monomial::of({{1, 2}}, 1)) == Rational(1, 48));
    CHECK(f.coeff(Monomial::of({{0, 2}})) == 0);
  }

  TEST_CASE("genus-0 Euler-Lagrange solution with t_0, t_1 free is t_0/(1-t_1)") {
    TruncationSpec t{0, 5, 1, 0, 0};
    std::map<int, GradedSeries> a{{0, GradedSeries::variable(0, t)}, {1, GradedSeries::variable(1, t)}};
    GradedSeries v = solve_el(a);
    GradedSeries expected(t);
    for (int j = 0; j <= 4; ++j) expected.add_term(Monomial::of(j ? std::vector<std::pair<int, int>>{{0, 1}, {1, j}} : std::vector<std::pair<int, int>>{{0, 1}}), 1);
    CHECK(v == expected);
    CHECK_THROWS_AS(solve_el({{0, GradedSeries::constant(1, t)}}), DomainError);
  }

  TEST_CASE("genus-1 closed form keeps log(c) and log(y) in the ledger") {
    TruncationSpec t{1, 4, 1, 0, 0};
    GradedSeries x = GradedSeries::variable(0, t);
    GradedSeries v = GradedSeries::term(Monomial::of({{0, 1}}, 0, 1), 2, t) + x * x;
    FreeEnergy f = genus1_free_energy(v);
    CHECK(f.series.coeff(Monomial::of({{0, 1}}, 1, -1)) == Rational(1, 24));
    CHECK(f.series.coeff(Monomial::of({{0, 2}}, 1, -2)) == Rational(-1, 48));
    CHECK(f.ledger.coeff(1, "log(2)") == Rational(1, 24));
    CHECK(f.ledger.coeff(1, "log(y)") == Rational(1, 24));
  }
}
