#include <doctest.h>

#include "kdvgal/engines.hpp"
#include "kdvgal/errors.hpp"
#include "kdvgal/report.hpp"
#include "oracles.hpp"

using namespace kdvgal;

TEST_SUITE("bgw") {
  TEST_CASE("cBGW coefficients c with their powers of x^2") {
    Engines e;
    auto c = [&](int g, std::vector<int> ks) { return e.bgw.cbgw_correlator(g, std::move(ks)); };
    CHECK(c(0, {0}).value == Rational(1, 4));
    CHECK(c(0, {0}).yexp == 1);
    CHECK(c(1, {0}).value == Rational(1, 8));
    CHECK(c(1, {0}).yexp == 0);
    CHECK(c(1, {1}).value == Rational(5, 96));
    CHECK(c(0, {0, 0, 0}).value == Rational(1, 2));
    CHECK(c(2, {0}).value == 0);
    CHECK(c(2, {2}).value == Rational(259, 7680));
    CHECK(c(0, {0}).as_ypoly() == YPoly::monomial(1, 1));
    CHECK_THROWS_AS(c(1, {}), DomainError);
  }

  TEST_CASE("lowest cBGW numbers are the BGW one-point numbers") {
    Engines e;
    for (int g = 1; g <= 3; ++g) CHECK(e.bgw.cbgw_correlator(g, {g - 1}).value == oracle::bgw_one_point(g));
  }

  TEST_CASE("NBI coefficients") {
    Engines e;
    auto n = [&](int g, std::vector<int> ks) { return e.bgw.nbi_correlator(g, std::move(ks)); };
    CHECK(n(1, {0}).value == Rational(1, 8));
    CHECK(n(1, {0}).yexp == 0);
    CHECK(n(0, {0, 0, 0}).value == 1);
    CHECK(n(0, {0, 0, 0}).yexp == 1);
    CHECK(n(2, {0}).value == 0);
    CHECK(n(2, {1, 3}).value == Rational(29, 480));
    CHECK(n(0, {0}).value == 0);
    CHECK(n(1, {2}).value == 0);
  }

  TEST_CASE("initial values in X to order 6") {
    Engines e;
    CHECK(e.bgw.initial_value_check(InitialSide::cBGW, 6, 2).ok());
    CHECK(e.bgw.initial_value_check(InitialSide::NBI, 6, 2).ok());
    CHECK(e.bgw.initial_value_check(InitialSide::NBI, 6, 2).records.size() == 21);
  }

  TEST_CASE("free energies") {
    Engines e;
    TruncationSpec t{1, 3, 2, 0, 0};
    GradedSeries fc = e.bgw.cbgw_free_energy(t);
    CHECK(fc.family() == Family::T);
    CHECK(fc.coeff(Monomial::of({{0, 1}}, 0, 1)) == 1);
    CHECK(fc.coeff(Monomial::of({{0, 2}}, 1)) == Rational(1, 16));
    GradedSeries fn = e.bgw.nbi_free_energy(t);
    CHECK(fn.family() == Family::R);
    CHECK(fn.coeff(Monomial::of({{0, 3}}, 0, 1)) == Rational(1, 3));
    CHECK(fn.coeff(Monomial::of({{0, 1}}, 1)) == Rational(1, 8));
  }
}

TEST_SUITE("kappa") {
  TEST_CASE("renormalized s^NBI sequence") {
    SchurShift s = snbi_coefficients(5);
    const long expected[] = {1, 7, 69, 843, 12081};
    for (int j = 1; j <= 5; ++j) {
      Rational v = j * s.svals[static_cast<std::size_t>(j - 1)] / 3;
      CHECK(abs(v) == expected[j - 1]);
      CHECK(sgn(v) == (j % 2 ? 1 : -1));
    }
    CHECK(s.pvals[2] == 15);
    CHECK_THROWS_AS(snbi_coefficients(0), RangeError);
  }

  TEST_CASE("Schur polynomials reproduce p_j at s = s^NBI") {
    SchurShift s = snbi_coefficients(4);
    std::vector<SPoly> p = schur_polynomials(4);
    for (int j = 0; j <= 4; ++j) {
      Rational v = 0;
      for (const auto& [m, c] : p[static_cast<std::size_t>(j)]) {
        Rational term = c;
        for (std::size_t i = 0; i < m.size(); ++i) term *= power(s.svals[i], m[i]);
        v += term;
      }
      CHECK(v == s.pvals[static_cast<std::size_t>(j)]);
    }
  }

  TEST_CASE("kappa-psi integrals") {
    Engines e;
    CHECK(e.kappa.kappa_psi_integral({1, {0}, {1}}) == Rational(1, 24));
    CHECK(e.kappa.kappa_psi_integral({0, {0, 0, 0, 0}, {1}}) == 1);
    CHECK(e.kappa.kappa_psi_integral({0, {0, 0, 0, 0, 0}, {1, 1}}) == 5);
    CHECK(e.kappa.kappa_psi_integral({0, {0, 0, 0, 0, 0}, {2}}) == 1);
    CHECK(e.kappa.kappa_psi_integral({2, {}, {3}}) == Rational(1, 1152));
    CHECK(e.kappa.kappa_psi_integral({1, {0}, {2}}) == 0);
    CHECK_THROWS_AS(e.kappa.kappa_psi_integral({1, {0}, {0}}), RangeError);
  }

  TEST_CASE("integrals of K against psi classes") {
    Engines e;
    CHECK(e.kappa.kn_psi_integral(1, {0}) == Rational(1, 8));
    CHECK(e.kappa.kn_psi_integral(0, {0, 0, 0}) == 1);
    CHECK(e.kappa.kn_psi_integral(2, {0}) == 0);
    CHECK(e.kappa.kn_psi_integral(2, {}) == Rational(-1, 240));
    CHECK(e.kappa.kn_psi_integral(3, {}) == Rational(-1, 1008));
    CHECK(e.kappa.kn_psi_integral(1, {2}) == 0);
    CHECK_THROWS_AS(e.kappa.kn_psi_integral(0, {0, 0}), DomainError);
    CHECK_THROWS_AS(e.kappa.kn_psi_integral(1, {}), DomainError);
  }

  TEST_CASE("partitions") {
    CHECK(partitions(0).size() == 1);
    CHECK(partitions(5).size() == 7);
    CHECK(partitions(8).size() == 22);
    CHECK(partitions(-1).empty());
  }
}
