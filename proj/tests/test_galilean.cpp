#include <doctest.h>

#include "kdvgal/engines.hpp"
#include "kdvgal/errors.hpp"
#include "kdvgal/galilean.hpp"

using namespace kdvgal;

namespace {

const TruncationSpec kT{1, 4, 3, 3, 3};

Rational npoint(const NPointSeries& s, const NPointKey& k) {
  auto it = s.terms.find(k);
  return it == s.terms.end() ? Rational(0) : it->second;
}

}  // namespace

TEST_SUITE("galilean") {
  TEST_CASE("times map on t_0 and the solution shift") {
    GradedSeries u = GradedSeries::variable(0, kT);
    GradedSeries img = transform_solution(u, GalileanMap::formal());
    GradedSeries expected = u;
    expected.add_term(Monomial::of({{1, 1}}, 0, 0, 1), 1);
    expected.add_term(Monomial::of({{2, 1}}, 0, 0, 2), Rational(1, 2));
    expected.add_term(Monomial::of({{3, 1}}, 0, 0, 3), Rational(1, 6));
    expected.add_term(Monomial::of({}, 0, 0, 1), 1);
    CHECK(img == expected);
  }

  TEST_CASE("q = 0 is the identity") {
    Engines e;
    GradedSeries f = e.wk.free_energy(kT);
    CHECK(transform_log_tau(f, GalileanMap::formal(0)) == f);
    CHECK(transform_log_tau(f, GalileanMap::constant(0)) == f);
    CHECK(transform_solution(f, GalileanMap::formal(0)) == f);
  }

  TEST_CASE("quadratic correction on the WK free energy") {
    Engines e;
    GradedSeries f = transform_log_tau(e.wk.free_energy(kT), GalileanMap::formal());
    CHECK(f.coeff(Monomial::of({{0, 2}}, 0, 0, 1)) == Rational(1, 2));
    CHECK(transform_log_tau(GradedSeries(kT), GalileanMap::formal()) == quadratic_correction(GalileanMap::formal(), kT));
  }

  TEST_CASE("formal q without headroom is rejected") {
    TruncationSpec tight{1, 4, 3, 2, 1};
    GradedSeries s = GradedSeries::variable(0, tight);
    CHECK_THROWS_AS(galilean_times(s, GalileanMap::formal()), ConfigError);
    CHECK_NOTHROW(galilean_times(s, GalileanMap::constant(Rational(1, 2))));
  }

  TEST_CASE("specialized q = c y^e") {
    TruncationSpec t{0, 2, 2, 0, 0};
    GradedSeries s = GradedSeries::variable(0, t);
    GradedSeries img = galilean_times(s, GalileanMap::ypower(-1, 1));
    CHECK(img.coeff(Monomial::of({{1, 1}}, 0, 1)) == -1);
    CHECK(img.coeff(Monomial::of({{2, 1}}, 0, 2)) == Rational(1, 2));
  }

  TEST_CASE("transformed correlators gain the genus-0 corrections") {
    Engines e;
    TruncationSpec t{1, 5, 3, 3, 3};
    CorrelatorView v = correlator_view(e.wk.free_energy(t), 3, 2, 2);
    CorrelatorView w = transform_correlators(v, GalileanMap::formal());
    const GradedSeries& two = w.entries.at(CorrelatorKey::make(0, {0, 0}));
    CHECK(two.coeff(Monomial::of({}, 0, 0, 1)) == 1);
    const GradedSeries& one = w.entries.at(CorrelatorKey::make(0, {0}));
    CHECK(one.coeff(Monomial::of({{0, 1}}, 0, 0, 1)) == 1);
    // n = 3 entries are pure resummations
    const GradedSeries& three = w.entries.at(CorrelatorKey::make(0, {0, 0, 0}));
    CHECK(three.coeff(Monomial::of({})) == 1);
    CHECK_THROWS_AS(correlator_view(e.wk.free_energy(t), 3, 2, 3), ConfigError);
  }

  TEST_CASE("C-type n-point corrections") {
    NPointSeries c1{NPointKind::C, 1, 3, TruncationSpec{0, 2, 0, 3, 0}, {}};
    NPointSeries r1 = npoint_C_transform(c1, GalileanMap::formal());
    CHECK(npoint(r1, {-1, 1, 0, 1, {0}}) == 1);
    CHECK(npoint(r1, {-1, 2, 0, 1, {1}}) == Rational(1, 2));
    NPointSeries c2{NPointKind::C, 2, 3, TruncationSpec{0, 2, 0, 3, 0}, {}};
    NPointSeries r2 = npoint_C_transform(c2, GalileanMap::formal());
    CHECK(npoint(r2, {0, 1, 0, 0, {0, 0}}) == 1);
    CHECK(npoint(r2, {0, 2, 0, 0, {1, 0}}) == Rational(1, 2));
    CHECK(npoint_C_transform(c2, GalileanMap::formal(0)).terms.empty());
  }

  TEST_CASE("W-type n-point corrections") {
    NPointSeries w1{NPointKind::W, 1, 3, TruncationSpec{0, 2, 0, 3, 0}, {}};
    NPointSeries r1 = npoint_W_transform(w1, GalileanMap::formal());
    CHECK(npoint(r1, {-1, 1, 0, 1, {-3}}) == 1);
    CHECK(npoint(r1, {-1, 2, 0, 1, {-5}}) == Rational(3, 2));
    NPointSeries w2{NPointKind::W, 2, 3, TruncationSpec{0, 2, 0, 3, 0}, {}};
    NPointSeries r2 = npoint_W_transform(w2, GalileanMap::formal());
    for (const auto& [k, c] : r2.terms) CHECK(k.qexp >= 1);
    CHECK(npoint(r2, {0, 1, 0, 0, {-3, -3}}) == 1);
    CHECK(npoint(r2, {0, 2, 0, 0, {-5, -3}}) == Rational(3, 2));
    CHECK_THROWS_AS(npoint_W_transform(w2, GalileanMap::constant(1)), ConfigError);
    NPointSeries bad = w1;
    bad.terms[{0, 0, 0, 0, {-2}}] = 1;
    CHECK_THROWS_AS(npoint_W_transform(bad, GalileanMap::formal()), ConfigError);
  }
}
