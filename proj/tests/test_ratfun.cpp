#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "ps3/errors.hpp"
#include "ps3/ratfun.hpp"

using namespace ps3;

TEST_CASE("normalized covering invariants at c = 0.4") {
  // N(x) = x^2((2c-1)x + (2-3c))/(x-c) with c = 0.4 has its positive
  // critical points at x = 1 (value 1) and x = b = c(3c-2)/(2c-1) = 1.6,
  // with critical value a = c(3c-2)^3/(2c-1) = 1.024
  RationalDeg3 n;
  n.num = {0, 0, 0.8, -0.2};
  n.den = {-0.4, 1.0};
  CHECK(n(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(n(1.6) == doctest::Approx(1.024).epsilon(1e-14));
  CHECK(n.deriv(1.0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(n.deriv(1.6) == doctest::Approx(0.0).epsilon(1e-12));
  // ordinary preimages: N = 0 at x = (3c-2)/(2c-1) = 4, N = 1 again at
  // x = c/(1-2c) = 2
  CHECK(n(4.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(n(2.0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("fixture A: branch data") {
  RationalDeg3 r = fixture(CaseLabel::A);
  CHECK(r(-1.0) == doctest::Approx(-1.0));
  CHECK(r(1.0) == doctest::Approx(1.0));

  BranchData bd = critical_data(r);
  // critical points in the t chart t -> 1.3 + 0.2t: preimages of
  // {0, 1, 1.6, inf} = {x=0 (double...)}: the covering's critical points
  // x in {0, 1, 1.6, inf} pull back to t in {-6.5, -1.5, 1.5, inf}
  std::vector<double> expect{-6.5, -1.5, 1.5};
  int found = 0, infs = 0;
  for (double b : bd.b) {
    if (at_infinity(b)) { ++infs; continue; }
    for (double e : expect)
      if (std::abs(b - e) < 1e-9) ++found;
  }
  CHECK(found == 3);
  CHECK(infs == 1);
}

TEST_CASE("classification of all five fixtures") {
  CHECK(classify(fixture(CaseLabel::A)).label == CaseLabel::A);
  CHECK(classify(fixture(CaseLabel::B1)).label == CaseLabel::B1);
  CHECK(classify(fixture(CaseLabel::B21)).label == CaseLabel::B21);
  CHECK(classify(fixture(CaseLabel::B22)).label == CaseLabel::B22);
  CHECK(classify(fixture(CaseLabel::B23)).label == CaseLabel::B23);
}

TEST_CASE("point types flip across critical values") {
  RationalDeg3 r = fixture(CaseLabel::A);
  BranchData bd = critical_data(r);
  // inside (a1,a2) exactly one real preimage, inside (a2,a3) three
  Arc g12 = arc_avoiding(bd.a[0], bd.a[1], {bd.a[2], bd.a[3]});
  Arc g23 = arc_avoiding(bd.a[1], bd.a[2], {bd.a[0], bd.a[3]});
  CHECK(point_type(r, g12.midpoint()) == 1);
  CHECK(point_type(r, g23.midpoint()) == 3);
  CHECK_THROWS_AS(point_type(r, bd.a[1]), AtBranchPoint);
}

TEST_CASE("preimages respect multiplicity and infinity bookkeeping") {
  RationalDeg3 r = fixture(CaseLabel::B1);
  for (double y : {-0.7, 0.2, 0.9}) {
    Preimages p = preimages(r, y);
    CHECK((int)p.finite.size() + p.at_inf == 3);
    for (cplx z : p.finite)
      CHECK(std::abs(r(z) - cplx(y, 0)) < 1e-8);
  }
}

TEST_CASE("gauge transforms move critical points but keep critical values") {
  RationalDeg3 r = fixture(CaseLabel::A);
  BranchData bd = critical_data(r);
  Gauge g{0.3, +1};
  RationalDeg3 r2 = gauge_apply(r, g, GaugeSide::pre);
  validate_interval(r2);
  BranchData bd2 = critical_data(r2);
  // critical values are untouched by a pre-composition
  std::vector<double> va(bd.a.begin(), bd.a.end());
  std::vector<double> va2(bd2.a.begin(), bd2.a.end());
  auto key = [](double x) { return circle_angle(x); };
  std::sort(va.begin(), va.end(), [&](double p, double q) { return key(p) < key(q); });
  std::sort(va2.begin(), va2.end(), [&](double p, double q) { return key(p) < key(q); });
  for (int i = 0; i < 4; ++i) CHECK(circle_same(va[i], va2[i], 1e-7));
  // critical points move by the inverse gauge map
  RealMobius inv = g.mobius().inverse();
  for (double b : bd.b) {
    double moved = inv(b);
    bool hit = false;
    for (double b2 : bd2.b)
      if (circle_same(b2, moved, 1e-7)) hit = true;
    CHECK(hit);
  }
}

TEST_CASE("classification invariant under random gauges") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> U(-0.6, 0.6);
  for (CaseLabel cl : {CaseLabel::A, CaseLabel::B1, CaseLabel::B21,
                       CaseLabel::B22, CaseLabel::B23}) {
    RationalDeg3 r = fixture(cl);
    for (int k = 0; k < 4; ++k) {
      Gauge g{U(rng), rng() % 2 ? +1 : -1};
      RationalDeg3 r2 = gauge_apply(r, g, GaugeSide::pre);
      CHECK(classify(r2).label == cl);
    }
  }
}

TEST_CASE("degenerate inputs are rejected") {
  // pole inside [-1,1]
  RationalDeg3 bad1{{0, 0, 0, 1.0}, {-0.5, 1.0}};
  CHECK_THROWS_AS(validate(bad1), DegenerateBranching);
  // critical point inside [-1,1]: x^3 has one at 0
  RationalDeg3 bad2{{0, 0, 0, 1.0}, {1.0}};
  CHECK_THROWS_AS(validate(bad2), DegenerateBranching);
  // common factor
  RationalDeg3 bad3{{0, 0, 0, 1.0}, {-2.0, 1.0, 0, 0}};
  RationalDeg3 bad3b{poly_mul(bad3.num, Poly{-5, 1}), poly_mul(bad3.den, Poly{-5, 1})};
  CHECK_THROWS_AS(validate(bad3b), InvalidInput);
  // degree 2 is not degree 3
  RationalDeg3 bad4{{0, 0, 1.0}, {2.0}};
  CHECK_THROWS_AS(validate(bad4), InvalidInput);
}
