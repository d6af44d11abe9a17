#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ps3/circle.hpp"
#include "ps3/mobius.hpp"
#include "ps3/poly.hpp"

using namespace ps3;

TEST_CASE("roots of a cubic with known zeros") {
  // (x-1)(x+2)(x-0.5) = x^3 + 0.5x^2 - 2.5x + 1
  Poly p{1.0, -2.5, 0.5, 1.0};
  auto r = poly_real_roots(p);
  REQUIRE(r.size() == 3);
  CHECK(r[0] == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(r[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r[2] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("deflation by a double root") {
  // (x-2)^2 (3x+1)
  Poly p = poly_mul(poly_mul(Poly{-2, 1}, Poly{-2, 1}), Poly{1, 3});
  Poly q = poly_deflate(p, 2.0, 2);
  REQUIRE(poly_degree(q) == 1);
  CHECK(-q[0] / q[1] == doctest::Approx(-1.0 / 3.0));
}

TEST_CASE("circle angle chart is monotone and hits infinity") {
  CHECK(circle_angle(kInf) == doctest::Approx(M_PI));
  CHECK(circle_angle(0.0) == doctest::Approx(0.0));
  CHECK(circle_angle(-1e9) > -M_PI);
  CHECK(circle_point(circle_angle(3.7)) == doctest::Approx(3.7));
  CHECK(at_infinity(circle_point(M_PI)));
}

TEST_CASE("arcs through infinity") {
  Arc wrap{2.0, -3.0};  // 2 -> inf -> -3
  CHECK(wrap.contains(kInf));
  CHECK(wrap.contains(100.0));
  CHECK(wrap.contains(-10.0));
  CHECK(!wrap.contains(0.0));
  Arc plain{-1.0, 1.0};
  CHECK(plain.contains(0.0));
  CHECK(!plain.contains(kInf));
  CHECK(!arcs_intersect(wrap, plain));
}

TEST_CASE("arc_avoiding picks the right side") {
  Arc a = arc_avoiding(0.0, 5.0, {7.0, -2.0});
  CHECK(a.contains(2.0));
  CHECK(!a.contains(7.0));
  Arc b = arc_avoiding(0.0, 5.0, {3.0});
  CHECK(b.contains(kInf));
  CHECK(!b.contains(3.0));
}

TEST_CASE("arc set difference") {
  auto d = arc_minus(Arc{-1, 1}, Arc{-0.25, 0.25});
  REQUIRE(d.size() == 2);
  CHECK(d[0].lo == doctest::Approx(-1.0));
  CHECK(d[0].hi == doctest::Approx(-0.25));
  CHECK(d[1].lo == doctest::Approx(0.25));
  CHECK(d[1].hi == doctest::Approx(1.0));

  auto e = arc_minus(Arc{-1, 1}, Arc{0.5, 2.0});
  REQUIRE(e.size() == 1);
  CHECK(e[0].lo == doctest::Approx(-1.0));
  CHECK(e[0].hi == doctest::Approx(0.5));

  auto f = arc_minus(Arc{-1, 1}, Arc{-2.0, 2.0});
  CHECK(f.empty());

  // removing an arc that wraps through infinity

  auto g = arc_minus(Arc{-1, 1}, Arc{0.5, -0.5});
  REQUIRE(g.size() == 1);
  CHECK(g[0].lo == doctest::Approx(-0.5));
  CHECK(g[0].hi == doctest::Approx(0.5));
}

TEST_CASE("real moebius through extended points") {
  RealMobius m = RealMobius::through(0.0, 1.0, kInf, -1.0, 0.0, 1.0);
  CHECK(m(0.0) == doctest::Approx(-1.0));
  CHECK(m(1.0) == doctest::Approx(0.0));
  CHECK(m(kInf) == doctest::Approx(1.0));
  RealMobius mi = m.inverse();
  CHECK(mi(m(0.3)) == doctest::Approx(0.3));
  RealMobius comp = m.then(mi);
  CHECK(comp(7.7) == doctest::Approx(7.7));
}

TEST_CASE("gauge maps fix the unit interval") {
  Gauge g{0.37, -1};
  RealMobius m = g.mobius();
  CHECK(std::abs(m(1.0)) == doctest::Approx(1.0));
  CHECK(std::abs(m(-1.0)) == doctest::Approx(1.0));
  CHECK(std::abs(m(0.9)) < 1.0);
}
