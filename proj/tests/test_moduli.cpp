// condenser solver and conformal moduli
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "ps3/errors.hpp"
#include "ps3/layerpot.hpp"
#include "ps3/membrane.hpp"
#include "ps3/moduli.hpp"
#include "ps3/spectral.hpp"

using namespace ps3;
using std::abs;

namespace {
constexpr double kPi = 3.14159265358979323846;

// complete elliptic integral K(k) by the arithmetic-geometric mean
double ellipK(double k) {
  double a = 1.0, b = std::sqrt(1.0 - k * k);
  for (int i = 0; i < 60 && abs(a - b) > 1e-16; ++i) {
    double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return kPi / (2.0 * a);
}

// extremal distance between the unit circle and the slit [0,r]
double groetzsch(double r) {
  return ellipK(std::sqrt(1.0 - r * r)) / (4.0 * ellipK(r));
}

// ... and between the unit circle and the symmetric slit [-r,r] (the
// square map makes it an unbranched double cover of the Groetzsch ring)
double groetzsch_sym(double r) { return 0.5 * groetzsch(r * r); }

BoundaryPiece dirichlet(Contour c, double v, bool inside = false) {
  BoundaryPiece p;
  p.contour = std::move(c);
  p.kind = BCKind::dirichlet;
  p.value = v;
  p.domain_inside = inside;
  return p;
}

BoundaryPiece neumann(Contour c, bool inside = false) {
  BoundaryPiece p;
  p.contour = std::move(c);
  p.kind = BCKind::neumann;
  p.domain_inside = inside;
  return p;
}
}  // namespace

TEST_CASE("round annulus calibration") {
  for (double q : {0.2, 0.5, 0.8}) {
    double d = extremal_distance(
        {dirichlet(make_circle(0.0, 1.0), 0.0, true),
         dirichlet(make_circle(0.0, q), 1.0)});
    CHECK(d == doctest::Approx(std::log(1.0 / q) / (2 * kPi)).epsilon(1e-10));
  }
  // eccentric circles: modulus from the coaxial-limit-point uniformizer
  Gcircle big;
  big.center = 0.0;
  big.radius = 1.0;
  Gcircle small;
  small.center = cplx(0.25, -0.15);
  small.radius = 0.3;
  AnnulusChart ch = uniformize_annulus(big, small);
  double d = extremal_distance(
      {dirichlet(make_circle(big.center, big.radius), 0.0, true),
       dirichlet(make_circle(small.center, small.radius), 1.0)});
  CHECK(d == doctest::Approx(std::log(1.0 / ch.q) / (2 * kPi)).epsilon(1e-9));
}

TEST_CASE("Groetzsch ring: circle versus straight slit") {
  for (double r : {0.3, 0.55, 0.75}) {
    double d = extremal_distance(
        {dirichlet(make_circle(0.0, 1.0), 0.0, true),
         dirichlet(make_segment(cplx(-r, 0), cplx(r, 0)), 1.0)},
        32);
    CHECK(d == doctest::Approx(groetzsch_sym(r)).epsilon(1e-8));
  }
}

TEST_CASE("insulating wall along a field line changes nothing") {
  // radial field lines of the round annulus: adding a Neumann slit on one
  // leaves the modulus intact (the double-layer density solves to zero)
  double q = 0.35;
  double base = std::log(1.0 / q) / (2 * kPi);
  double d = extremal_distance(
      {dirichlet(make_circle(0.0, 1.0), 0.0, true),
       dirichlet(make_circle(0.0, q), 1.0),
       neumann(make_segment(cplx(0.45, 0), cplx(0.9, 0)))});
  CHECK(d == doctest::Approx(base).epsilon(1e-9));
}

TEST_CASE("active insulator: Moebius invariance of a slit annulus") {
  // annulus with a curved Neumann arc that genuinely deflects the field;
  // transplant the whole configuration by a disk automorphism and refit
  double q = 0.3;
  std::vector<cplx> arc;
  for (int i = 0; i < 200; ++i) {
    double t = kPi / 4 * (-1.0 + 2.0 * i / 199.0);
    arc.push_back(0.62 * std::polar(1.0, t));  // concentric circular arc
  }
  double d0 = extremal_distance(
      {dirichlet(make_circle(0.0, 1.0), 0.0, true),
       dirichlet(make_circle(0.0, q), 1.0), neumann(fit_arc(arc))},
      28);
  CHECK(d0 > std::log(1.0 / q) / (2 * kPi));  // insulator lengthens the path

  cplx a(0.25, 0.1);  // automorphism (z - a)/(1 - conj(a) z)
  auto mob = [&](cplx z) { return (z - a) / (1.0 - std::conj(a) * z); };
  auto circ = [&](cplx c, double r) {
    Gcircle g = circle_from_points(mob(c + r), mob(c + r * cplx(0, 1)),
                                   mob(c - r));
    return make_circle(g.center, g.radius);
  };
  std::vector<cplx> arc2;
  for (cplx z : arc) arc2.push_back(mob(z));
  double d1 = extremal_distance({dirichlet(circ(0.0, 1.0), 0.0, true),
                                 dirichlet(circ(0.0, q), 1.0),
                                 neumann(fit_arc(arc2))},
                                28);
  CHECK(d1 == doctest::Approx(d0).epsilon(1e-7));
}

TEST_CASE("slit pants moduli: exact value and Moebius invariance") {
  RealSlitPants p;
  p.slots.resize(3);
  p.slots[0] = {Arc{-0.5, 0.5}, Color::red};
  p.slots[1] = {Arc{3.0, 3.1}, Color::green};
  p.slots[2] = {Arc{5.0, -5.0}, Color::blue};  // through infinity
  ModuliTriple t = moduli_of_slit_pants(p);
  CHECK(t.d12 > 0);
  CHECK(t.d23 > 0);
  CHECK(t.d31 > 0);
  // blue-red distance: scale by s=5, invert, map the outer slot to the unit
  // circle with rho; the inner slot becomes [-rho(10), rho(10)]
  double r0 = std::real(rho(cplx(10.0, 0.0)));
  CHECK(t.d31 == doctest::Approx(groetzsch_sym(r0)).epsilon(1e-7));

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int trial = 0; trial < 8; ++trial) {
    RealMobius m{unif(rng) + 2.0, unif(rng), unif(rng) * 0.2, 1.0};
    if (std::abs(m.det()) < 0.1) continue;
    ModuliTriple t2 = moduli_of_slit_pants(apply_mobius(p, m));
    CHECK(t2.d12 == doctest::Approx(t.d12).epsilon(1e-6));
    CHECK(t2.d23 == doctest::Approx(t.d23).epsilon(1e-6));
    CHECK(t2.d31 == doctest::Approx(t.d31).epsilon(1e-6));
  }
}

TEST_CASE("refinement convergence of slit pants moduli") {
  RealSlitPants p;
  p.slots.resize(3);
  p.slots[0] = {Arc{-1.0, 1.0}, Color::red};
  p.slots[1] = {Arc{2.0, 4.0}, Color::green};
  p.slots[2] = {Arc{-6.0, -3.0}, Color::blue};
  ModuliTriple a = moduli_of_slit_pants(p, 16);
  ModuliTriple b = moduli_of_slit_pants(p, 28);
  CHECK(abs(a.d12 - b.d12) < 1e-5);
  CHECK(abs(a.d23 - b.d23) < 1e-5);
  CHECK(abs(a.d31 - b.d31) < 1e-5);
}

TEST_CASE("membrane moduli: PB1 consistency and monotone slot response") {
  MembraneSpec s;
  s.fashion = Fashion::PB1;
  s.lambda = 1.5;
  s.m1 = 1;
  s.h1 = 3.2;
  s.h2 = 4.0;
  SurfaceAtlas atlas = build_membrane(s);
  ModuliTriple t = moduli_of_membrane(atlas, 32);
  CHECK(t.d12 > 0);
  CHECK(t.d23 > 0);
  CHECK(t.d31 > 0);
  // re-enter the same domain explicitly through a disk automorphism
  const Chart& ch = atlas.charts[0];
  cplx a(0.2, -0.3);
  auto mob = [&](cplx z) { return (z - a) / (1.0 - std::conj(a) * z); };
  auto circ = [&](double r) {
    Gcircle g =
        circle_from_points(mob(cplx(r, 0)), mob(cplx(0, r)), mob(cplx(-r, 0)));
    return make_circle(g.center, g.radius);
  };
  std::vector<cplx> arc2;
  for (cplx z : atlas.slits[0].zeta) arc2.push_back(mob(z));
  auto pair_d = [&](int which) {
    // which: 0 = red-green (slot insulating), 1 = green-blue (outer circle
    // insulating), 2 = blue-red (inner circle insulating)
    std::vector<BoundaryPiece> ps;
    if (which == 0)
      ps = {dirichlet(circ(1.0), 0.0, true), dirichlet(circ(ch.inner), 1.0),
            neumann(fit_arc(arc2))};
    else if (which == 1)
      ps = {neumann(circ(1.0), true), dirichlet(circ(ch.inner), 0.0),
            dirichlet(fit_arc(arc2), 1.0)};
    else
      ps = {dirichlet(circ(1.0), 1.0, true), neumann(circ(ch.inner)),
            dirichlet(fit_arc(arc2), 0.0)};
    return extremal_distance(std::move(ps), 32);
  };
  CHECK(pair_d(0) == doctest::Approx(t.d12).epsilon(1e-6));
  CHECK(pair_d(1) == doctest::Approx(t.d23).epsilon(1e-6));
  CHECK(pair_d(2) == doctest::Approx(t.d31).epsilon(1e-6));

  // longer slot -> smaller blue-red extremal distance
  double prev = 1e300;
  for (double h2 : {3.6, 4.0, 4.4}) {
    s.h2 = h2;
    ModuliTriple m = moduli_of_membrane(build_membrane(s));
    CHECK(m.d31 < prev);
    prev = m.d31;
  }
}

TEST_CASE("membrane moduli: PB2 quotients and grafted rejection") {
  MembraneSpec s;
  s.fashion = Fashion::PB21;
  s.lambda = 1.5;
  s.m1 = 2;
  s.h1 = 0.4;
  s.h2 = 0.3;
  ModuliTriple t = moduli_of_membrane(build_membrane(s));
  CHECK(t.d12 > 0);
  CHECK(t.d23 > 0);
  CHECK(t.d31 > 0);

  MembraneSpec g;
  g.fashion = Fashion::PA1;
  g.lambda = 1.5;
  g.m1 = 1;
  g.m2 = 1;
  g.h1 = 2.7;
  g.h2 = 0.2;
  CHECK_THROWS_AS(moduli_of_membrane(build_membrane(g)), SolverFailure);
}

TEST_CASE("matcher round trips PB1 and PA2") {
  MembraneSpec s;
  s.fashion = Fashion::PB1;
  s.lambda = 1.5;
  s.m1 = 1;
  s.h1 = 2.6;
  s.h2 = 3.4;
  ModuliTriple target = moduli_of_membrane(build_membrane(s), 16);
  MatchResult r = match(target, Fashion::PB1, 1, 0, 1e-6, 16);
  CHECK(abs(r.spec.lambda - 1.5) < 1e-4);
  CHECK(abs(r.spec.h1 - 2.6) < 1e-4);
  CHECK(abs(r.spec.h2 - 3.4) < 1e-4);
  CHECK(r.residual < 1e-6);
  CHECK(r.spec.lambda > 1.0);
  CHECK(r.spec.lambda < 2.0);

  MembraneSpec s2;
  s2.fashion = Fashion::PA2;
  s2.lambda = 1.4;
  s2.m1 = 1;
  s2.m2 = 0;
  s2.h1 = 0.8;
  s2.h2 = 1.6;
  ModuliTriple target2 = moduli_of_membrane(build_membrane(s2), 16);
  MatchResult r2 = match(target2, Fashion::PA2, 1, 0, 1e-6, 16);
  CHECK(abs(r2.spec.lambda - 1.4) < 1e-4);
  CHECK(abs(r2.spec.h1 - 0.8) < 1e-4);
  CHECK(abs(r2.spec.h2 - 1.6) < 1e-4);
}
