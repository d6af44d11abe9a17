#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "ps3/errors.hpp"
#include "ps3/monodromy.hpp"

using namespace ps3;

static const double kLambdas[] = {1.2, 1.5, 2.0, 2.8};

TEST_CASE("generators are involutions") {
  for (int s = 1; s <= 3; ++s) {
    Mat3 d = perm_generator(s);
    CHECK((d * d - Mat3::Identity()).norm() == doctest::Approx(0.0));
  }
  for (double lam : kLambdas) {
    Mat3 d = D_matrix(lam);
    CHECK((d * d - Mat3::Identity()).norm() < 1e-12);
  }
}

TEST_CASE("J is invariant under all generators") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> U(-2, 2);
  for (double lam : kLambdas) {
    for (int trial = 0; trial < 20; ++trial) {
      Vec3 w(cplx(U(rng), U(rng)), cplx(U(rng), U(rng)), cplx(U(rng), U(rng)));
      cplx j = J_form(w, lam);
      for (int s = 1; s <= 3; ++s)
        CHECK(std::abs(J_form(perm_generator(s) * w, lam) - j) < 1e-12 * (1 + std::abs(j)));
      CHECK(std::abs(J_form(D_matrix(lam) * w, lam) - j) < 1e-12 * (1 + std::abs(j)));
    }
  }
}

TEST_CASE("J degenerates exactly at lambda in {0,3}") {
  // determinant of the Gram matrix vanishes iff delta in {-2, 1}
  for (double lam : kLambdas) {
    double det = std::abs(J_gram(lam).determinant());
    CHECK(det > 1e-6);
  }
  // lambda -> 3 means delta -> 1: Gram becomes singular
  double near3 = std::abs(J_gram(3.0 - 1e-12).determinant());
  CHECK(near3 < 1e-9);
}

TEST_CASE("K diagonalizes J to V1 V3 - V2^2") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> U(-2, 2);
  for (double lam : kLambdas) {
    Mat3 K = K_matrix(lam);
    for (int trial = 0; trial < 10; ++trial) {
      Vec3 v(cplx(U(rng), U(rng)), cplx(U(rng), U(rng)), cplx(U(rng), U(rng)));
      Vec3 w = K * v;
      cplx expect = v(0) * v(2) - v(1) * v(1);
      CHECK(std::abs(J_form(w, lam) - expect) < 1e-12 * (1 + std::abs(expect)));
    }
  }
}

TEST_CASE("p coordinates round trip through W") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> U(-2, 2);
  for (double lam : kLambdas) {
    for (int trial = 0; trial < 10; ++trial) {
      Vec3 w(cplx(U(rng), U(rng)), cplx(U(rng), U(rng)), cplx(U(rng), U(rng)));
      PPair p = p_coordinates(w, lam);
      cplx sq = std::sqrt(J_form(w, lam));
      Vec3 w2 = W_from_p(p.plus, p.minus, sq, lam);
      CHECK((w2 - w).norm() < 1e-10 * (1 + w.norm()));
    }
  }
}

TEST_CASE("chi is a homomorphism on moebius maps") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> U(-1.5, 1.5);
  for (double lam : kLambdas) {
    for (int trial = 0; trial < 8; ++trial) {
      Mobius m1{cplx(U(rng), U(rng)), cplx(U(rng), U(rng)), cplx(U(rng), U(rng)), cplx(U(rng), U(rng))};
      Mobius m2{cplx(U(rng), U(rng)), cplx(U(rng), U(rng)), cplx(U(rng), U(rng)), cplx(U(rng), U(rng))};
      Mat3 t12 = so3_from_mobius(m2.then(m1), lam);
      Mat3 t1 = so3_from_mobius(m1, lam);
      Mat3 t2 = so3_from_mobius(m2, lam);
      CHECK((t1 * t2 - t12).norm() < 1e-10 * (1 + t12.norm()));
      // J-orthogonality and unit determinant
      Mat3 g = J_gram(lam);
      CHECK((t1.transpose() * g * t1 - g).norm() < 1e-10 * g.norm());
      CHECK(std::abs(t1.determinant() - cplx(1, 0)) < 1e-10);
    }
  }
}

TEST_CASE("transformation rule on the generators (reflections swap p+/p-)") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> U(-2, 2);
  for (double lam : kLambdas) {
    for (int trial = 0; trial < 10; ++trial) {
      Vec3 w(cplx(U(rng), U(rng)), cplx(U(rng), U(rng)), cplx(U(rng), U(rng)));
      PPair p = p_coordinates(w, lam);
      for (int s = 1; s <= 3; ++s) {
        PPair q = p_coordinates(perm_generator(s) * w, lam);
        Mobius chi = chi_perm(s);
        CHECK(std::abs(q.plus - chi(p.minus)) < 1e-10 * (1 + std::abs(q.plus)));
        CHECK(std::abs(q.minus - chi(p.plus)) < 1e-10 * (1 + std::abs(q.minus)));
      }
      PPair q = p_coordinates(D_matrix(lam) * w, lam);
      Mobius chi = chi_D(lam);
      CHECK(std::abs(q.plus - chi(p.minus)) < 1e-10 * (1 + std::abs(q.plus)));
      CHECK(std::abs(q.minus - chi(p.plus)) < 1e-10 * (1 + std::abs(q.minus)));
    }
  }
}

TEST_CASE("transformation rule for orientation-preserving products") {
  // products of two reflections act without swapping
  std::mt19937 rng(43);
  std::uniform_real_distribution<double> U(-2, 2);
  double lam = 1.7;
  Vec3 w(cplx(U(rng), U(rng)), cplx(U(rng), U(rng)), cplx(U(rng), U(rng)));
  PPair p = p_coordinates(w, lam);
  Mat3 T = D_matrix(lam) * perm_generator(1);
  Mobius chi = chi_perm(1).then(chi_D(lam));
  PPair q = p_coordinates(T * w, lam);
  CHECK(std::abs(q.plus - chi(p.plus)) < 1e-10 * (1 + std::abs(q.plus)));
  CHECK(std::abs(q.minus - chi(p.minus)) < 1e-10 * (1 + std::abs(q.minus)));
}

TEST_CASE("circle C geometry") {
  for (double lam : {1.2, 1.5, 2.0, 2.8}) {
    CircleC c = circle_C(lam);
    REQUIRE(!c.empty);
    double mu = SpectralParams{lam}.mu();
    CHECK(c.center == doctest::Approx(1.0 / mu));
    // orthogonal to the unit circle: center^2 = 1 + radius^2
    CHECK(c.center * c.center == doctest::Approx(1.0 + c.radius * c.radius));
  }
  CHECK(circle_C(0.7).empty);
  // the chi(D) image of C stays on C
  double lam = 1.6;
  CircleC c = circle_C(lam);
  Mobius chi = chi_D(lam);
  for (double th : {0.3, 1.1, 2.7, 4.0}) {
    cplx p = c.center + c.radius * std::exp(cplx(0, th));
    cplx q = chi(p);
    CHECK(std::abs(std::abs(q - c.center) - c.radius) < 1e-12);
  }
}

TEST_CASE("parameter guards") {
  CHECK_THROWS_AS(D_matrix(1.0), RangeViolation);
  CHECK_THROWS_AS(K_matrix(3.0), RangeViolation);
  CHECK_THROWS_AS(K_matrix(0.0), RangeViolation);
  CHECK_NOTHROW(K_matrix(0.5));  // below 1 is allowed, K just turns complex
}
