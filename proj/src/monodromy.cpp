#include "ps3/monodromy.hpp"

#include <cmath>

#include "ps3/errors.hpp"

namespace ps3 {

static const cplx kEps = std::exp(cplx(0, 2.0 * M_PI / 3.0));

double SpectralParams::mu() const {
  return std::sqrt((3.0 - lambda) / (2.0 * lambda));
}

void SpectralParams::check(bool needs_K) const {
  if (!(lambda > 1e-6) || !(lambda < 3.0 - 1e-6) || std::abs(lambda - 1.0) < 1e-6)
    throw RangeViolation("lambda outside the admissible range");
  (void)needs_K;  // the generic guard already excludes 0 and 3
}

Mat3 perm_generator(int s) {
  Mat3 m = Mat3::Zero();
  switch (s) {
    case 1: m << 1, 0, 0, 0, 0, 1, 0, 1, 0; break;
    case 2: m << 0, 0, 1, 0, 1, 0, 1, 0, 0; break;
    case 3: m << 0, 1, 0, 1, 0, 0, 0, 0, 1; break;
    default: throw InvalidInput("perm_generator: s must be 1, 2 or 3");
  }
  return m;
}

Mat3 D_matrix(double lambda) {
  SpectralParams{lambda}.check();
  double d = 2.0 / (lambda - 1.0);
  Mat3 m;
  m << -1, d, d, 0, 1, 0, 0, 0, 1;
  return m;
}

Mat3 J_gram(double lambda) {
  double d = 2.0 / (lambda - 1.0);
  Mat3 g;
  g << 1, -d / 2, -d / 2, -d / 2, 1, -d / 2, -d / 2, -d / 2, 1;
  return g;
}

cplx J_form(const Vec3& W, double lambda) {
  // note: the bilinear extension (no conjugation), J is a quadratic form
  return W.transpose() * J_gram(lambda) * W;
}

Mat3 K_matrix(double lambda) {
  SpectralParams sp{lambda};
  sp.check(true);
  double d = sp.delta();
  cplx scale = 1.0 / std::sqrt(cplx(3.0 * d + 6.0, 0.0));
  Mat3 F, S;
  F << 1, 1, 1, 1, kEps * kEps, kEps, 1, kEps, kEps * kEps;
  S << 0, 1.0 / sp.mu(), 0, 0, 0, 1, 1, 0, 0;
  return scale * F * S;
}

PPair p_coordinates(const Vec3& W, double lambda) {
  Mat3 K = K_matrix(lambda);
  Vec3 V = K.inverse() * W;
  cplx s = std::sqrt(J_form(W, lambda));
  cplx i(0, 1);
  auto coord = [&](int sign) -> cplx {
    cplx num1 = V(1) + double(sign) * i * s, den1 = V(0);
    cplx num2 = V(2), den2 = V(1) - double(sign) * i * s;
    // use whichever representation is better conditioned
    if (std::abs(den1) >= std::abs(den2)) {
      if (std::abs(den1) < 1e-14 * num1.imag() + 1e-300)
        throw SolverFailure("p_coordinates: degenerate vector");
      return num1 / den1;
    }
    return num2 / den2;
  };
  return PPair{coord(+1), coord(-1)};
}

Vec3 W_from_p(cplx pp, cplx pm, cplx sq, double lambda) {
  Mat3 K = K_matrix(lambda);
  Vec3 V;
  V << 1.0, (pp + pm) / 2.0, pp * pm;
  cplx i(0, 1);
  return (2.0 * i * sq / (pp - pm)) * (K * V);
}

Mat3 so3_from_mobius(const Mobius& m, double lambda) {
  Mat3 K = K_matrix(lambda);
  cplx det = m.a * m.d - m.b * m.c;
  if (std::abs(det) < 1e-300) throw InvalidInput("singular moebius map");
  Mat3 M;
  M << m.d * m.d, 2.0 * m.c * m.d, m.c * m.c,
       m.b * m.d, m.a * m.d + m.b * m.c, m.a * m.c,
       m.b * m.b, 2.0 * m.a * m.b, m.a * m.a;
  return K * (M / det) * K.inverse();
}

Mobius chi_perm(int s) {
  if (s < 1 || s > 3) throw InvalidInput("chi_perm: s must be 1, 2 or 3");
  cplx w = std::pow(kEps, 1 - s);
  return Mobius{0, w, 1, 0};
}

Mobius chi_D(double lambda) {
  double mu = SpectralParams{lambda}.mu();
  return Mobius{mu, -1, 1, -mu};
}

CircleC circle_C(double lambda) {
  double mu = SpectralParams{lambda}.mu();
  CircleC c;
  c.center = 1.0 / mu;
  double r2 = 1.0 / (mu * mu) - 1.0;
  if (r2 <= 0) {
    c.empty = true;
    c.radius = 0;
  } else {
    c.radius = std::sqrt(r2);
  }
  return c;
}

}  // namespace ps3
