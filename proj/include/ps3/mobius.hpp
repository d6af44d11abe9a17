#pragma once
// Moebius maps.  RealMobius has real coefficients and therefore maps the
// extended real line to itself; both determinant signs occur (negative
// determinant reverses the orientation of the circle R^ while still being a
// holomorphic map of the sphere).  Gauge is the special one-parameter family
// t -> s*(t+alpha)/(alpha*t+1), |alpha| < 1, s = +/-1.

#include <complex>

#include "ps3/circle.hpp"

namespace ps3 {

using cplx = std::complex<double>;

struct Mobius {
  cplx a{1}, b{0}, c{0}, d{1};

  cplx operator()(cplx z) const;
  Mobius inverse() const;
  Mobius then(const Mobius& next) const;  // next o this
  static Mobius through(cplx z1, cplx z2, cplx z3,
                        cplx w1, cplx w2, cplx w3);
};

struct RealMobius {
  double a = 1, b = 0, c = 0, d = 1;

  double operator()(double t) const;  // extended-real arithmetic
  double deriv(double t) const;       // derivative at finite non-pole t
  RealMobius inverse() const;
  RealMobius then(const RealMobius& next) const;  // next o this
  double det() const { return a * d - b * c; }
  Mobius complexified() const { return Mobius{a, b, c, d}; }

  // map through three extended-real points (z_i -> w_i)
  static RealMobius through(double z1, double z2, double z3,
                            double w1, double w2, double w3);
};

// the gauge family: L(t) = sign*(t+alpha)/(alpha*t+1)
struct Gauge {
  double alpha = 0;  // |alpha| < 1
  int sign = +1;     // +1 or -1

  RealMobius mobius() const {
    return RealMobius{(double)sign, sign * alpha, alpha, 1.0};
  }
};

}  // namespace ps3
