#include "ps3/mobius.hpp"

#include <cmath>

#include "ps3/errors.hpp"

namespace ps3 {

cplx Mobius::operator()(cplx z) const {
  return (a * z + b) / (c * z + d);
}

Mobius Mobius::inverse() const { return Mobius{d, -b, -c, a}; }

Mobius Mobius::then(const Mobius& n) const {
  return Mobius{n.a * a + n.b * c, n.a * b + n.b * d,
                n.c * a + n.d * c, n.c * b + n.d * d};
}

// map sending (z1,z2,z3) -> (0, 1, inf)
static Mobius to_standard(cplx z1, cplx z2, cplx z3) {
  // (z - z1)(z2 - z3) / ((z - z3)(z2 - z1))
  cplx p = z2 - z3, q = z2 - z1;
  return Mobius{p, -z1 * p, q, -z3 * q};
}

Mobius Mobius::through(cplx z1, cplx z2, cplx z3, cplx w1, cplx w2, cplx w3) {
  Mobius A = to_standard(z1, z2, z3);
  Mobius B = to_standard(w1, w2, w3);
  return A.then(B.inverse());
}

double RealMobius::operator()(double t) const {
  if (at_infinity(t)) {
    if (c == 0) return kInf;
    return a / c;
  }
  double num = a * t + b, den = c * t + d;
  if (den == 0) return kInf;
  return num / den;
}

double RealMobius::deriv(double t) const {
  double den = c * t + d;
  return det() / (den * den);
}

RealMobius RealMobius::inverse() const { return RealMobius{d, -b, -c, a}; }

RealMobius RealMobius::then(const RealMobius& n) const {
  return RealMobius{n.a * a + n.b * c, n.a * b + n.b * d,
                    n.c * a + n.d * c, n.c * b + n.d * d};
}

// real version of to_standard with infinity handling
static RealMobius real_to_standard(double z1, double z2, double z3) {
  // rows chosen so (z1,z2,z3) -> (0,1,inf)
  if (at_infinity(z1)) return RealMobius{0, z2 - z3, 1, -z3};
  if (at_infinity(z2)) return RealMobius{1, -z1, 1, -z3};
  if (at_infinity(z3)) return RealMobius{1.0 / (z2 - z1), -z1 / (z2 - z1), 0, 1};
  double p = z2 - z3, q = z2 - z1;
  return RealMobius{p, -z1 * p, q, -z3 * q};
}

RealMobius RealMobius::through(double z1, double z2, double z3,
                               double w1, double w2, double w3) {
  if (circle_same(z1, z2) || circle_same(z2, z3) || circle_same(z1, z3) ||
      circle_same(w1, w2) || circle_same(w2, w3) || circle_same(w1, w3))
    throw InvalidInput("RealMobius::through: points must be distinct");
  RealMobius A = real_to_standard(z1, z2, z3);
  RealMobius B = real_to_standard(w1, w2, w3);
  return A.then(B.inverse());
}

}  // namespace ps3
