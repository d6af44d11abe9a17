#pragma once
// The finite linear-algebra layer: 3x3 reflection generators, the invariant
// quadratic form J, the diagonalizing matrix K, projective coordinates
// p+/p- on the null cone of J, and the induced Moebius action chi.
//
// Conventions: delta = 2/(lambda-1), mu = sqrt((3-lambda)/(2*lambda)) > 0,
// eps = exp(2*pi*i/3).  J(W) = sum W_k^2 - delta * sum_{j<s} W_j W_s.
// K maps V-space to W-space with J(KV) = V1*V3 - V2^2.
// For T preserving J:  p(T W) = chi(T) p(W) if det T = +1, and the two
// coordinates swap on top of that if det T = -1.

#include <Eigen/Dense>
#include <complex>

#include "ps3/mobius.hpp"

namespace ps3 {

using Mat3 = Eigen::Matrix3cd;
using Vec3 = Eigen::Vector3cd;

struct SpectralParams {
  double lambda = 2.0;

  double delta() const { return 2.0 / (lambda - 1.0); }
  double mu() const;  // sqrt((delta-1)/(delta+2)) = sqrt((3-lambda)/(2 lambda))
  // guard: lambda must be in (0,3), away from the singular set {1} (and for
  // operations using K, away from {3} where mu vanishes and from 0)
  void check(bool needs_K = false) const;
};

// the three permutation reflections D_1, D_2, D_3 (s in {1,2,3})
Mat3 perm_generator(int s);
// the jump reflection D (depends on lambda through delta)
Mat3 D_matrix(double lambda);

cplx J_form(const Vec3& W, double lambda);
Mat3 J_gram(double lambda);   // J(W) = W^T Gram W
Mat3 K_matrix(double lambda);

struct PPair {
  cplx plus, minus;
};

// projective coordinates of W on/off the null cone; sqrt(J(W)) uses the
// principal branch.  Throws SolverFailure if W is too close to the
// bad locus (V1 = 0 and the fallback denominator also vanishes).
PPair p_coordinates(const Vec3& W, double lambda);

// inverse: W(p+, p-) given a choice sq of sqrt(J(W))
Vec3 W_from_p(cplx p_plus, cplx p_minus, cplx sq, double lambda);

// the J-orthogonal matrix representing the Moebius map (a b; c d)
Mat3 so3_from_mobius(const Mobius& m, double lambda);

// chi on the generators
Mobius chi_perm(int s);          // p -> eps^(1-s) / p
Mobius chi_D(double lambda);     // p -> (mu p - 1)/(p - mu)

struct CircleC {
  double center = 0;   // on the real axis, = 1/mu
  double radius = 0;   // sqrt(1/mu^2 - 1)
  bool empty = false;  // lambda < 1: no real circle
};
CircleC circle_C(double lambda);

}  // namespace ps3
