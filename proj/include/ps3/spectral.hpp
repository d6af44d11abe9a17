#pragma once
// Direct collocation solver for the singular eigenproblem
//
//   lambda V.p. int u(t)/(t-x) dt  -  V.p. int u(t) R'(t)/(R(t)-R(x)) dt
//        = const,   x in (-1,1),
//
// in the weighted Chebyshev basis u(t) = sqrt(1-t^2) sum_n c_n U_{n-1}(t).
// Both singular integrals then have closed forms:
//
//   V.p. int sqrt(1-t^2) U_{n-1}(t)/(t-x) dt = -pi T_n(x),  x in (-1,1)
//        int sqrt(1-t^2) U_{n-1}(t)/(t-z) dt = -pi rho(z)^n, z off [-1,1]
//
// with rho(z) = z - sqrt(z^2-1), the branch with |rho| < 1.  The kernel of
// the second operator splits into elementary fractions over the preimages
// z_k(x) of R(x) plus a logarithmic-derivative term of the denominator, so
// every matrix entry is assembled from the two formulas above.

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "ps3/ratfun.hpp"

namespace ps3 {

// branch of z - sqrt(z^2-1) with modulus < 1 (modulus 1 exactly on [-1,1])
cplx rho(cplx z);

// first-kind Chebyshev points, M of them, strictly inside (-1,1)
std::vector<double> chebyshev_nodes(int M);

// values of V.p. int u/(t-x) at the given points, per basis column
Eigen::MatrixXd hilbert_block(int N, const std::vector<double>& nodes);
Eigen::MatrixXd hilbert_block(int N);  // at chebyshev_nodes(N)

// the two secondary solutions of R(z) = R(x); infinite ones come back as
// huge values through rho() = 0 convention, see implementation
std::array<cplx, 2> secondary_preimages(const RationalDeg3& R, double x);

// values of V.p. int u(t) R'(t)/(R(t)-R(x)) dt at the given points
Eigen::MatrixXd kernel_block(const RationalDeg3& R, int N,
                             const std::vector<double>& nodes);
Eigen::MatrixXd kernel_block(const RationalDeg3& R, int N);

struct SpectrumResult {
  std::vector<double> eigenvalues;            // ascending
  std::vector<Eigen::VectorXd> eigenvectors;  // coefficient vectors c
  std::vector<double> const_values;           // right-hand constants
  std::vector<double> residuals;              // off-grid sup-norm residuals
};

// collocation at N+1 points with the constant as extra unknown; eigenvalues
// filtered to essentially-real values in (0,3)
SpectrumResult solve_spectrum(const RationalDeg3& R, int N);

// sup-norm of lambda*(Hu)(x) - (Ku)(x) - cval over 4N off-grid points
double residual(const RationalDeg3& R, double lambda,
                const Eigen::VectorXd& coeffs, double cval);

// sign changes of u on a 10N-point interior grid
int count_zeros(const Eigen::VectorXd& coeffs);

// u(x) = sqrt(1-x^2) sum c_n U_{n-1}(x) evaluated via sin(n theta)
double eval_u(const Eigen::VectorXd& coeffs, double x);

// holomorphic continuation Phi(x) = int u(t)/(t-x) dt + const*, where the
// additive constant is chosen to make the functional equation homogeneous:
// const* = (int u Q'/Q dt - const) / (lambda - 3)
struct CauchyTransform {
  Eigen::VectorXd coeffs;
  double const_star = 0.0;

  cplx operator()(cplx x) const;  // throws OnSlot for x on [-1,1]
  // boundary values on the banks: Phi(t +- i0), t in (-1,1)
  cplx bank(double t, int sign) const;
};

CauchyTransform cauchy_transform(const RationalDeg3& R, double lambda,
                                 const Eigen::VectorXd& coeffs, double cval);

}  // namespace ps3
