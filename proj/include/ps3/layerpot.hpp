#pragma once
// Boundary-integral condenser solver.  A condenser problem lives in one
// complex plane: a collection of boundary elements (straight segments,
// circles, analytic arcs), each carrying Dirichlet data 0/1 or an insulating
// (Neumann) condition.  Dirichlet elements get single-layer densities with
// the exact endpoint weight 1/sqrt(1-t^2) in Chebyshev modes; Neumann
// elements get double layers (sqrt(1-t^2) U-modes on arcs, Fourier on
// circles), whose normal derivative is continuous across the element, plus
// the classical free additive constant with a zero-total-charge constraint.
//
// The extremal distance between the two Dirichlet elements is 1/E with
// E = -2 pi q(element at potential 1); calibrated on the round annulus
// (modulus log(1/q)/(2 pi)).

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "ps3/mobius.hpp"  // cplx

namespace ps3 {

// parametrized boundary curve: circle (theta in [0,2pi)) or open analytic
// arc given by a Chebyshev expansion z(t) = sum coef[k] T_k(t), t in [-1,1]
struct Contour {
  bool closed = false;
  cplx center;      // circle only
  double radius = 0;
  std::vector<cplx> cheb;  // open arc only

  cplx point(double t) const;
  cplx dpoint(double t) const;
};

Contour make_segment(cplx a, cplx b);
Contour make_circle(cplx c, double r);
// least-squares Chebyshev fit of samples taken at uniform parameter values
Contour fit_arc(const std::vector<cplx>& samples, int degree = 40);

enum class BCKind { dirichlet, neumann };

struct BoundaryPiece {
  Contour contour;
  BCKind kind = BCKind::dirichlet;
  double value = 0.0;        // Dirichlet potential
  bool domain_inside = false;  // circles: which side belongs to the domain
};

class CondenserProblem {
 public:
  CondenserProblem(std::vector<BoundaryPiece> pieces, int order = 24);
  ~CondenserProblem();
  CondenserProblem(CondenserProblem&&) noexcept;
  CondenserProblem& operator=(CondenserProblem&&) noexcept;

  void solve();

  double energy() const;              // Dirichlet energy of the potential
  double charge(int piece) const;     // total single-layer charge
  double potential(cplx z) const;     // u(z), z off the boundary
  cplx conj_gradient(cplx z) const;   // u_x - i u_y (holomorphic F')

  // boundary limits of u and of F' on a piece, approached from side +1
  // (the left of the traversal direction, i.e. from z(t) + i*0*z'(t)) or
  // side -1; circles take the limit from their domain side and ignore the
  // side argument
  double bank_value(int piece, double t, int side = +1) const;
  cplx bank_fprime(int piece, double t, int side = +1) const;

  // mode-level boundary limits (the building blocks of the above)
  double own_value_entry(int piece, int mode, double t, int side) const;
  cplx own_fprime_entry(int piece, int mode, double t, int side) const;

 private:
  struct Block;  // per-piece modal bookkeeping
  std::vector<BoundaryPiece> pieces_;
  std::vector<Block> blocks_;
  int order_;
  Eigen::VectorXd coef_;
  double constant_ = 0.0;
  bool solved_ = false;

  // single mode of piece q evaluated away from that piece
  double layer_value_entry(int q, int mode, cplx z) const;
  cplx layer_fprime_entry(int q, int mode, cplx z) const;
};

// convenience: extremal distance between the piece at potential 1 and the
// piece at potential 0 (remaining pieces insulating)
double extremal_distance(std::vector<BoundaryPiece> pieces, int order = 24);

}  // namespace ps3
