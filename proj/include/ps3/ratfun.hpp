#pragma once
// Degree-3 real rational maps R(x) = P(x)/Q(x) and their branching data.
// The map must not degenerate on [-1,1]: 0 < |R'| < infinity there, and the
// four critical values are distinct real numbers (possibly infinity), none
// equal to +-1.  Critical values live on the circle R^; infinity is allowed
// and represented by an IEEE infinity.

#include <array>
#include <vector>

#include "ps3/circle.hpp"
#include "ps3/mobius.hpp"
#include "ps3/poly.hpp"

namespace ps3 {

struct RationalDeg3 {
  Poly num, den;  // ascending coefficients, max(deg num, deg den) == 3

  double operator()(double x) const;  // extended-real evaluation
  cplx operator()(cplx z) const;
  double deriv(double x) const;  // derivative at finite non-pole points

  // scale both polynomials by a common factor so coefficients are O(1)
  RationalDeg3 normalized() const;
};

// throws InvalidInput / DegenerateBranching if R is not an admissible map
void validate(const RationalDeg3& R);
// additionally require R([-1,1]) = [-1,1] (endpoints to endpoints)
void validate_interval(const RationalDeg3& R);

enum class CaseLabel { A, B1, B21, B22, B23 };
const char* to_string(CaseLabel c);

// branch data: a[s] critical values, b[s] critical points, c[s] the
// remaining (ordinary) preimage of a[s]; indices follow the labeling where
// the open intervals (a1,a2) and (a3,a4) consist of points with one real
// preimage (types alternate around the circle).  Index 0 here == "1" in
// formulas.  Two labelings satisfy this (they differ by the swap
// 1<->3, 2<->4); critical_data returns the one whose a[0] has the smaller
// circle angle, classify() returns the one that exhibits the case.
struct BranchData {
  std::array<double, 4> a, b, c;

  BranchData relabeled() const;  // the swap a1<->a3, a2<->a4 (etc. for b,c)
};

BranchData critical_data(const RationalDeg3& R);

// how many real preimages does y have: returns 3 for type (3:0),
// 1 for type (1:2); throws AtBranchPoint near a critical value
int point_type(const RationalDeg3& R, double y, double tol = 1e-9);

// all preimages of y (3 with multiplicity); infinities counted separately
struct Preimages {
  std::vector<cplx> finite;
  int at_inf = 0;
};
Preimages preimages(const RationalDeg3& R, double y);

struct Classification {
  CaseLabel label;
  BranchData data;  // labeling under which the case tests hold
};
Classification classify(const RationalDeg3& R);

// composition with real Moebius maps
RationalDeg3 pre_compose(const RationalDeg3& R, const RealMobius& L);   // R o L
RationalDeg3 post_compose(const RationalDeg3& R, const RealMobius& L);  // L o R

enum class GaugeSide { pre, post };
RationalDeg3 gauge_apply(const RationalDeg3& R, const Gauge& g, GaugeSide side);

// ---- reference maps used across the test-suite -------------------------
// Built from the normalized covering with parameter c (see pants.hpp for
// the inverse direction): a chart t -> t0 + t1*t places [-1,1] on the real
// axis where the covering behaves as required for the case, then the output
// is renormalized affinely so that the image of [-1,1] is [-1,1].
RationalDeg3 fixture(CaseLabel which);

}  // namespace ps3
