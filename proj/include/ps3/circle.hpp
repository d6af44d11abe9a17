#pragma once
// Geometry of the extended real line R^ = R u {inf}, seen as a circle.
// Points are doubles where +/-inf both mean the single point at infinity.
// The angle chart phi(t) = 2*atan(t) identifies R^ with the circle
// (-pi, pi], with infinity sitting at phi = pi.  "Increasing direction"
// always means increasing angle (i.e. the usual direction on R, wrapping
// through infinity back to very negative numbers).

#include <cmath>
#include <limits>
#include <vector>

namespace ps3 {

constexpr double kInf = std::numeric_limits<double>::infinity();

inline bool at_infinity(double t) { return std::isinf(t); }

// same point on the circle?
bool circle_same(double a, double b, double tol = 1e-12);

// angle chart, monotone bijection R^ -> (-pi, pi]
double circle_angle(double t);
// inverse chart
double circle_point(double phi);

// strictly-between predicate: walking from a in increasing direction,
// do we meet b before coming back to a, with b != a, c != a, and b before c?
bool cyclic_less(double a, double b, double c);

// A closed arc on the circle R^, from `lo` to `hi` walking in the
// increasing direction.  lo == hi is not allowed (no degenerate arcs, and
// no full-circle arcs).  A plain segment [x,y] with x < y finite is
// Arc{x, y}; an arc through infinity is e.g. Arc{2, -3}.
struct Arc {
  double lo = 0, hi = 0;

  bool contains(double t, double tol = 0.0) const;          // closed
  bool contains_interior(double t, double tol = 0.0) const;  // open
  bool crosses_infinity() const;
  double midpoint() const;  // angle midpoint of the arc
  // sample n interior points, roughly uniform in angle
  std::vector<double> samples(int n) const;
};

// the arc between a and b (in some direction) that avoids all points in
// `avoid`; throws ps3::InvalidInput if neither or both directions qualify
Arc arc_avoiding(double a, double b, const std::vector<double>& avoid);

// containment and intersection of closed arcs
bool arc_contains_arc(const Arc& outer, const Arc& inner, double tol = 0.0);
bool arcs_intersect(const Arc& a, const Arc& b, double tol = 0.0);

// connected components of the set-difference a \ interior(b); each result
// arc is a maximal closed sub-arc of `a` outside the open arc `b`
std::vector<Arc> arc_minus(const Arc& a, const Arc& b, double tol = 1e-13);

}  // namespace ps3
