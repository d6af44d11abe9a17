#include "ps3/circle.hpp"

#include <algorithm>
#include <cmath>

#include "ps3/errors.hpp"

namespace ps3 {

bool circle_same(double a, double b, double tol) {
  if (at_infinity(a) || at_infinity(b)) return at_infinity(a) && at_infinity(b);
  // compare in the angle chart so huge finite numbers behave
  return std::abs(circle_angle(a) - circle_angle(b)) < tol ||
         std::abs(a - b) < tol * (1.0 + std::abs(a) + std::abs(b));
}

double circle_angle(double t) {
  if (at_infinity(t)) return M_PI;
  return 2.0 * std::atan(t);
}

double circle_point(double phi) {
  // normalize into (-pi, pi]
  while (phi > M_PI) phi -= 2 * M_PI;
  while (phi <= -M_PI) phi += 2 * M_PI;
  if (std::abs(phi - M_PI) < 1e-15) return kInf;
  return std::tan(phi / 2.0);
}

// angle of b relative to a, in (0, 2*pi); 0/2pi excluded by caller contract
static double rel_angle(double a, double b) {
  double d = circle_angle(b) - circle_angle(a);
  while (d <= 0) d += 2 * M_PI;
  while (d > 2 * M_PI) d -= 2 * M_PI;
  return d;
}

bool cyclic_less(double a, double b, double c) {
  return rel_angle(a, b) < rel_angle(a, c);
}

bool Arc::crosses_infinity() const {
  if (at_infinity(lo) || at_infinity(hi)) return true;
  return !(lo < hi);  // wraps through the point at infinity
}

bool Arc::contains(double t, double tol) const {
  if (circle_same(t, lo, std::max(tol, 1e-13))) return true;
  if (circle_same(t, hi, std::max(tol, 1e-13))) return true;
  return contains_interior(t, tol);
}

bool Arc::contains_interior(double t, double tol) const {
  double span = rel_angle(lo, hi);
  double d = rel_angle(lo, t);
  return d > tol && d < span - tol;
}

double Arc::midpoint() const {
  double span = rel_angle(lo, hi);
  return circle_point(circle_angle(lo) + span / 2.0);
}

std::vector<double> Arc::samples(int n) const {
  std::vector<double> out;
  double a0 = circle_angle(lo), span = rel_angle(lo, hi);
  for (int i = 1; i <= n; ++i)
    out.push_back(circle_point(a0 + span * i / (n + 1.0)));
  return out;
}

Arc arc_avoiding(double a, double b, const std::vector<double>& avoid) {
  Arc fwd{a, b}, bwd{b, a};
  auto clean = [&](const Arc& arc) {
    for (double p : avoid)
      if (arc.contains_interior(p)) return false;
    return true;
  };
  bool f = clean(fwd), g = clean(bwd);
  if (f == g) throw InvalidInput("arc_avoiding: ambiguous or impossible arc");
  return f ? fwd : bwd;
}

bool arc_contains_arc(const Arc& outer, const Arc& inner, double tol) {
  if (!outer.contains(inner.lo, tol) || !outer.contains(inner.hi, tol))
    return false;
  // both endpoints inside; the inner arc stays inside iff its midpoint does
  // (and iff it does not wrap past outer's end) -- check a few samples
  for (double t : inner.samples(7))
    if (!outer.contains(t, tol)) return false;
  return true;
}

bool arcs_intersect(const Arc& a, const Arc& b, double tol) {
  if (a.contains(b.lo, tol) || a.contains(b.hi, tol)) return true;
  if (b.contains(a.lo, tol) || b.contains(a.hi, tol)) return true;
  return false;
}

std::vector<Arc> arc_minus(const Arc& a, const Arc& b, double tol) {
  // endpoints of b that are strictly inside a cut it
  bool lo_in = a.contains_interior(b.lo, tol);
  bool hi_in = a.contains_interior(b.hi, tol);
  bool alo_in_b = b.contains_interior(a.lo, tol);
  bool ahi_in_b = b.contains_interior(a.hi, tol);

  std::vector<Arc> out;
  if (!lo_in && !hi_in) {
    if (alo_in_b && ahi_in_b) {
      // a entirely swallowed (a inside b)
      return out;
    }
    if (!alo_in_b && !ahi_in_b) {
      // disjoint (or b inside... not possible since b's ends not in a)
      out.push_back(a);
      return out;
    }
    // one end of a sticks out -- b covers a whole end of a
    if (alo_in_b) out.push_back(Arc{b.hi, a.hi});
    else out.push_back(Arc{a.lo, b.lo});
    return out;
  }
  if (lo_in && hi_in) {
    // b interior to a (possibly with b wrapping weirdly; use cyclic order)
    if (cyclic_less(a.lo, b.lo, b.hi)) {
      if (!circle_same(a.lo, b.lo, tol)) out.push_back(Arc{a.lo, b.lo});
      if (!circle_same(b.hi, a.hi, tol)) out.push_back(Arc{b.hi, a.hi});
    } else {
      // b wraps around the outside; remainder is the middle piece
      out.push_back(Arc{b.hi, b.lo});
    }
    return out;
  }
  if (lo_in) {
    if (!circle_same(a.lo, b.lo, tol)) out.push_back(Arc{a.lo, b.lo});
  } else {
    if (!circle_same(b.hi, a.hi, tol)) out.push_back(Arc{b.hi, a.hi});
  }
  return out;
}

}  // namespace ps3
