#pragma once
// Real slit pants: the sphere minus three disjoint closed arcs ("slots") of
// the extended real line, each painted red, green or blue.  The pants
// associated with an admissible map R is Cl(C^ \ (([-1,1] sym-diff [a1,a2])
// u [a3,a4])) with the palette: [-1,1]\[a1,a2] red, [a1,a2]\[-1,1] blue,
// [a3,a4] green.  Admissible color multisets: {r,g,b}, {g,b,b}, {g,r,r};
// green always appears exactly once.

#include <string>
#include <vector>

#include "ps3/circle.hpp"
#include "ps3/mobius.hpp"
#include "ps3/ratfun.hpp"

namespace ps3 {

enum class Color { red, green, blue };
const char* to_string(Color c);
Color color_from_string(const std::string& s);

struct Slot {
  Arc arc;
  Color color = Color::red;
};

struct RealSlitPants {
  std::vector<Slot> slots;  // exactly three
};

void validate(const RealSlitPants& p);

RealSlitPants apply_mobius(const RealSlitPants& p, const RealMobius& m);

// the pants associated with an admissible map (requires R([-1,1]) = [-1,1])
RealSlitPants associate_pants(const RationalDeg3& R);

// canonical representative: green slot mapped onto the negative axis
// (through infinity), the nearest endpoint of the remaining slots to 1;
// of the two circle orientations the lexicographically smaller signature
// wins.  Equal pants <=> equal canonical forms.
struct CanonicalPants {
  RealSlitPants pants;           // normalized representative
  std::vector<double> signature; // endpoint list; colors appended as codes
};
CanonicalPants canonical_form(const RealSlitPants& p);

// max deviation between canonical signatures; +inf if shapes differ
double pants_distance(const RealSlitPants& p, const RealSlitPants& q);

// ---- the normalized covering family ------------------------------------
// N_c(x) = x^2 ((2c-1) x + (2-3c)) / (x - c),  c in (1/3, 1/2):
// critical points 0, 1, b(c), inf with values 0, 1, a(c), inf,
// b = c(3c-2)/(2c-1), a = c(3c-2)^3/(2c-1); a is increasing in c and maps
// (1/3,1/2) onto (1,inf).
struct NormalizedCovering {
  double c = 0, b = 0, a = 0;
  RationalDeg3 map;
};
NormalizedCovering normalized_covering(double c);
double a_of_c(double c);
double b_of_c(double c);
double c_from_a(double a);  // inverse of a_of_c by bisection

// rebuild an admissible map of the given case from its pants (inverse of
// associate_pants up to gauge).  The case label is part of the input: a
// pants with palette {r,g,b} can be the associated pants of maps of
// different cases (a B1 and a B23 covering can share their colored slots),
// so the slots alone do not pin the covering.  Throws InconsistentColors if
// the palette does not fit the case, NoPreimageSegment if no covering
// branch contains the lift.
RationalDeg3 reconstruct_R3(const RealSlitPants& p, CaseLabel label);

}  // namespace ps3
