#include "ps3/pants.hpp"

#include <algorithm>
#include <cmath>

#include "ps3/errors.hpp"

namespace ps3 {

const char* to_string(Color c) {
  switch (c) {
    case Color::red: return "red";
    case Color::green: return "green";
    case Color::blue: return "blue";
  }
  return "?";
}

Color color_from_string(const std::string& s) {
  if (s == "red") return Color::red;
  if (s == "green") return Color::green;
  if (s == "blue") return Color::blue;
  throw InvalidInput("unknown color: " + s);
}

void validate(const RealSlitPants& p) {
  if (p.slots.size() != 3) throw InvalidInput("pants must have three slots");
  int nr = 0, ng = 0, nb = 0;
  for (const Slot& s : p.slots) {
    if (circle_same(s.arc.lo, s.arc.hi, 1e-13))
      throw InvalidInput("degenerate slot");
    if (s.color == Color::red) ++nr;
    if (s.color == Color::green) ++ng;
    if (s.color == Color::blue) ++nb;
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (arcs_intersect(p.slots[i].arc, p.slots[j].arc, 1e-13))
        throw InvalidInput("slots must be pairwise disjoint");
  bool ok = (ng == 1) && ((nr == 1 && nb == 1) || (nr == 0 && nb == 2) ||
                          (nr == 2 && nb == 0));
  if (!ok) throw InconsistentColors("inadmissible color multiset");
}

RealSlitPants apply_mobius(const RealSlitPants& p, const RealMobius& m) {
  RealSlitPants out;
  for (const Slot& s : p.slots) {
    double u = m(s.arc.lo), v = m(s.arc.hi);
    Arc img = m.det() > 0 ? Arc{u, v} : Arc{v, u};
    out.slots.push_back(Slot{img, s.color});
  }
  return out;
}

RealSlitPants associate_pants(const RationalDeg3& R) {
  Classification cls = classify(R);
  const BranchData& bd = cls.data;
  Arc unit{-1.0, 1.0};
  Arc a12 = arc_avoiding(bd.a[0], bd.a[1], {bd.a[2], bd.a[3]});
  Arc a34 = arc_avoiding(bd.a[2], bd.a[3], {bd.a[0], bd.a[1]});

  RealSlitPants p;
  for (const Arc& r : arc_minus(unit, a12)) p.slots.push_back({r, Color::red});
  for (const Arc& b : arc_minus(a12, unit)) p.slots.push_back({b, Color::blue});
  p.slots.push_back({a34, Color::green});
  if (p.slots.size() != 3)
    throw InconsistentColors("unexpected slot count while associating pants");
  validate(p);
  return p;
}

// relative angle helper duplicated from circle.cpp semantics
static double fwd_angle(double from, double to) {
  double d = circle_angle(to) - circle_angle(from);
  while (d <= 0) d += 2 * M_PI;
  while (d > 2 * M_PI) d -= 2 * M_PI;
  return d;
}

static double color_code(Color c) {
  switch (c) {
    case Color::red: return 0;
    case Color::green: return 1;
    case Color::blue: return 2;
  }
  return 3;
}

// one orientation candidate of the canonical form
static CanonicalPants canonical_candidate(const RealSlitPants& p, int orient) {
  const Slot* green = nullptr;
  std::vector<const Slot*> rest;
  for (const Slot& s : p.slots)
    (s.color == Color::green ? (void)(green = &s) : (void)rest.push_back(&s));

  double u = orient > 0 ? green->arc.lo : green->arc.hi;
  double v = orient > 0 ? green->arc.hi : green->arc.lo;
  // non-green endpoints in the order they are met walking from v in
  // direction `orient`; they come in slot-adjacent pairs
  struct Ep { double dist, value; const Slot* slot; };
  std::vector<Ep> eps;
  for (const Slot* s : rest)
    for (double e : {s->arc.lo, s->arc.hi}) {
      double d = orient > 0 ? fwd_angle(v, e) : fwd_angle(e, v);
      eps.push_back({d, e, s});
    }
  std::sort(eps.begin(), eps.end(),
            [](const Ep& a, const Ep& b) { return a.dist < b.dist; });
  if (eps[0].slot != eps[1].slot || eps[2].slot != eps[3].slot)
    throw SolverFailure("canonical_form: interleaved slots");

  RealMobius m = RealMobius::through(u, v, eps[0].value, 0.0, kInf, 1.0);

  CanonicalPants out;
  out.pants.slots.push_back(Slot{Arc{kInf, 0.0}, Color::green});
  for (int k = 0; k < 2; ++k) {
    double x = m(eps[2 * k].value), y = m(eps[2 * k + 1].value);
    if (at_infinity(x) || at_infinity(y) || x <= 0 || y <= 0)
      throw SolverFailure("canonical_form: unexpected slot image");
    out.pants.slots.push_back(
        Slot{Arc{std::min(x, y), std::max(x, y)}, eps[2 * k].slot->color});
  }
  for (const Ep& e : eps) out.signature.push_back(m(e.value));
  out.signature.push_back(color_code(eps[0].slot->color));
  out.signature.push_back(color_code(eps[2].slot->color));
  return out;
}

// tolerance-aware lexicographic order: near-equal numeric entries compare
// as ties so that roundoff cannot flip the orientation choice on symmetric
// pants (the color entries at the tail are exact and break such ties)
static bool sig_less_eq(const std::vector<double>& a,
                        const std::vector<double>& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    double tol = 1e-9 * (1.0 + std::abs(a[i]) + std::abs(b[i]));
    if (a[i] < b[i] - tol) return true;
    if (a[i] > b[i] + tol) return false;
  }
  return true;
}

CanonicalPants canonical_form(const RealSlitPants& p) {
  validate(p);
  CanonicalPants a = canonical_candidate(p, +1);
  CanonicalPants b = canonical_candidate(p, -1);
  return sig_less_eq(a.signature, b.signature) ? a : b;
}

double pants_distance(const RealSlitPants& p, const RealSlitPants& q) {
  validate(p);
  validate(q);
  double best = kInf;
  for (int op : {+1, -1})
    for (int oq : {+1, -1}) {
      CanonicalPants cp = canonical_candidate(p, op);
      CanonicalPants cq = canonical_candidate(q, oq);
      // colors (integer tail of the signature) must agree exactly
      bool same = true;
      for (int i = 4; i < 6; ++i)
        if (cp.signature[i] != cq.signature[i]) same = false;
      if (!same) continue;
      double d = 0;
      for (int i = 0; i < 4; ++i)
        d = std::max(d, std::abs(cp.signature[i] - cq.signature[i]));
      best = std::min(best, d);
    }
  return best;
}

// ---- normalized covering family ----------------------------------------

double a_of_c(double c) {
  double t = 3 * c - 2;
  return c * t * t * t / (2 * c - 1);
}

double b_of_c(double c) { return c * (3 * c - 2) / (2 * c - 1); }

NormalizedCovering normalized_covering(double c) {
  if (!(c > 1.0 / 3.0 + 1e-12) || !(c < 0.5 - 1e-12))
    throw RangeViolation("covering parameter c must lie in (1/3, 1/2)");
  NormalizedCovering nc;
  nc.c = c;
  nc.b = b_of_c(c);
  nc.a = a_of_c(c);
  nc.map.num = {0, 0, 2 - 3 * c, 2 * c - 1};
  nc.map.den = {-c, 1};
  return nc;
}

double c_from_a(double a) {
  if (!(a > 1.0) || at_infinity(a))
    throw RangeViolation("normalized critical value must satisfy a > 1");
  double lo = 1.0 / 3.0 + 1e-14, hi = 0.5 - 1e-14;
  if (a_of_c(hi) < a) throw RangeViolation("a too large to invert");
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    (a_of_c(mid) < a ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// ---- reconstruction ------------------------------------------------------

namespace {

struct Interp {
  Arc unit;  // where [-1,1] sits in the pants plane
  Arc a12;   // where [a1,a2] sits
};

// gaps between cyclically consecutive slots; gap[i] follows slot order[i]
std::vector<Interp> interpretations(const RealSlitPants& p, CaseLabel label) {
  std::vector<Slot> slots = p.slots;
  std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
    return circle_angle(a.arc.lo) < circle_angle(b.arc.lo);
  });
  auto gap_has_green = [&](int i) {
    Arc g{slots[i].arc.hi, slots[(i + 1) % 3].arc.lo};
    for (const Slot& s : slots)
      if (s.color == Color::green && arcs_intersect(g, s.arc)) return true;
    return false;
  };

  std::vector<Interp> out;
  const Slot *red = nullptr, *blue = nullptr;
  int nr = 0, nb = 0;
  for (const Slot& s : slots) {
    if (s.color == Color::red) { red = &s; ++nr; }
    if (s.color == Color::blue) { blue = &s; ++nb; }
  }
  if (label == CaseLabel::A || label == CaseLabel::B1) {
    if (nr != 1 || nb != 1)
      throw InconsistentColors("cases A/B1 need palette {red, green, blue}");
    out.push_back(Interp{red->arc, blue->arc});
  } else if (label == CaseLabel::B23) {
    if (nr != 1 || nb != 1)
      throw InconsistentColors("case B23 needs palette {red, green, blue}");
    // [-1,1] and [a1,a2] overlap across the red->blue (or blue->red) gap
    for (int i = 0; i < 3; ++i) {
      const Slot& s0 = slots[i];
      const Slot& s1 = slots[(i + 1) % 3];
      if (s0.color == Color::green || s1.color == Color::green) continue;
      if (gap_has_green(i)) continue;
      if (s0.color == Color::red)
        out.push_back(Interp{Arc{s0.arc.lo, s1.arc.lo}, Arc{s0.arc.hi, s1.arc.hi}});
      else
        out.push_back(Interp{Arc{s0.arc.hi, s1.arc.hi}, Arc{s0.arc.lo, s1.arc.lo}});
    }
  } else {
    // B21 / B22: the separating segment is the non-green gap between the
    // two same-colored slots
    if ((label == CaseLabel::B21 && nb != 2) ||
        (label == CaseLabel::B22 && nr != 2))
      throw InconsistentColors("palette does not fit the B2 subcase");
    for (int i = 0; i < 3; ++i) {
      const Slot& s0 = slots[i];
      const Slot& s1 = slots[(i + 1) % 3];
      if (s0.color != s1.color || s0.color == Color::green) continue;
      if (gap_has_green(i)) continue;
      Arc sep{s0.arc.hi, s1.arc.lo};
      Arc span{s0.arc.lo, s1.arc.hi};
      if (label == CaseLabel::B21) out.push_back(Interp{sep, span});
      else out.push_back(Interp{span, sep});
    }
  }
  (void)blue;
  return out;
}

// unique root of N(x) = y inside the closed arc `dom`, or NaN
double branch_preimage(const RationalDeg3& N, double y, const Arc& dom) {
  Poly g = poly_trim(poly_sub(N.num, poly_scale(N.den, y)), 1e-12);
  std::vector<double> hits;
  for (double r : poly_real_roots(g, 1e-8))
    if (dom.contains(r, 1e-9)) hits.push_back(r);
  if (3 - poly_degree(g) > 0 && dom.contains(kInf)) hits.push_back(kInf);
  if (hits.size() != 1) return std::nan("");
  return hits[0];
}

}  // namespace

RationalDeg3 reconstruct_R3(const RealSlitPants& p, CaseLabel label) {
  validate(p);
  const Slot* green = nullptr;
  for (const Slot& s : p.slots)
    if (s.color == Color::green) green = &s;

  bool saw_branch_miss = false;
  for (const Interp& it : interpretations(p, label)) {
    // candidate labelings of the four critical values
    for (auto [a1, a2] : {std::pair{it.a12.lo, it.a12.hi},
                          std::pair{it.a12.hi, it.a12.lo}})
      for (auto [a3, a4] : {std::pair{green->arc.lo, green->arc.hi},
                            std::pair{green->arc.hi, green->arc.lo}}) {
        RealMobius La;
        try {
          La = RealMobius::through(a1, a2, a4, 0.0, 1.0, kInf);
        } catch (const Error&) { continue; }
        double ahat = La(a3);
        if (!(ahat > 1.0) || at_infinity(ahat)) continue;
        NormalizedCovering nc;
        try {
          nc = normalized_covering(c_from_a(ahat));
        } catch (const Error&) { continue; }

        double ya = La(it.unit.lo), yb = La(it.unit.hi);
        if (at_infinity(ya) || at_infinity(yb)) continue;
        Arc uimg = La.det() > 0 ? Arc{La(it.unit.lo), La(it.unit.hi)}
                                : Arc{La(it.unit.hi), La(it.unit.lo)};

        // covering branch: [1,b] -> [1,a] (case A, increasing), or
        // [b,inf] -> (-inf,a] u {inf} (case B, decreasing)
        struct BranchDom { Arc x, y; };
        BranchDom br = label == CaseLabel::A
                           ? BranchDom{Arc{1.0, nc.b}, Arc{1.0, nc.a}}
                           : BranchDom{Arc{nc.b, kInf}, Arc{kInf, nc.a}};
        {
          if (!arc_contains_arc(br.y, uimg, 1e-11)) {
            saw_branch_miss = true;
            continue;
          }
          double xa = branch_preimage(nc.map, ya, br.x);
          double xb = branch_preimage(nc.map, yb, br.x);
          if (std::isnan(xa) || std::isnan(xb) || circle_same(xa, xb, 1e-12))
            continue;
          Arc xarc;
          try {
            // the preimage arc inside the branch domain; 0 is never in it
            xarc = arc_avoiding(xa, xb, {0.0});
          } catch (const Error&) { continue; }
          RealMobius Lb, Ly;
          try {
            Lb = RealMobius::through(-1.0, 0.0, 1.0, xa, xarc.midpoint(), xb);
            Ly = RealMobius::through(it.unit.lo, it.unit.midpoint(), it.unit.hi,
                                     -1.0, 0.0, 1.0);
          } catch (const Error&) { continue; }
          RationalDeg3 R = post_compose(pre_compose(nc.map, Lb),
                                        La.inverse().then(Ly));
          if (std::abs(R(-1.0) - 1.0) < 1e-6)
            R = pre_compose(R, RealMobius{-1, 0, 0, 1});
          try {
            validate_interval(R);
            if (classify(R).label == label &&
                pants_distance(associate_pants(R), p) < 1e-6)
              return R.normalized();
          } catch (const Error&) { continue; }
        }
      }
  }
  if (saw_branch_miss)
    throw NoPreimageSegment("covering branch does not contain the lift");
  throw InconsistentColors("no admissible map reproduces these pants");
}

}  // namespace ps3
