#include "ps3/ratfun.hpp"

#include <algorithm>
#include <cmath>

#include "ps3/errors.hpp"

namespace ps3 {

double RationalDeg3::operator()(double x) const {
  if (at_infinity(x)) {
    int dn = poly_degree(num), dd = poly_degree(den);
    if (dn > dd) return kInf;
    if (dn < dd) return 0.0;
    return num[dn] / den[dd];
  }
  double q = poly_eval(den, x);
  if (q == 0) return kInf;
  return poly_eval(num, x) / q;
}

cplx RationalDeg3::operator()(cplx z) const {
  return poly_eval(num, z) / poly_eval(den, z);
}

double RationalDeg3::deriv(double x) const {
  double p = poly_eval(num, x), q = poly_eval(den, x);
  double dp = poly_eval(poly_derivative(num), x);
  double dq = poly_eval(poly_derivative(den), x);
  return (dp * q - p * dq) / (q * q);
}

RationalDeg3 RationalDeg3::normalized() const {
  double s = 0;
  for (double c : den)
    if (std::abs(c) > std::abs(s)) s = c;
  if (s == 0)
    for (double c : num)
      if (std::abs(c) > std::abs(s)) s = c;
  if (s == 0) return *this;
  return RationalDeg3{poly_scale(num, 1.0 / s), poly_scale(den, 1.0 / s)};
}

const char* to_string(CaseLabel c) {
  switch (c) {
    case CaseLabel::A: return "A";
    case CaseLabel::B1: return "B1";
    case CaseLabel::B21: return "B21";
    case CaseLabel::B22: return "B22";
    case CaseLabel::B23: return "B23";
  }
  return "?";
}

// numerator of R' (the Wronskian P'Q - PQ'), trimmed
static Poly wronskian(const RationalDeg3& R) {
  Poly w = poly_sub(poly_mul(poly_derivative(R.num), R.den),
                    poly_mul(R.num, poly_derivative(R.den)));
  return poly_trim(w, 1e-12);
}

void validate(const RationalDeg3& R) {
  Poly p = poly_trim(R.num), q = poly_trim(R.den);
  int dp = poly_degree(p), dq = poly_degree(q);
  if (dp < 0 || dq < 0) throw InvalidInput("zero polynomial in rational map");
  if (std::max(dp, dq) != 3) throw InvalidInput("degree must be exactly 3");
  // no common roots
  auto rp = poly_roots(p), rq = poly_roots(q);
  for (cplx a : rp)
    for (cplx b : rq)
      if (std::abs(a - b) < 1e-8 * (1.0 + std::abs(a)))
        throw InvalidInput("numerator and denominator share a root");
  // no poles on [-1,1]
  for (cplx z : rq)
    if (std::abs(z.imag()) < 1e-9 && std::abs(z.real()) <= 1.0 + 1e-12)
      throw DegenerateBranching("pole on [-1,1]");
  // no critical points on [-1,1]
  for (double x : poly_real_roots(wronskian(R)))
    if (std::abs(x) <= 1.0 + 1e-12)
      throw DegenerateBranching("critical point on [-1,1]");
}

void validate_interval(const RationalDeg3& R) {
  validate(R);
  double lo = R(-1.0), hi = R(1.0);
  auto is_pm1 = [](double v) { return std::abs(std::abs(v) - 1.0) < 1e-9; };
  if (!is_pm1(lo) || !is_pm1(hi) || std::abs(lo - hi) < 1.0)
    throw DegenerateBranching("map does not send [-1,1] onto [-1,1]");
}

BranchData BranchData::relabeled() const {
  BranchData out;
  for (int i = 0; i < 4; ++i) {
    out.a[i] = a[(i + 2) % 4];
    out.b[i] = b[(i + 2) % 4];
    out.c[i] = c[(i + 2) % 4];
  }
  return out;
}

// point type without the branch-point guard (used internally on safely
// generic points)
static int point_type_raw(const RationalDeg3& R, double y) {
  Poly g;
  if (at_infinity(y)) {
    g = poly_trim(R.den, 1e-11);
  } else {
    g = poly_trim(poly_sub(R.num, poly_scale(R.den, y)), 1e-11);
  }
  int n_inf = 3 - poly_degree(g);
  int real_count = n_inf;  // infinity is a point of the real circle
  for (cplx z : poly_roots(g))
    if (std::abs(z.imag()) <= 1e-8 * (1.0 + std::abs(z.real()))) ++real_count;
  return real_count;
}

Preimages preimages(const RationalDeg3& R, double y) {
  Poly g;
  if (at_infinity(y)) {
    g = poly_trim(R.den, 1e-11);
  } else {
    g = poly_trim(poly_sub(R.num, poly_scale(R.den, y)), 1e-11);
  }
  Preimages out;
  out.at_inf = 3 - poly_degree(g);
  out.finite = poly_roots(g);
  return out;
}

BranchData critical_data(const RationalDeg3& R) {
  validate(R);
  Poly w = wronskian(R);
  int dw = poly_degree(w);
  if (dw < 3) throw DegenerateBranching("infinity is a multiple critical point");
  std::vector<double> bs;
  for (cplx z : poly_roots(w)) {
    if (std::abs(z.imag()) > 1e-8 * (1.0 + std::abs(z.real())))
      throw DegenerateBranching("complex critical point");
    bs.push_back(z.real());
  }
  if (dw == 3) bs.push_back(kInf);
  // distinctness of critical points (angle metric)
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (std::abs(circle_angle(bs[i]) - circle_angle(bs[j])) < 1e-9)
        throw DegenerateBranching("multiple critical point");

  struct Trip { double a, b, c; };
  std::vector<Trip> t;
  for (double b : bs) {
    double a = R(b);
    // a critical point sitting (numerically) on a pole has value infinity
    if (std::abs(a) > 1e13) a = kInf;
    if (std::abs(std::abs(a) - 1.0) < 1e-9 && !at_infinity(a))
      throw DegenerateBranching("critical value at +-1");
    t.push_back({a, b, 0.0});
  }
  // critical values distinct
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (circle_same(t[i].a, t[j].a, 1e-9))
        throw DegenerateBranching("coinciding critical values");

  // the ordinary preimage c_s: remove b_s (twice) from preimages of a_s
  for (Trip& tr : t) {
    Preimages pre = preimages(R, tr.a);
    if (at_infinity(tr.b)) {
      if (pre.at_inf < 2)
        throw DegenerateBranching("inconsistent multiplicity at infinity");
      pre.at_inf -= 2;
    } else {
      for (int k = 0; k < 2; ++k) {
        size_t best = 0;
        double bd = kInf;
        for (size_t i = 0; i < pre.finite.size(); ++i) {
          double d = std::abs(pre.finite[i] - cplx(tr.b, 0));
          if (d < bd) { bd = d; best = i; }
        }
        if (pre.finite.empty())
          throw DegenerateBranching("missing double preimage");
        pre.finite.erase(pre.finite.begin() + best);
      }
    }
    if (pre.at_inf == 1 && pre.finite.empty()) {
      tr.c = kInf;
    } else if (pre.at_inf == 0 && pre.finite.size() == 1) {
      cplx z = pre.finite[0];
      if (std::abs(z.imag()) > 1e-7 * (1.0 + std::abs(z.real())))
        throw DegenerateBranching("ordinary preimage is not real");
      tr.c = z.real();
    } else {
      throw DegenerateBranching("unexpected preimage structure");
    }
  }

  // sort critical values by circle angle and find the (1:2) gaps
  std::sort(t.begin(), t.end(), [](const Trip& x, const Trip& y) {
    return circle_angle(x.a) < circle_angle(y.a);
  });
  std::array<int, 4> gap_type;
  for (int i = 0; i < 4; ++i) {
    Arc gap{t[i].a, t[(i + 1) % 4].a};
    gap_type[i] = point_type_raw(R, gap.midpoint());
  }
  for (int i = 0; i < 4; ++i)
    if (gap_type[i] != 1 && gap_type[i] != 3)
      throw DegenerateBranching("unexpected preimage count in a gap");
  // types must alternate; pick start of a (1:2) gap
  int start = -1;
  for (int i = 0; i < 4; ++i) {
    if (gap_type[i] == 1 && gap_type[(i + 1) % 4] == 3 &&
        gap_type[(i + 2) % 4] == 1 && gap_type[(i + 3) % 4] == 3) {
      start = i;
      break;
    }
  }
  if (start < 0) throw DegenerateBranching("gap types do not alternate");

  BranchData bd;
  for (int i = 0; i < 4; ++i) {
    const Trip& tr = t[(start + i) % 4];
    bd.a[i] = tr.a;
    bd.b[i] = tr.b;
    bd.c[i] = tr.c;
  }
  // deterministic choice between the two admissible labelings
  BranchData alt = bd.relabeled();
  if (circle_angle(alt.a[0]) < circle_angle(bd.a[0])) bd = alt;
  return bd;
}

int point_type(const RationalDeg3& R, double y, double tol) {
  BranchData bd = critical_data(R);
  for (double a : bd.a)
    if (circle_same(y, a, tol))
      throw AtBranchPoint("point_type queried at a critical value");
  return point_type_raw(R, y);
}

Classification classify(const RationalDeg3& R) {
  validate_interval(R);
  BranchData bd = critical_data(R);
  Arc unit{-1.0, 1.0};

  auto contains_unit = [&](double p, double q, double r, double s) {
    // does the arc between p and q avoiding r,s contain [-1,1]?
    Arc seg = arc_avoiding(p, q, {r, s});
    return seg.contains(-1.0) && seg.contains(1.0);
  };

  struct Hit { CaseLabel label; BranchData data; };
  std::vector<Hit> hits;
  for (BranchData cand : {bd, bd.relabeled()}) {
    if (contains_unit(cand.b[1], cand.b[2], cand.b[0], cand.b[3]))
      hits.push_back({CaseLabel::A, cand});
    if (contains_unit(cand.b[2], cand.b[3], cand.b[0], cand.b[1]))
      hits.push_back({CaseLabel::B1, cand});  // placeholder, refined below
  }
  if (hits.size() != 1)
    throw DegenerateBranching("classification is ambiguous");
  Hit h = hits[0];
  if (h.label == CaseLabel::A) return {CaseLabel::A, h.data};

  // refine case B via the segment between the ordinary preimages c2, c1
  Arc segc = arc_avoiding(h.data.c[1], h.data.c[0],
                          {h.data.b[0], h.data.b[1], h.data.b[2], h.data.b[3]});
  bool meet = arcs_intersect(unit, segc, 1e-12);
  if (!meet) return {CaseLabel::B1, h.data};
  if (arc_contains_arc(segc, unit, 1e-12)) return {CaseLabel::B21, h.data};
  if (arc_contains_arc(unit, segc, 1e-12)) return {CaseLabel::B22, h.data};
  return {CaseLabel::B23, h.data};
}

// sum_k p_k (a t + b)^k (c t + d)^(3-k)
static Poly compose_hom3(const Poly& p, double a, double b, double c, double d) {
  Poly lin1{b, a}, lin2{d, c};
  Poly out{0.0};
  Poly pow1{1.0};
  std::vector<Poly> pows1, pows2;
  for (int k = 0; k <= 3; ++k) {
    pows1.push_back(pow1);
    pow1 = poly_mul(pow1, lin1);
  }
  Poly pow2{1.0};
  for (int k = 0; k <= 3; ++k) {
    pows2.push_back(pow2);
    pow2 = poly_mul(pow2, lin2);
  }
  for (int k = 0; k <= 3 && k < (int)p.size(); ++k)
    out = poly_add(out, poly_scale(poly_mul(pows1[k], pows2[3 - k]), p[k]));
  return poly_trim(out, 1e-14);
}

RationalDeg3 pre_compose(const RationalDeg3& R, const RealMobius& L) {
  RationalDeg3 out;
  out.num = compose_hom3(R.num, L.a, L.b, L.c, L.d);
  out.den = compose_hom3(R.den, L.a, L.b, L.c, L.d);
  return out.normalized();
}

RationalDeg3 post_compose(const RationalDeg3& R, const RealMobius& L) {
  RationalDeg3 out;
  out.num = poly_trim(poly_add(poly_scale(R.num, L.a), poly_scale(R.den, L.b)), 1e-14);
  out.den = poly_trim(poly_add(poly_scale(R.num, L.c), poly_scale(R.den, L.d)), 1e-14);
  return out.normalized();
}

RationalDeg3 gauge_apply(const RationalDeg3& R, const Gauge& g, GaugeSide side) {
  if (!(std::abs(g.alpha) < 1.0) || (g.sign != 1 && g.sign != -1))
    throw RangeViolation("gauge parameter out of range");
  return side == GaugeSide::pre ? pre_compose(R, g.mobius())
                                : post_compose(R, g.mobius());
}

RationalDeg3 fixture(CaseLabel which) {
  // normalized covering with parameter c = 0.4 (so b = 1.6, a = 1.024):
  // N(x) = x^2 ((2c-1)x + (2-3c)) / (x - c)
  const double c = 0.4;
  RationalDeg3 base;
  base.num = {0.0, 0.0, 2.0 - 3.0 * c, 2.0 * c - 1.0};
  base.den = {-c, 1.0};

  double t0 = 0, t1 = 0;
  switch (which) {
    case CaseLabel::A:   t0 = 1.30, t1 = 0.20; break;  // inside (1, b)
    case CaseLabel::B1:  t0 = 1.82, t1 = 0.15; break;  // inside (b, c2)
    case CaseLabel::B21: t0 = 3.00, t1 = 0.50; break;  // inside (c2, c1)
    case CaseLabel::B22: t0 = 3.00, t1 = 1.30; break;  // contains [c2, c1]
    case CaseLabel::B23: t0 = 2.30, t1 = 0.50; break;  // straddles c2
  }
  RationalDeg3 r = pre_compose(base, RealMobius{t1, t0, 0.0, 1.0});
  double y1 = r(-1.0), y2 = r(1.0);
  // affine output normalization: y1 -> -1, y2 -> +1
  double s = 2.0 / (y2 - y1), off = -(y1 + y2) / (y2 - y1);
  return post_compose(r, RealMobius{s, off, 0.0, 1.0});
}

}  // namespace ps3
