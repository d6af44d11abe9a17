#include "ps3/membrane.hpp"

#include <algorithm>
#include <cmath>

#include "ps3/errors.hpp"

namespace ps3 {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr int kSamp = 400;  // samples per stored curve

const cplx kEps = std::polar(1.0, 2.0 * kPi / 3.0);

double wrap_arg(cplx z) { return std::arg(z); }

// continuous argument along a sampled curve
std::vector<double> unwrap_args(const std::vector<cplx>& zs) {
  std::vector<double> th(zs.size());
  th[0] = wrap_arg(zs[0]);
  for (size_t i = 1; i < zs.size(); ++i) {
    double d = wrap_arg(zs[i]) - wrap_arg(zs[i - 1]);
    while (d > kPi) d -= 2 * kPi;
    while (d < -kPi) d += 2 * kPi;
    th[i] = th[i - 1] + d;
  }
  return th;
}

double net_turns(const std::vector<cplx>& zs) {
  std::vector<double> th = unwrap_args(zs);
  return (th.back() - th.front()) / (2 * kPi);
}
}  // namespace

// ---- generalized circles -------------------------------------------------

cplx Gcircle::reflect(cplx z) const {
  if (is_line) {
    cplx u = dir / std::abs(dir);
    return p0 + u * u * std::conj(z - p0);
  }
  return center + radius * radius / std::conj(z - center);
}

cplx Gcircle::point(double t) const {
  if (is_line) {
    double s = std::tan(kPi * (t - 0.5));
    return p0 + dir * s;
  }
  return center + radius * std::polar(1.0, 2 * kPi * t);
}

double Gcircle::side(cplx z) const {
  if (is_line) {
    cplx u = dir / std::abs(dir);
    return ((z - p0) / u).imag();
  }
  return std::abs(z - center) - radius;
}

Gcircle circle_from_points(cplx a, cplx b, cplx c) {
  // perpendicular bisector intersection; fall back to a line when collinear
  cplx ab = b - a, ac = c - a;
  double det = ab.real() * ac.imag() - ab.imag() * ac.real();
  if (std::abs(det) < 1e-13 * std::abs(ab) * std::abs(ac)) {
    Gcircle g;
    g.is_line = true;
    g.p0 = a;
    g.dir = ab / std::abs(ab);
    return g;
  }
  double nab = std::norm(b) - std::norm(a), nac = std::norm(c) - std::norm(a);
  double cx = (nab * ac.imag() - nac * ab.imag()) / (2 * det);
  double cy = (nac * ab.real() - nab * ac.real()) / (2 * det);
  Gcircle g;
  g.center = {cx, cy};
  g.radius = std::abs(a - g.center);
  return g;
}

double mu_of_lambda(double lambda) {
  if (lambda <= 0.0 || lambda >= 3.0)
    throw RangeViolation("lambda must lie in (0,3)");
  return std::sqrt((3.0 - lambda) / (2.0 * lambda));
}

Gcircle gcircle_C(double lambda) {
  double mu = mu_of_lambda(lambda);
  if (mu >= 1.0) throw RangeViolation("circle C exists only for lambda > 1");
  Gcircle g;
  g.center = 1.0 / mu;
  g.radius = std::sqrt(1.0 / (mu * mu) - 1.0);
  return g;
}

Gcircle line_eps() {
  Gcircle g;
  g.is_line = true;
  g.p0 = 0.0;
  g.dir = kEps;
  return g;
}

Gcircle line_eps2() {
  Gcircle g;
  g.is_line = true;
  g.p0 = 0.0;
  g.dir = kEps * kEps;
  return g;
}

Gcircle line_real() {
  Gcircle g;
  g.is_line = true;
  g.p0 = 0.0;
  g.dir = 1.0;
  return g;
}

Mobius chi_DD1(double lambda) {
  Gcircle C = gcircle_C(lambda);
  double mu_inv = C.center.real(), r2 = C.radius * C.radius;
  // p -> 1/mu + r^2/(p - 1/mu): consecutive reflections in R^ and C
  return Mobius{mu_inv, r2 - mu_inv * mu_inv, 1.0, -mu_inv};
}

Gcircle circle_chiDD1_eps(double lambda) {
  Mobius m = chi_DD1(lambda);
  Gcircle l = line_eps();
  return circle_from_points(m(l.point(0.2)), m(l.point(0.5)), m(l.point(0.8)));
}

AnnulusChart uniformize_annulus(const Gcircle& first, const Gcircle& second) {
  // limit points of the coaxial family through both circles
  cplx z1, z2;
  if (first.is_line && second.is_line)
    throw InvalidInput("two lines do not bound an annulus");
  if (first.is_line || second.is_line) {
    const Gcircle& L = first.is_line ? first : second;
    const Gcircle& K = first.is_line ? second : first;
    cplx u = L.dir / std::abs(L.dir);
    cplx a = (K.center - L.p0) / u;  // circle center in line-adapted frame
    double s2 = a.imag() * a.imag() - K.radius * K.radius;
    if (s2 <= 0) throw InvalidInput("circles are not disjoint");
    double s = std::sqrt(s2);
    z1 = L.p0 + u * cplx(a.real(), s);
    z2 = L.p0 + u * cplx(a.real(), -s);
  } else {
    cplx d = second.center - first.center;
    double dd = std::abs(d);
    if (dd < 1e-14) {  // concentric already
      z1 = first.center;
      z2 = cplx(1e300, 0.0);
    } else {
      cplx u = d / dd;
      double r1 = first.radius, r2 = second.radius;
      double b = dd * dd + r1 * r1 - r2 * r2;
      double disc = b * b - 4.0 * dd * dd * r1 * r1;
      if (disc <= 0) throw InvalidInput("circles are not disjoint");
      double x1 = (b + std::sqrt(disc)) / (2 * dd);
      z1 = first.center + u * x1;
      z2 = first.center + u * (r1 * r1 / x1);
    }
  }
  Mobius T = std::abs(z2) < 1e299 ? Mobius{1.0, -z1, 1.0, -z2}
                                  : Mobius{1.0, -z1, 0.0, 1.0};
  double rf = std::abs(T(first.point(0.13))), rs = std::abs(T(second.point(0.13)));
  AnnulusChart out;
  if (rs < rf) {
    out.to_xi = T.then(Mobius{1.0 / rf, 0.0, 0.0, 1.0});
    out.q = rs / rf;
  } else {
    out.to_xi = T.then(Mobius{0.0, rf, 1.0, 0.0});  // rf / T
    out.q = rf / rs;
  }
  if (!(out.q > 0 && out.q < 1))
    throw SolverFailure("annulus uniformization failed");
  return out;
}

bool inside_annulus(const AnnulusChart& a, cplx p, double margin) {
  double m = std::abs(a.to_xi(p));
  return m > a.q * (1 + margin) && m < 1.0 - margin * (1.0 - a.q);
}

// ---- specs ----------------------------------------------------------------

const char* to_string(Fashion f) {
  switch (f) {
    case Fashion::PA1: return "PA1";
    case Fashion::PA2: return "PA2";
    case Fashion::PA3: return "PA3";
    case Fashion::PA12: return "PA12";
    case Fashion::PA13: return "PA13";
    case Fashion::PB1: return "PB1";
    case Fashion::PB21: return "PB21";
    case Fashion::PB22: return "PB22";
    case Fashion::PB23: return "PB23";
  }
  return "?";
}

Fashion fashion_from_string(const std::string& s) {
  for (Fashion f : {Fashion::PA1, Fashion::PA2, Fashion::PA3, Fashion::PA12,
                    Fashion::PA13, Fashion::PB1, Fashion::PB21, Fashion::PB22,
                    Fashion::PB23})
    if (s == to_string(f)) return f;
  throw InvalidInput("unknown fashion: " + s);
}

std::vector<std::string> validate_spec(const MembraneSpec& s) {
  std::vector<std::string> v;
  bool b2 = s.fashion == Fashion::PB21 || s.fashion == Fashion::PB22 ||
            s.fashion == Fashion::PB23;
  double upper = b2 ? 3.0 : 2.0;
  if (!(s.lambda > 1.0 && s.lambda < upper)) {
    v.push_back("lambda outside (1," + std::string(b2 ? "3" : "2") + ")");
    return v;  // geometry below needs a valid lambda
  }
  double mu = mu_of_lambda(s.lambda);
  double mu_inv = 1.0 / mu, r = std::sqrt(mu_inv * mu_inv - 1.0);
  int m = s.m1;

  switch (s.fashion) {
    case Fashion::PA1: {
      if (s.m1 < 1) v.push_back("m1 >= 1 required");
      if (s.m2 < 1) v.push_back("m2 >= 1 required");
      cplx h{s.h1, s.h2};
      if (std::abs(h) < 1.0) v.push_back("|h| >= 1 violated");
      AnnulusChart al = uniformize_annulus(gcircle_C(s.lambda), line_eps());
      AnnulusChart ab = uniformize_annulus(gcircle_C(s.lambda), line_eps2());
      if (!inside_annulus(al, h) || !inside_annulus(ab, h))
        v.push_back("h not interior to both annuli");
      break;
    }
    case Fashion::PA2:
    case Fashion::PA3: {
      if (!(s.h1 > 0 && s.h1 < s.h2)) v.push_back("0 < h1 < h2 violated");
      if (!(s.h1 * s.h2 >= 1.0)) v.push_back("h1*h2 >= 1 violated");
      if (s.fashion == Fashion::PA2 && s.m1 < 1) v.push_back("m1 >= 1 required");
      if (s.fashion == Fashion::PA2 && s.m2 < 0) v.push_back("m2 >= 0 required");
      if (s.fashion == Fashion::PA3 && s.m2 < 1) v.push_back("m2 >= 1 required");
      if (s.fashion == Fashion::PA3 && s.m1 < 0) v.push_back("m1 >= 0 required");
      break;
    }
    case Fashion::PA12:
    case Fashion::PA13: {
      if (!(s.h1 > 0)) v.push_back("h > 0 violated");
      if (s.m1 < 1 || s.m2 < 1) v.push_back("m1, m2 >= 1 required");
      break;
    }
    case Fashion::PB1: {
      if (m < 1) v.push_back("m >= 1 required");
      if (!(s.h1 > mu_inv + r)) v.push_back("h1 > 1/mu + sqrt(1/mu^2-1) violated");
      if (!(s.h1 < s.h2)) v.push_back("h1 < h2 violated");
      break;
    }
    case Fashion::PB21: {
      if (m < 1) v.push_back("m >= 1 required");
      if (!(s.h1 > 0) || !(s.h2 > 0)) v.push_back("h1, h2 > 0 violated");
      if (m % 2 == 0 && !(s.h1 >= s.h2)) v.push_back("h1 >= h2 violated (even m)");
      if (m % 2 == 1 &&
          !((mu_inv + r * std::exp(s.h1)) * (mu_inv - r * std::exp(s.h2)) >= 1.0))
        v.push_back("(1/mu + r e^{h1})(1/mu - r e^{h2}) >= 1 violated (odd m)");
      break;
    }
    case Fashion::PB22: {
      if (m < 1) v.push_back("m >= 1 required");
      if (!(s.h2 > 0)) v.push_back("h2 > 0 violated");
      if (!(s.h1 + s.h2 < m * kPi)) v.push_back("h1 + h2 < m*pi violated");
      if (m % 2 == 0 && !(s.h1 >= s.h2)) v.push_back("h1 >= h2 violated (even m)");
      if (m % 2 == 1) {
        // principal-value Arg on both sides; intermediates kept explicit
        double lhs = std::arg(std::exp(cplx(0, s.h1)) + mu * r);
        double rhs = std::arg(std::exp(cplx(0, s.h2)) - mu * r);
        if (!(lhs >= rhs))
          v.push_back("Arg(e^{ih1} + mu r) >= Arg(e^{ih2} - mu r) violated (odd m): lhs=" +
                      std::to_string(lhs) + " rhs=" + std::to_string(rhs));
      }
      break;
    }
    case Fashion::PB23: {
      if (m < 1) v.push_back("m >= 1 required");
      if (!(s.h1 > 0)) v.push_back("h1 > 0 violated");
      if (!(s.h2 > 0 && s.h2 < m * kPi)) v.push_back("0 < h2 < m*pi violated");
      break;
    }
  }
  return v;
}

// ---- atlas construction ----------------------------------------------------

cplx Chart::project(cplx zeta) const {
  return xi.to_xi.inverse()(std::pow(zeta, sheets));
}

namespace {

// lift a sampled p-curve to the m-sheeted cover; the first sample lands on
// the sheet fixed by start_arg (continuous tracking afterwards)
std::vector<cplx> lift_curve(const Chart& ch, const std::vector<cplx>& p,
                             double start_arg_offset = 0.0) {
  std::vector<cplx> xi(p.size());
  for (size_t i = 0; i < p.size(); ++i) xi[i] = ch.xi.to_xi(p[i]);
  std::vector<double> th = unwrap_args(xi);
  std::vector<cplx> zeta(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    double lr = std::log(std::abs(xi[i]));
    zeta[i] = std::exp(cplx(lr / ch.sheets, (th[i] + start_arg_offset) / ch.sheets));
  }
  return zeta;
}

std::vector<cplx> segment(cplx a, cplx b, int n = kSamp) {
  std::vector<cplx> out(n);
  for (int i = 0; i < n; ++i) out[i] = a + (b - a) * (double(i) / (n - 1));
  return out;
}

Slit make_slit(const Chart& ch, int chart_idx, Color col,
               const std::vector<cplx>& p) {
  Slit s;
  s.chart = chart_idx;
  s.color = col;
  s.p = p;
  s.zeta = lift_curve(ch, p);
  return s;
}

void check_inside(const Chart& ch, const std::vector<cplx>& p,
                  const char* what) {
  for (cplx z : p)
    if (!inside_annulus(ch.xi, z, 1e-9))
      throw InvalidInput(std::string(what) + " leaves the annulus interior");
}

cplx nearest_on_C(double mu_inv, double r, cplx z) {
  return mu_inv + r * (z - mu_inv) / std::abs(z - mu_inv);
}

}  // namespace

std::pair<double, double> involution_Xi(std::pair<double, double> pt, int m,
                                        const MembraneSpec& s) {
  double mu = mu_of_lambda(s.lambda);
  double r = std::sqrt(1.0 / (mu * mu) - 1.0);
  double period = 2 * kPi * m;
  double phi = std::fmod(-pt.second, period);
  if (phi < 0) phi += period;
  return {r * r / pt.first, phi};
}

SurfaceAtlas build_membrane(const MembraneSpec& s) {
  std::vector<std::string> v = validate_spec(s);
  if (!v.empty()) {
    std::string msg = "inadmissible membrane parameters:";
    for (const std::string& e : v) msg += " [" + e + "]";
    throw InvalidInput(msg);
  }
  double mu = mu_of_lambda(s.lambda);
  double mu_inv = 1.0 / mu, r = std::sqrt(mu_inv * mu_inv - 1.0);

  SurfaceAtlas a;
  a.spec = s;
  a.mu_inv = mu_inv;
  a.r = r;

  auto alpha_chart = [&](int m) {
    Chart c;
    c.base = "alpha";
    c.sheets = m;
    c.xi = uniformize_annulus(gcircle_C(s.lambda), line_eps());
    c.inner = std::pow(c.xi.q, 1.0 / m);
    c.outer_color = Color::red;
    c.inner_color = Color::green;
    return c;
  };
  auto alphabar_chart = [&](int m) {
    Chart c;
    c.base = "alphabar";
    c.sheets = m;
    c.xi = uniformize_annulus(gcircle_C(s.lambda), line_eps2());
    c.inner = std::pow(c.xi.q, 1.0 / m);
    c.outer_color = Color::red;
    c.inner_color = Color::blue;
    return c;
  };

  switch (s.fashion) {
    case Fashion::PB1: {
      Chart c = alpha_chart(s.m1);
      std::vector<cplx> slot = segment(cplx(s.h1, 0), cplx(s.h2, 0));
      check_inside(c, slot, "slot [h1,h2]");
      a.charts.push_back(c);
      a.slits.push_back(make_slit(c, 0, Color::blue, slot));
      a.ovals.push_back({Color::red, s.m1, "outer", {0}, -1});
      a.ovals.push_back({Color::green, s.m1, "inner", {0}, -1});
      a.ovals.push_back({Color::blue, 0, "slit", {0}, 0});
      a.planar = true;
      break;
    }
    case Fashion::PA2:
    case Fashion::PA12: {
      double h2 = s.fashion == Fashion::PA12 ? s.h1 : s.h2;
      Chart c = alpha_chart(s.m1);
      cplx dirv = -kEps * kEps;
      std::vector<cplx> slot = segment(dirv * s.h1, dirv * h2);
      check_inside(c, slot, "slot -eps^2[h1,h2]");
      a.charts.push_back(c);
      a.slits.push_back(make_slit(c, 0, Color::blue, slot));
      if (s.m2 == 0) {
        a.ovals.push_back({Color::red, s.m1, "outer", {0}, -1});
        a.ovals.push_back({Color::green, s.m1, "inner", {0}, -1});
        a.ovals.push_back({Color::blue, 0, "slit", {0}, 0});
        a.planar = s.fashion == Fashion::PA2;
      } else {
        Chart c2 = alphabar_chart(s.m2);
        cplx tip = dirv * s.h1;
        std::vector<cplx> cut = segment(nearest_on_C(mu_inv, r, tip), tip);
        Seam sm;
        sm.chart_a = 0;
        sm.chart_b = 1;
        sm.p = cut;
        sm.zeta_a = lift_curve(c, cut);
        sm.zeta_b = lift_curve(c2, cut);
        a.charts.push_back(c2);
        a.seams.push_back(sm);
        a.ovals.push_back({Color::red, s.m1 + s.m2, "composite", {0, 1}, -1});
        a.ovals.push_back({Color::green, s.m1, "inner", {0}, -1});
        a.ovals.push_back({Color::blue, s.m2, "composite", {1}, 0});
        a.planar = false;
      }
      break;
    }
    case Fashion::PA3:
    case Fashion::PA13: {
      double h2 = s.fashion == Fashion::PA13 ? s.h1 : s.h2;
      Chart c = alphabar_chart(s.m2);
      cplx dirv = -kEps;
      std::vector<cplx> slot = segment(dirv * s.h1, dirv * h2);
      check_inside(c, slot, "slot -eps[h1,h2]");
      a.charts.push_back(c);
      a.slits.push_back(make_slit(c, 0, Color::green, slot));
      if (s.m1 == 0) {
        a.ovals.push_back({Color::red, s.m2, "outer", {0}, -1});
        a.ovals.push_back({Color::blue, s.m2, "inner", {0}, -1});
        a.ovals.push_back({Color::green, 0, "slit", {0}, 0});
        a.planar = s.fashion == Fashion::PA3;
      } else {
        Chart c2 = alpha_chart(s.m1);
        cplx tip = dirv * s.h1;
        std::vector<cplx> cut = segment(nearest_on_C(mu_inv, r, tip), tip);
        Seam sm;
        sm.chart_a = 0;
        sm.chart_b = 1;
        sm.p = cut;
        sm.zeta_a = lift_curve(c, cut);
        sm.zeta_b = lift_curve(c2, cut);
        a.charts.push_back(c2);
        a.seams.push_back(sm);
        a.ovals.push_back({Color::red, s.m1 + s.m2, "composite", {0, 1}, -1});
        a.ovals.push_back({Color::blue, s.m2, "inner", {0}, -1});
        a.ovals.push_back({Color::green, s.m1, "composite", {1}, 0});
        a.planar = false;
      }
      break;
    }
    case Fashion::PA1: {
      Chart c1 = alpha_chart(s.m1), c2 = alphabar_chart(s.m2);
      cplx h{s.h1, s.h2};
      std::vector<cplx> cut = segment(nearest_on_C(mu_inv, r, h), h);
      Seam sm;
      sm.chart_a = 0;
      sm.chart_b = 1;
      sm.p = cut;
      sm.zeta_a = lift_curve(c1, cut);
      sm.zeta_b = lift_curve(c2, cut);
      a.charts = {c1, c2};
      a.seams.push_back(sm);
      a.ovals.push_back({Color::red, s.m1 + s.m2, "composite", {0, 1}, -1});
      a.ovals.push_back({Color::green, s.m1, "inner", {0}, -1});
      a.ovals.push_back({Color::blue, s.m2, "inner", {1}, -1});
      a.planar = false;
      break;
    }
    case Fashion::PB21:
    case Fashion::PB22:
    case Fashion::PB23: {
      int m = s.m1;
      Chart c;
      c.base = "beta";
      c.sheets = m;
      c.xi = uniformize_annulus(line_eps(), circle_chiDD1_eps(s.lambda));
      c.inner = std::pow(c.xi.q, 1.0 / m);
      c.outer_color = Color::green;
      c.inner_color = Color::green;
      a.charts.push_back(c);

      // slot curves in (rho, phi) coordinates about 1/mu, reached from the
      // anchor point rho = r, phi = 0 so that sheets are placed consistently
      auto polar_p = [&](double rho, double phi) {
        return mu_inv + rho * std::polar(1.0, phi);
      };
      auto lifted_slot = [&](bool radial, double h, double phi0, Color col) {
        std::vector<cplx> path, slot_p;
        int nc = std::max(kSamp, int(64 * std::abs(phi0) + 64));
        for (int i = 0; i < nc; ++i)  // connector along the core circle
          path.push_back(polar_p(r, phi0 * i / double(nc - 1)));
        for (int i = 0; i < kSamp; ++i) {
          double t = -h + 2 * h * i / double(kSamp - 1);
          cplx q = radial ? polar_p(r * std::exp(t), phi0) : polar_p(r, phi0 + t);
          path.push_back(q);
          slot_p.push_back(q);
        }
        check_inside(c, slot_p, "B2 slot");
        std::vector<cplx> zfull = lift_curve(c, path);
        Slit sl;
        sl.chart = 0;
        sl.color = col;
        sl.p = slot_p;
        sl.zeta.assign(zfull.end() - kSamp, zfull.end());
        return sl;
      };
      bool rad1 = s.fashion != Fashion::PB22;
      bool rad2 = s.fashion == Fashion::PB21;
      Color col1 = rad1 ? Color::blue : Color::red;
      Color col2 = rad2 ? Color::blue : Color::red;
      a.slits.push_back(lifted_slot(rad1, s.h1, 0.0, col1));
      a.slits.push_back(lifted_slot(rad2, s.h2, kPi * m, col2));
      a.ovals.push_back({Color::green, m, "outer", {0}, -1});
      a.ovals.push_back({col1, 0, "slit", {0}, 0});
      a.ovals.push_back({col2, 0, "slit", {0}, 1});
      a.planar = true;
      a.quotient_Xi = true;
      break;
    }
  }
  return a;
}

BoundaryTrace boundary_trace(const SurfaceAtlas& a, int oval) {
  if (oval < 0 || oval >= static_cast<int>(a.ovals.size()))
    throw InvalidInput("oval index out of range");
  const OvalRef& o = a.ovals[oval];
  BoundaryTrace t;
  t.color = o.color;
  auto circle_part = [&](const Chart& ch, double rad, std::vector<cplx>& out,
                         double& turns) {
    // winding is read off the base-annulus coordinate xi = zeta^m, which is
    // finite even where the projected curve passes through infinity
    std::vector<cplx> xi_ring;
    for (int i = 0; i <= kSamp * ch.sheets; ++i) {
      cplx z = rad * std::polar(1.0, 2 * kPi * i / double(kSamp * ch.sheets));
      out.push_back(ch.project(z));
      xi_ring.push_back(std::pow(z, ch.sheets));
    }
    turns += net_turns(xi_ring);
  };
  double turns = 0.0;
  if (o.kind == "outer") {
    circle_part(a.charts[o.charts[0]], 1.0, t.p, turns);
  } else if (o.kind == "inner") {
    circle_part(a.charts[o.charts[0]], a.charts[o.charts[0]].inner, t.p, turns);
  } else if (o.kind == "slit") {
    const Slit& sl = a.slits[o.slit];
    t.p = sl.p;  // forward bank
    std::vector<cplx> back(sl.p.rbegin(), sl.p.rend());
    t.p.insert(t.p.end(), back.begin(), back.end());
    turns = 0.0;
  } else {  // composite: concatenated full covers of participating charts
    for (int ci : o.charts) {
      const Chart& ch = a.charts[ci];
      double rad = (ch.inner_color == o.color) ? ch.inner : 1.0;
      circle_part(ch, rad, t.p, turns);
    }
    if (o.slit >= 0) {
      const Slit& sl = a.slits[o.slit];
      t.p.insert(t.p.end(), sl.p.begin(), sl.p.end());
      t.p.insert(t.p.end(), sl.p.rbegin(), sl.p.rend());
    }
  }
  t.winding = static_cast<int>(std::lround(turns));
  return t;
}

int euler_characteristic(const SurfaceAtlas& a) {
  int chi = 0;  // each chart is an open annulus
  chi -= static_cast<int>(a.slits.size());
  for (const Seam& sm : a.seams) {
    // a cut that stops at an existing slit merges boundaries without cost;
    // a cut between interior point and boundary creates the third oval
    bool on_slit = false;
    for (const Slit& sl : a.slits)
      for (cplx e : {sl.p.front(), sl.p.back()})
        if (std::abs(e - sm.p.back()) < 1e-9 || std::abs(e - sm.p.front()) < 1e-9)
          on_slit = true;
    chi -= on_slit ? 0 : 1;
  }
  if (a.quotient_Xi) chi /= 2;
  return chi;
}

}  // namespace ps3
