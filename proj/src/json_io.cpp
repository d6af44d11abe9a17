#include "ps3/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ps3/errors.hpp"

namespace ps3 {

namespace {

json json_cplx(cplx z) { return json::array({z.real(), z.imag()}); }

json json_curve(const std::vector<cplx>& c) {
  json out = json::array();
  for (cplx z : c) out.push_back(json_cplx(z));
  return out;
}

json json_mobius(const Mobius& m) {
  return json{{"a", json_cplx(m.a)},
              {"b", json_cplx(m.b)},
              {"c", json_cplx(m.c)},
              {"d", json_cplx(m.d)}};
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

const char* color_hex(Color c) {
  switch (c) {
    case Color::red: return "#c0392b";
    case Color::green: return "#1e8449";
    case Color::blue: return "#2e5fb7";
  }
  return "#000";
}

}  // namespace

json json_real(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double real_from_json(const json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "inf") return kInf;
    if (s == "-inf") return -kInf;
    throw InvalidInput("bad number literal: " + s);
  }
  if (!j.is_number()) throw InvalidInput("expected a number");
  return j.get<double>();
}

json to_json(const RationalDeg3& R) {
  Poly num = R.num, den = R.den;
  num.resize(4, 0.0);
  den.resize(4, 0.0);
  return json{{"num", num}, {"den", den}};
}

RationalDeg3 rational_from_json(const json& j) {
  if (!j.contains("num") || !j.contains("den"))
    throw InvalidInput("rational map needs \"num\" and \"den\" arrays");
  RationalDeg3 R;
  R.num = j.at("num").get<Poly>();
  R.den = j.at("den").get<Poly>();
  if (R.num.size() > 4 || R.den.size() > 4)
    throw InvalidInput("rational map degree exceeds 3");
  return R;
}

json to_json(const RealSlitPants& p) {
  json slots = json::array();
  for (const Slot& s : p.slots)
    slots.push_back(json{{"lo", json_real(s.arc.lo)},
                         {"hi", json_real(s.arc.hi)},
                         {"color", to_string(s.color)}});
  return json{{"slots", slots}};
}

RealSlitPants pants_from_json(const json& j) {
  if (!j.contains("slots") || !j.at("slots").is_array())
    throw InvalidInput("pants need a \"slots\" array");
  RealSlitPants p;
  for (const json& s : j.at("slots")) {
    Slot slot;
    slot.arc.lo = real_from_json(s.at("lo"));
    slot.arc.hi = real_from_json(s.at("hi"));
    slot.color = color_from_string(s.at("color").get<std::string>());
    p.slots.push_back(slot);
  }
  return p;
}

json to_json(const ModuliTriple& t) {
  return json{{"d12", t.d12}, {"d23", t.d23}, {"d31", t.d31}};
}

ModuliTriple moduli_from_json(const json& j) {
  ModuliTriple t;
  t.d12 = j.at("d12").get<double>();
  t.d23 = j.at("d23").get<double>();
  t.d31 = j.at("d31").get<double>();
  return t;
}

json to_json(const MembraneSpec& s) {
  return json{{"fashion", to_string(s.fashion)}, {"lambda", s.lambda},
              {"h1", s.h1},                      {"h2", s.h2},
              {"m1", s.m1},                      {"m2", s.m2}};
}

MembraneSpec spec_from_json(const json& j) {
  MembraneSpec s;
  s.fashion = fashion_from_string(j.at("fashion").get<std::string>());
  s.lambda = j.at("lambda").get<double>();
  if (j.contains("h1")) s.h1 = j.at("h1").get<double>();
  if (j.contains("h2")) s.h2 = j.at("h2").get<double>();
  if (j.contains("m1")) s.m1 = j.at("m1").get<int>();
  if (j.contains("m2")) s.m2 = j.at("m2").get<int>();
  return s;
}

json to_json(const SurfaceAtlas& a) {
  json charts = json::array();
  for (const Chart& ch : a.charts)
    charts.push_back(json{{"base", ch.base},
                          {"sheets", ch.sheets},
                          {"inner", ch.inner},
                          {"to_xi", json_mobius(ch.xi.to_xi)},
                          {"q", ch.xi.q},
                          {"outer_color", to_string(ch.outer_color)},
                          {"inner_color", to_string(ch.inner_color)}});
  json slits = json::array();
  for (const Slit& s : a.slits)
    slits.push_back(json{{"chart", s.chart},
                         {"color", to_string(s.color)},
                         {"zeta", json_curve(s.zeta)},
                         {"p", json_curve(s.p)}});
  json seams = json::array();
  for (const Seam& s : a.seams)
    seams.push_back(json{{"chart_a", s.chart_a},
                         {"chart_b", s.chart_b},
                         {"zeta_a", json_curve(s.zeta_a)},
                         {"zeta_b", json_curve(s.zeta_b)}});
  json ovals = json::array();
  for (const OvalRef& o : a.ovals)
    ovals.push_back(json{{"color", to_string(o.color)},
                         {"winding", o.winding},
                         {"kind", o.kind},
                         {"charts", o.charts},
                         {"slit", o.slit}});
  return json{{"spec", to_json(a.spec)},
              {"mu_inv", a.mu_inv},
              {"r", a.r},
              {"planar", a.planar},
              {"quotient_Xi", a.quotient_Xi},
              {"charts", charts},
              {"slits", slits},
              {"seams", seams},
              {"ovals", ovals}};
}

json to_json(const MatchResult& m) {
  return json{{"fashion", to_string(m.spec.fashion)},
              {"lambda", m.spec.lambda},
              {"h1", m.spec.h1},
              {"h2", m.spec.h2},
              {"m1", m.spec.m1},
              {"m2", m.spec.m2},
              {"residual", m.residual},
              {"iterations", m.iterations}};
}

json to_json(const VerifyReport& r) {
  return json{{"lambda_nearest", r.lambda_nearest},
              {"lambda_rel_err", r.lambda_rel_err},
              {"residual", r.residual},
              {"residual_rel", r.residual_rel},
              {"zero_count", r.zero_count}};
}

json spectrum_sidecar(const SpectrumResult& sp) {
  json modes = json::array();
  for (size_t i = 0; i < sp.eigenvalues.size(); ++i) {
    std::vector<double> c(sp.eigenvectors[i].data(),
                          sp.eigenvectors[i].data() + sp.eigenvectors[i].size());
    modes.push_back(json{{"lambda", sp.eigenvalues[i]},
                         {"const", sp.const_values[i]},
                         {"residual", sp.residuals[i]},
                         {"coeffs", c}});
  }
  return json{{"modes", modes}};
}

std::string spectrum_csv(const SpectrumResult& sp) {
  std::ostringstream out;
  out << "lambda,residual,zero_count\n";
  for (size_t i = 0; i < sp.eigenvalues.size(); ++i)
    out << fmt(sp.eigenvalues[i]) << ',' << fmt(sp.residuals[i]) << ','
        << count_zeros(sp.eigenvectors[i]) + 2 << '\n';
  return out.str();
}

std::string reconstruction_csv(const ReconstructedU& rec) {
  std::ostringstream out;
  out << "x,u\n";
  for (size_t i = 0; i < rec.y.size(); ++i)
    out << fmt(rec.y[i]) << ',' << fmt(rec.u[i]) << '\n';
  return out.str();
}

std::string membrane_svg(const SurfaceAtlas& a) {
  // one unit-disk panel per chart, side by side, in zeta coordinates
  int n = static_cast<int>(a.charts.size());
  double panel = 260, pad = 20, scale = 110;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << n * panel + 2 * pad << "\" height=\"" << panel + 2 * pad << "\">\n";
  auto X = [&](int c, cplx z) { return pad + c * panel + panel / 2 + scale * z.real(); };
  auto Y = [&](cplx z) { return pad + panel / 2 - scale * z.imag(); };
  for (int c = 0; c < n; ++c) {
    const Chart& ch = a.charts[c];
    out << "<circle cx=\"" << X(c, 0) << "\" cy=\"" << Y(0) << "\" r=\""
        << scale << "\" fill=\"none\" stroke=\"" << color_hex(ch.outer_color)
        << "\" stroke-width=\"2\"/>\n";
    out << "<circle cx=\"" << X(c, 0) << "\" cy=\"" << Y(0) << "\" r=\""
        << scale * ch.inner << "\" fill=\"none\" stroke=\""
        << color_hex(ch.inner_color) << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << X(c, 0) - 30 << "\" y=\"" << pad + 12
        << "\" font-size=\"12\">" << ch.base << " m=" << ch.sheets
        << "</text>\n";
  }
  auto polyline = [&](int c, const std::vector<cplx>& zs, const char* color,
                      bool dashed) {
    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"2\"";
    if (dashed) out << " stroke-dasharray=\"5,4\"";
    out << " points=\"";
    for (cplx z : zs) out << X(c, z) << ',' << Y(z) << ' ';
    out << "\"/>\n";
  };
  for (const Slit& s : a.slits)
    polyline(s.chart, s.zeta, color_hex(s.color), false);
  for (const Seam& s : a.seams) {
    polyline(s.chart_a, s.zeta_a, "#777", true);
    polyline(s.chart_b, s.zeta_b, "#777", true);
  }
  out << "</svg>\n";
  return out.str();
}

std::string reconstruction_svg(const ReconstructedU& rec) {
  double w = 480, h = 320, pad = 30;
  double umin = 0, umax = 0;
  for (double u : rec.u) {
    umin = std::min(umin, u);
    umax = std::max(umax, u);
  }
  if (umax - umin < 1e-12) umax = umin + 1;
  auto X = [&](double y) { return pad + (y + 1) / 2 * (w - 2 * pad); };
  auto Y = [&](double u) {
    return h - pad - (u - umin) / (umax - umin) * (h - 2 * pad);
  };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
      << "\" height=\"" << h << "\">\n";
  out << "<line x1=\"" << X(-1) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(1)
      << "\" y2=\"" << Y(0) << "\" stroke=\"#aaa\"/>\n";
  out << "<polyline fill=\"none\" stroke=\"#2e5fb7\" stroke-width=\"2\" "
         "points=\"";
  for (size_t i = 0; i < rec.y.size(); ++i)
    out << X(rec.y[i]) << ',' << Y(rec.u[i]) << ' ';
  out << "\"/>\n</svg>\n";
  return out.str();
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InvalidInput("bad JSON in " + path + ": " + e.what());
  }
  return j;
}

void save_text(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << content;
}

}  // namespace ps3
