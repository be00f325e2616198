#include "inequality.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "constants.hpp"

namespace sharpyoung {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt_double(double v) {
  std::array<char, 32> buf;
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

struct RotatedWindow {
  double a_lo, a_hi;  // range of the first rotated argument axis variable
  double b_lo, b_hi;  // range of the second
};

// Box covering {(a,b) : c*a - s*b in supp fA, s*a + c*b in supp fB}.
RotatedWindow support_window(const Grid& ga, const Grid& gb, double c, double s) {
  double a_lo = 1e300, a_hi = -1e300, b_lo = 1e300, b_hi = -1e300;
  for (double t1 : {ga.lo, ga.hi})
    for (double t2 : {gb.lo, gb.hi}) {
      // (a,b) = R^T (t1,t2)
      const double a = c * t1 + s * t2;
      const double b = -s * t1 + c * t2;
      a_lo = std::min(a_lo, a);
      a_hi = std::max(a_hi, a);
      b_lo = std::min(b_lo, b);
      b_hi = std::max(b_hi, b);
    }
  return RotatedWindow{a_lo, a_hi, b_lo, b_hi};
}

// Nested rotated integral shared by the bilinear and majorant forms:
//   [ int_outer ( int_inner fA^{eA}(c a - s b) fB^{eB}(s a + c b) d inner )^{inner_pow} d outer ]^{final_pow}
// inner_axis 0 integrates the first tensor variable innermost, 1 the second.
double rotated_nested(const GridFunction& fA, double eA, const GridFunction& fB, double eB,
                      double c, double s, int n, int inner_axis, double inner_pow,
                      double final_pow) {
  const RotatedWindow w = support_window(fA.grid(), fB.grid(), c, s);
  const double ha = (w.a_hi - w.a_lo) / (n - 1);
  const double hb = (w.b_hi - w.b_lo) / (n - 1);
  const double h_in = inner_axis == 0 ? ha : hb;
  const double h_out = inner_axis == 0 ? hb : ha;

  auto powe = [](double v, double e) { return v <= 0.0 ? 0.0 : std::pow(v, e); };
  double outer_acc = 0.0;
  for (int j = 0; j < n; ++j) {
    const double out_v = (inner_axis == 0 ? w.b_lo + hb * j : w.a_lo + ha * j);
    double inner_acc = 0.0;
    for (int i = 0; i < n; ++i) {
      const double in_v = (inner_axis == 0 ? w.a_lo + ha * i : w.b_lo + hb * i);
      const double a = inner_axis == 0 ? in_v : out_v;
      const double b = inner_axis == 0 ? out_v : in_v;
      const double va = fA.value_at(c * a - s * b);
      const double vb = fB.value_at(s * a + c * b);
      if (va <= 0.0 || vb <= 0.0) continue;
      const double wgt = (i == 0 || i == n - 1) ? 0.5 : 1.0;
      inner_acc += wgt * powe(va, eA) * powe(vb, eB);
    }
    const double inner_val = inner_acc * h_in;
    const double wgt = (j == 0 || j == n - 1) ? 0.5 : 1.0;
    outer_acc += wgt * powe(inner_val, inner_pow);
  }
  return powe(outer_acc * h_out, final_pow);
}

}  // namespace

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "Pass";
    case CheckStatus::Fail: return "Fail";
    case CheckStatus::Degenerate: return "Degenerate";
  }
  return "?";
}

std::string report_to_json(const VerificationReport& r) {
  std::string out = "{\"lhs\":" + fmt_double(r.lhs) + ",\"rhs\":" + fmt_double(r.rhs) +
                    ",\"ratio\":" + fmt_double(r.ratio) + ",\"regime\":\"" +
                    to_string(r.regime) + "\",\"tolerance\":" + fmt_double(r.tolerance) +
                    ",\"status\":\"" + to_string(r.status) + "\",\"grid\":{\"n\":" +
                    std::to_string(r.resolution.n) + ",\"window\":[" +
                    fmt_double(r.resolution.lo) + "," + fmt_double(r.resolution.hi) + "]}}";
  return out;
}

double bilinear_form(const GridFunction& f, const GridFunction& g, const YoungTriple& triple,
                     int n) {
  if (triple.regime() == Regime::Boundary)
    throw std::domain_error("bilinear_form: triple must be Classical or Reverse");
  if (n < 8) throw std::invalid_argument("bilinear_form: n too small");
  const RotationPair rot = triple.rotation();
  // inner integral over x (first tensor axis), outer over y to the 1/r
  return rotated_nested(f, 1.0 / triple.p(), g, 1.0 / triple.q(), rot.c, rot.s, n,
                        /*inner_axis=*/0, triple.r(), 1.0 / triple.r());
}

double gaussian_closed_form(const GaussianFn& f, const GaussianFn& g, const YoungTriple& triple) {
  if (triple.regime() == Regime::Boundary)
    throw std::domain_error("gaussian_closed_form: triple must be Classical or Reverse");
  if (f.amplitude == 0.0 || g.amplitude == 0.0) return 0.0;
  const double p = triple.p(), q = triple.q(), r = triple.r();
  const RotationPair rot = triple.rotation();
  // Iterated 1D Gaussian integrals: the inner x-integral of
  // f^{1/p}(cx-sy) g^{1/q}(sx+cy) is Gaussian in y with rate AB/kappa,
  // where A = rate_f/p, B = rate_g/q, kappa = A c^2 + B s^2; centers shift
  // the y-profile without changing either integral.
  const double A = f.rate / p;
  const double B = g.rate / q;
  const double kappa = A * rot.c * rot.c + B * rot.s * rot.s;
  const double gamma = A * B / kappa;
  return std::pow(f.amplitude, 1.0 / p) * std::pow(g.amplitude, 1.0 / q) *
         std::sqrt(kPi / kappa) * std::pow(kPi / (r * gamma), 1.0 / (2.0 * r));
}

double majorant_form(const GridFunction& F, const GridFunction& G, const YoungTriple& triple,
                     int n) {
  if (triple.regime() == Regime::Boundary)
    throw std::domain_error("majorant_form: triple must be Classical or Reverse");
  if (n < 8) throw std::invalid_argument("majorant_form: n too small");
  const double r = triple.r();
  const RotationPair rot = triple.rotation();
  // inner integral over Y (second tensor axis) to the 1/r, outer over X
  return rotated_nested(F, r / triple.p(), G, r / triple.q(), rot.c, rot.s, n,
                        /*inner_axis=*/1, 1.0 / r, 1.0);
}

namespace {

VerificationReport make_report(double lhs, double rhs, Regime regime, double tol, int n,
                               double lo, double hi) {
  VerificationReport rep;
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.regime = regime;
  rep.tolerance = tol;
  rep.resolution = GridMeta{n, lo, hi};
  if (!(rhs > 0.0) || !(lhs >= 0.0) || !std::isfinite(lhs) || !std::isfinite(rhs)) {
    rep.ratio = 0.0;
    rep.status = CheckStatus::Degenerate;
    return rep;
  }
  rep.ratio = lhs / rhs;
  const bool ok = regime == Regime::Reverse ? rep.ratio >= 1.0 - tol : rep.ratio <= 1.0 + tol;
  rep.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  return rep;
}

}  // namespace

VerificationReport verify_bilinear(const GridFunction& f, const GridFunction& g,
                                   const YoungTriple& triple, int n, double tol) {
  const double mf = integrate(f), mg = integrate(g);
  if (!(mf > 0.0) || !(mg > 0.0))
    return make_report(0.0, 0.0, triple.regime(), tol, n, 0.0, 0.0);
  const double lhs = bilinear_form(f, g, triple, n);
  const double rhs =
      sharp_k(triple) * std::pow(mf, 1.0 / triple.p()) * std::pow(mg, 1.0 / triple.q());
  const RotationPair rot = triple.rotation();
  const RotatedWindow w = support_window(f.grid(), g.grid(), rot.c, rot.s);
  return make_report(lhs, rhs, triple.regime(), tol, n, w.b_lo, w.b_hi);
}

VerificationReport verify_comparison(const GridFunction& f, const GridFunction& g,
                                     const GridFunction& F, const GridFunction& G,
                                     const YoungTriple& triple, int n, double tol) {
  if (triple.regime() != Regime::Classical)
    throw std::domain_error("verify_comparison: comparison bound requires the Classical regime");
  const double mf = integrate(f), mF = integrate(F);
  const double mg = integrate(g), mG = integrate(G);
  if (std::abs(mf - mF) > 1e-6 * std::max(mf, mF) || std::abs(mg - mG) > 1e-6 * std::max(mg, mG))
    throw std::invalid_argument("verify_comparison: masses must match pairwise");
  const double lhs = bilinear_form(f, g, triple, n);
  const double rhs = majorant_form(F, G, triple, n);
  const RotationPair rot = triple.rotation();
  const RotatedWindow w = support_window(f.grid(), g.grid(), rot.c, rot.s);
  return make_report(lhs, rhs, triple.regime(), tol, n, w.b_lo, w.b_hi);
}

VerificationReport verify_convolution(const GridFunction& f, const GridFunction& g,
                                      const YoungTriple& triple, double tol) {
  const double mf = integrate(f), mg = integrate(g);
  if (!(mf > 0.0) || !(mg > 0.0))
    return make_report(0.0, 0.0, triple.regime(), tol, f.size(), f.grid().lo, f.grid().hi);
  const double np = p_functional(f, triple.p());
  const double nq = p_functional(g, triple.q());
  const ConvolutionResult conv = convolve_direct(f, g);
  const double lhs = p_functional(conv.result, triple.r());
  const double rhs = young_constant(triple, 1) * np * nq;
  return make_report(lhs, rhs, triple.regime(), tol, f.size(), f.grid().lo, f.grid().hi);
}

GridFunction dual_witness(const GridFunction& f, const GridFunction& g, const YoungTriple& triple,
                          int n) {
  if (triple.regime() != Regime::Classical)
    throw std::domain_error("dual_witness: duality step requires the Classical regime");
  const double p = triple.p(), q = triple.q(), r = triple.r();
  const double rc = triple.r_conj();
  const RotationPair rot = triple.rotation();
  const RotatedWindow w = support_window(f.grid(), g.grid(), rot.c, rot.s);
  const double hx = (w.a_hi - w.a_lo) / (n - 1);
  const double hy = (w.b_hi - w.b_lo) / (n - 1);

  std::vector<double> inner(n, 0.0);
  for (int j = 0; j < n; ++j) {
    const double y = w.b_lo + hy * j;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      const double x = w.a_lo + hx * i;
      const double va = f.value_at(rot.c * x - rot.s * y);
      const double vb = g.value_at(rot.s * x + rot.c * y);
      if (va <= 0.0 || vb <= 0.0) continue;
      const double wgt = (i == 0 || i == n - 1) ? 0.5 : 1.0;
      acc += wgt * std::pow(va, 1.0 / p) * std::pow(vb, 1.0 / q);
    }
    inner[j] = acc * hx;
  }
  double sup = *std::max_element(inner.begin(), inner.end());
  if (!(sup > 0.0)) throw std::domain_error("dual_witness: inner integral vanishes identically");

  std::vector<double> h(n);
  for (int j = 0; j < n; ++j) h[j] = inner[j] <= 0.0 ? 0.0 : std::pow(inner[j], r - 1.0);
  GridFunction hf(Grid{w.b_lo, w.b_hi, n}, std::move(h));
  const double norm = p_functional(hf, rc);
  return scaled(hf, 1.0 / norm);
}

}  // namespace sharpyoung
