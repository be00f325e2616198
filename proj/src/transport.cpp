#include "transport.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sharpyoung {

CdfTable::CdfTable(const GridFunction& f)
    : grid_(f.grid()), vals_(f.values().begin(), f.values().end()), cum_(f.size()) {
  const double h = grid_.step();
  cum_[0] = 0.0;
  for (int i = 1; i < grid_.n; ++i)
    cum_[i] = cum_[i - 1] + 0.5 * h * (vals_[i - 1] + vals_[i]);
  if (!(mass() > 0.0)) throw std::domain_error("CdfTable: zero mass");
}

double CdfTable::evaluate(double x) const {
  if (x <= grid_.lo) return 0.0;
  if (x >= grid_.hi) return mass();
  const double h = grid_.step();
  const double t = (x - grid_.lo) / h;
  int j = static_cast<int>(t);
  if (j >= grid_.n - 1) j = grid_.n - 2;
  const double xi = (t - j) * h;
  // integral of the linear interpolant over the partial panel
  return cum_[j] + vals_[j] * xi + 0.5 * (vals_[j + 1] - vals_[j]) * xi * xi / h;
}

double CdfTable::inverse(double w) const {
  w = std::clamp(w, 0.0, mass());
  const auto it = std::upper_bound(cum_.begin(), cum_.end(), w);
  int j = static_cast<int>(it - cum_.begin()) - 1;
  j = std::clamp(j, 0, grid_.n - 2);
  const double dw = w - cum_[j];
  if (dw <= 0.0) return grid_.x(j);
  const double h = grid_.step();
  const double a = vals_[j];
  const double slope = (vals_[j + 1] - vals_[j]) / h;
  // solve a*xi + slope*xi^2/2 = dw; stable root for either slope sign
  const double disc = a * a + 2.0 * slope * dw;
  const double xi = 2.0 * dw / (a + std::sqrt(std::max(disc, 0.0)));
  return grid_.x(j) + std::min(xi, h);
}

CdfTable cdf(const GridFunction& f) { return CdfTable(f); }

namespace {

double interp_table(const Grid& g, const std::vector<double>& table, double t, const char* what) {
  if (t < g.lo || t > g.hi) throw std::domain_error(std::string(what) + ": evaluation outside window");
  const double s = (t - g.lo) / g.step();
  int i = static_cast<int>(s);
  if (i >= g.n - 1) i = g.n - 2;
  const double frac = s - i;
  if (frac < 1e-12) return table[i];
  if (frac > 1.0 - 1e-12) return table[i + 1];
  return table[i] + frac * (table[i + 1] - table[i]);
}

}  // namespace

TransportMap::TransportMap(const GridFunction& f, const GridFunction& F)
    : source_(f), target_(F) {
  if (!(f.min_value() > 0.0) || !(F.min_value() > 0.0))
    throw std::domain_error("monotone_map: map not differentiable (density vanishes in window)");
  const CdfTable cf(f), cF(F);
  const double mf = cf.mass(), mF = cF.mass();
  if (std::abs(mf - mF) > 1e-8 * std::max(mf, mF))
    throw std::invalid_argument("monotone_map: source and target masses differ");

  const int n = F.size();
  const double scale = mf / mF;  // ~1; pins the endpoint quantiles exactly
  values_.resize(n);
  deriv_.resize(n);
  for (int i = 0; i < n; ++i) {
    values_[i] = cf.inverse(cF.at_node(i) * scale);
    deriv_[i] = F[i] / f.value_at(values_[i]);
  }

  // Finite differences of u as the independent residual diagnostic.
  const double h = F.grid().step();
  pt_residual_.resize(n);
  for (int i = 0; i < n; ++i) {
    double du;
    if (i == 0)
      du = (values_[1] - values_[0]) / h;
    else if (i == n - 1)
      du = (values_[n - 1] - values_[n - 2]) / h;
    else
      du = (values_[i + 1] - values_[i - 1]) / (2.0 * h);
    pt_residual_[i] = std::abs(du * f.value_at(values_[i]) - F[i]);
  }
  residual_max_ = *std::max_element(pt_residual_.begin(), pt_residual_.end());
}

double TransportMap::operator()(double t) const {
  return interp_table(domain(), values_, t, "TransportMap");
}

double TransportMap::derivative(double t) const {
  return interp_table(domain(), deriv_, t, "TransportMap");
}

TransportMap monotone_map(const GridFunction& f, const GridFunction& F) {
  return TransportMap(f, F);
}

RotatedTransport make_rotated(TransportMap u, TransportMap v, RotationPair rot) {
  return RotatedTransport{std::move(u), std::move(v), rot};
}

double jacobian(const RotatedTransport& rt, double X, double Y) {
  const double alpha = rt.rot.c * X - rt.rot.s * Y;
  const double beta = rt.rot.s * X + rt.rot.c * Y;
  return rt.u.derivative(alpha) * rt.v.derivative(beta);
}

double amgm_gap(const RotatedTransport& rt, double X, double Y) {
  const double c2 = rt.rot.c * rt.rot.c;
  const double s2 = rt.rot.s * rt.rot.s;
  const double up = rt.u.derivative(rt.rot.c * X - rt.rot.s * Y);
  const double vp = rt.v.derivative(rt.rot.s * X + rt.rot.c * Y);
  const double gap = s2 * up + c2 * vp - std::pow(up, s2) * std::pow(vp, c2);
  return std::max(gap, 0.0);
}

Point2 theta_point(const RotatedTransport& rt, double X, double Y) {
  const double c = rt.rot.c, s = rt.rot.s;
  const double uu = rt.u(c * X - s * Y);
  const double vv = rt.v(s * X + c * Y);
  return Point2{c * uu + s * vv, -s * uu + c * vv};
}

double a_value(const RotatedTransport& rt, double X, double Y) {
  const double c = rt.rot.c, s = rt.rot.s;
  return -s * rt.u(c * X - s * Y) + c * rt.v(s * X + c * Y);
}

double a_partial_y(const RotatedTransport& rt, double X, double Y) {
  const double c = rt.rot.c, s = rt.rot.s;
  return s * s * rt.u.derivative(c * X - s * Y) + c * c * rt.v.derivative(s * X + c * Y);
}

Box inscribed_box(const RotatedTransport& rt, double shrink) {
  const Grid& du = rt.u.domain();
  const Grid& dv = rt.v.domain();
  const double wa = (du.hi - du.lo) * shrink;
  const double wb = (dv.hi - dv.lo) * shrink;
  const double am = 0.5 * (du.lo + du.hi), bm = 0.5 * (dv.lo + dv.hi);
  const double c = rt.rot.c, s = rt.rot.s;
  const double X0 = c * am + s * bm;
  const double Y0 = -s * am + c * bm;
  const double half = 0.5 * std::min(wa, wb) / (c + s);
  return Box{X0 - half, X0 + half, Y0 - half, Y0 + half};
}

namespace {

double tensor_trapezoid(const std::function<double(double, double)>& f, const Box& b, int n,
                        double* boundary_max = nullptr, double* interior_max = nullptr) {
  const double hx = (b.x1 - b.x0) / (n - 1);
  const double hy = (b.y1 - b.y0) / (n - 1);
  double acc = 0.0, bmax = 0.0, imax = 0.0;
  for (int j = 0; j < n; ++j) {
    const double y = b.y0 + hy * j;
    const double wy = (j == 0 || j == n - 1) ? 0.5 : 1.0;
    double row = 0.0;
    for (int i = 0; i < n; ++i) {
      const double v = f(b.x0 + hx * i, y);
      const double wx = (i == 0 || i == n - 1) ? 0.5 : 1.0;
      row += wx * v;
      if (i == 0 || i == n - 1 || j == 0 || j == n - 1)
        bmax = std::max(bmax, std::abs(v));
      else
        imax = std::max(imax, std::abs(v));
    }
    acc += wy * row;
  }
  if (boundary_max) *boundary_max = bmax;
  if (interior_max) *interior_max = imax;
  return acc * hx * hy;
}

}  // namespace

CovCheckResult change_of_variables_check(const RotatedTransport& rt,
                                         const std::function<double(double, double)>& phi,
                                         int n, double leak_tol) {
  if (n < 8) throw std::invalid_argument("change_of_variables_check: n too small");
  const Box bxy = inscribed_box(rt);

  // Image box: bounding box of Theta over the (X,Y) boundary (Theta is
  // monotone in each rotated coordinate so extremes lie on the boundary).
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  bool first = true;
  const int m = 129;
  for (int k = 0; k < m; ++k) {
    const double t = static_cast<double>(k) / (m - 1);
    const Point2 pts[4] = {
        theta_point(rt, bxy.x0 + t * (bxy.x1 - bxy.x0), bxy.y0),
        theta_point(rt, bxy.x0 + t * (bxy.x1 - bxy.x0), bxy.y1),
        theta_point(rt, bxy.x0, bxy.y0 + t * (bxy.y1 - bxy.y0)),
        theta_point(rt, bxy.x1, bxy.y0 + t * (bxy.y1 - bxy.y0)),
    };
    for (const auto& p : pts) {
      if (first) {
        x0 = x1 = p.x;
        y0 = y1 = p.y;
        first = false;
      } else {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
      }
    }
  }
  const Box img{x0, x1, y0, y1};

  double bmax = 0, imax = 0;
  const double direct = tensor_trapezoid(phi, img, n, &bmax, &imax);
  if (bmax > leak_tol * std::max(imax, 1e-300))
    throw std::domain_error("change_of_variables_check: integrand leaks through the image boundary");

  auto pulled = [&](double X, double Y) {
    const Point2 p = theta_point(rt, X, Y);
    return phi(p.x, p.y) * jacobian(rt, X, Y);
  };
  const double transported = tensor_trapezoid(pulled, bxy, n, &bmax, &imax);
  if (bmax > leak_tol * std::max(imax, 1e-300))
    throw std::domain_error("change_of_variables_check: integrand leaks through the window boundary");

  return CovCheckResult{direct, transported};
}

}  // namespace sharpyoung
