// Monotone mass-transport maps between positive densities: CDF tables with
// exact in-panel inversion, the quantile map u with u'(t) f(u(t)) = F(t),
// the rotated two-dimensional change of variables and its Jacobian.
#ifndef SHARPYOUNG_TRANSPORT_HPP
#define SHARPYOUNG_TRANSPORT_HPP

#include <functional>
#include <vector>

#include "exponents.hpp"
#include "grid_function.hpp"

namespace sharpyoung {

// Cumulative integral of the piecewise-linear interpolant: C^1, monotone,
// piecewise quadratic. Exact inversion per panel keeps the quantile map
// smooth enough for finite-difference diagnostics (a piecewise-linear CDF
// interpolant would leave an O(h) kink noise in them).
class CdfTable {
 public:
  explicit CdfTable(const GridFunction& f);

  double mass() const { return cum_.back(); }
  double at_node(int i) const { return cum_[i]; }
  double evaluate(double x) const;
  // Quantile: smallest x with evaluate(x) = w; w clamped to [0, mass].
  double inverse(double w) const;
  const Grid& grid() const { return grid_; }

 private:
  Grid grid_;
  std::vector<double> vals_;
  std::vector<double> cum_;
};

CdfTable cdf(const GridFunction& f);

class TransportMap {
 public:
  // u with \int_{-inf}^{u(t)} f = \int_{-inf}^{t} F, t on F's grid.
  // Requires strictly positive f, F with masses equal within 1e-8 relative.
  TransportMap(const GridFunction& f, const GridFunction& F);

  const GridFunction& source() const { return source_; }
  const GridFunction& target() const { return target_; }
  const Grid& domain() const { return target_.grid(); }

  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& derivatives() const { return deriv_; }
  const std::vector<double>& pointwise_residuals() const { return pt_residual_; }
  double residual() const { return residual_max_; }

  // Linear interpolation on the target grid; throws outside the domain.
  double operator()(double t) const;
  double derivative(double t) const;

 private:
  GridFunction source_, target_;
  std::vector<double> values_;       // u(t_i), strictly increasing
  std::vector<double> deriv_;        // F(t_i) / f(u(t_i))
  std::vector<double> pt_residual_;  // |FD(u)(t_i) f(u(t_i)) - F(t_i)|
  double residual_max_;
};

TransportMap monotone_map(const GridFunction& f, const GridFunction& F);

struct RotatedTransport {
  TransportMap u;
  TransportMap v;
  RotationPair rot;
};

RotatedTransport make_rotated(TransportMap u, TransportMap v, RotationPair rot);

// u'(cX - sY) v'(sX + cY); throws when either argument leaves its window.
double jacobian(const RotatedTransport& rt, double X, double Y);

// s^2 U' + c^2 V' - (U')^{s^2} (V')^{c^2}, clamped at zero.
double amgm_gap(const RotatedTransport& rt, double X, double Y);

struct Point2 {
  double x, y;
};

// Theta(X,Y) = (c u(cX-sY) + s v(sX+cY), -s u(cX-sY) + c v(sX+cY)).
Point2 theta_point(const RotatedTransport& rt, double X, double Y);

// Second component of Theta and its Y-derivative s^2 u' + c^2 v'.
double a_value(const RotatedTransport& rt, double X, double Y);
double a_partial_y(const RotatedTransport& rt, double X, double Y);

struct Box {
  double x0, x1, y0, y1;
};

// Largest centered axis-aligned square in (X,Y) whose rotated image stays
// inside both map domains, shrunk by the given factor.
Box inscribed_box(const RotatedTransport& rt, double shrink = 0.95);

struct CovCheckResult {
  double direct_integral;       // integral of phi over the image box
  double transported_integral;  // integral of phi(Theta) * Jacobian
};

// Both sides of the change-of-variables identity for an integrand supported
// strictly inside the mapped window; throws on boundary support leakage.
CovCheckResult change_of_variables_check(const RotatedTransport& rt,
                                         const std::function<double(double, double)>& phi,
                                         int n, double leak_tol = 1e-7);

}  // namespace sharpyoung

#endif
