#include "extremizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sharpyoung {

namespace {

constexpr double kPi = 3.14159265358979323846;

double powe(double v, double e) { return v <= 0.0 ? 0.0 : std::pow(v, e); }

// Unnormalized instance integral \int prod f_i^{a_i}(<x,u_i>) dx.
double bl_raw(const BLInstance& inst, std::span<const GridFunction> fns, int n) {
  if (static_cast<int>(fns.size()) != inst.m())
    throw std::invalid_argument("bl_functional: tuple length must match the instance");
  for (const auto& f : fns)
    if (!(integrate(f) > 0.0)) throw std::domain_error("bl_functional: zero-mass input");

  if (inst.dim == 1) {
    double lo = -1e300, hi = 1e300;
    for (int i = 0; i < inst.m(); ++i) {
      const double u = inst.dirs[i][0];
      double a = fns[i].grid().lo / u, b = fns[i].grid().hi / u;
      if (a > b) std::swap(a, b);
      lo = std::max(lo, a);
      hi = std::min(hi, b);
    }
    if (!(lo < hi)) return 0.0;
    const double h = (hi - lo) / (n - 1);
    double acc = 0.0;
    for (int k = 0; k < n; ++k) {
      const double x = lo + h * k;
      double prod = 1.0;
      for (int i = 0; i < inst.m() && prod > 0.0; ++i)
        prod *= powe(fns[i].value_at(x * inst.dirs[i][0]), inst.weights[i]);
      acc += ((k == 0 || k == n - 1) ? 0.5 : 1.0) * prod;
    }
    return acc * h;
  }

  // dim == 2: bound the domain by the strip intersection of the first two
  // (independent) directions; remaining strips only cut the support further.
  const auto& u1 = inst.dirs[0];
  const auto& u2 = inst.dirs[1];
  const double det = u1[0] * u2[1] - u1[1] * u2[0];
  if (std::abs(det) < 1e-12)
    throw std::invalid_argument("bl_functional: first two directions must be independent");
  double x_lo = 1e300, x_hi = -1e300, y_lo = 1e300, y_hi = -1e300;
  for (double t1 : {fns[0].grid().lo, fns[0].grid().hi})
    for (double t2 : {fns[1].grid().lo, fns[1].grid().hi}) {
      const double x = (u2[1] * t1 - u1[1] * t2) / det;
      const double y = (-u2[0] * t1 + u1[0] * t2) / det;
      x_lo = std::min(x_lo, x);
      x_hi = std::max(x_hi, x);
      y_lo = std::min(y_lo, y);
      y_hi = std::max(y_hi, y);
    }
  const double hx = (x_hi - x_lo) / (n - 1);
  const double hy = (y_hi - y_lo) / (n - 1);
  double acc = 0.0;
  for (int j = 0; j < n; ++j) {
    const double y = y_lo + hy * j;
    double row = 0.0;
    for (int i = 0; i < n; ++i) {
      const double x = x_lo + hx * i;
      double prod = 1.0;
      for (int k = 0; k < inst.m() && prod > 0.0; ++k)
        prod *= powe(fns[k].value_at(x * inst.dirs[k][0] + y * inst.dirs[k][1]),
                     inst.weights[k]);
      row += ((i == 0 || i == n - 1) ? 0.5 : 1.0) * prod;
    }
    acc += ((j == 0 || j == n - 1) ? 0.5 : 1.0) * row;
  }
  return acc * hx * hy;
}

}  // namespace

BLInstance make_bl_instance(int dim, std::vector<std::array<double, 2>> dirs,
                            std::vector<double> weights) {
  if (dim != 1 && dim != 2) throw std::invalid_argument("BLInstance: dim must be 1 or 2");
  if (dirs.size() != weights.size() || dirs.empty() || dirs.size() > 3)
    throw std::invalid_argument("BLInstance: needs 1..3 matched directions and weights");
  if (static_cast<int>(dirs.size()) < dim)
    throw std::invalid_argument("BLInstance: needs m >= dim");
  for (const auto& u : dirs)
    if (u[0] == 0.0 && u[1] == 0.0) throw std::invalid_argument("BLInstance: zero direction");
  for (double a : weights)
    if (!(a > 0.0)) throw std::invalid_argument("BLInstance: weights must be positive");
  return BLInstance{dim, std::move(dirs), std::move(weights)};
}

YoungTriple young_instance_triple(const YoungTriple& triple) {
  if (triple.regime() == Regime::Boundary)
    throw std::domain_error("young_instance: triple must be Classical or Reverse");
  return triple.regime() == Regime::Reverse ? triple.dual() : triple;
}

BLInstance young_instance(const YoungTriple& triple) {
  const YoungTriple t = young_instance_triple(triple);
  const RotationPair rot = t.rotation();
  return make_bl_instance(2,
                          {{rot.c, -rot.s}, {rot.s, rot.c}, {0.0, 1.0}},
                          {1.0 / t.p(), 1.0 / t.q(), 1.0 / t.r_conj()});
}

std::vector<GridFunction> gaussian_maximizer_tuple(const YoungTriple& triple, int n1d) {
  const YoungTriple t = young_instance_triple(triple);
  const double rates[3] = {t.p(), t.q(), t.r()};
  const double w = 8.0 / std::sqrt(*std::min_element(rates, rates + 3));
  const Grid grid = Grid::make(-w, w, n1d);
  std::vector<GridFunction> tuple;
  tuple.reserve(3);
  for (double rate : rates)
    tuple.push_back(normalized(sample_gaussian(GaussianFn{1.0, rate, 0.0}, grid)));
  return tuple;
}

double bl_functional(const BLInstance& inst, std::span<const GridFunction> fns, int n) {
  double denom = 1.0;
  for (int i = 0; i < inst.m(); ++i) denom *= std::pow(integrate(fns[i]), inst.weights[i]);
  return bl_raw(inst, fns, n) / denom;
}

std::vector<GridFunction> convolve_tuple(std::span<const GridFunction> f,
                                         std::span<const GridFunction> g) {
  if (f.size() != g.size()) throw std::invalid_argument("convolve_tuple: length mismatch");
  std::vector<GridFunction> out;
  out.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    ConvolutionResult c = convolve_direct(f[i], g[i]);
    if (!(integrate(c.result) > 0.0)) throw std::domain_error("convolve_tuple: zero component");
    out.push_back(std::move(c.result));
  }
  return out;
}

VerificationReport supermodularity_check(const BLInstance& inst,
                                         std::span<const GridFunction> f,
                                         std::span<const GridFunction> g, double m_est,
                                         int n, double tol) {
  for (const auto& fn : {f, g})
    for (const auto& comp : fn)
      if (std::abs(integrate(comp) - 1.0) > 1e-6)
        throw std::invalid_argument("supermodularity_check: tuples must be unit-mass");
  const double phi_f = bl_raw(inst, f, n);
  const double phi_g = bl_raw(inst, g, n);
  const std::vector<GridFunction> conv = convolve_tuple(f, g);
  const double phi_conv = bl_raw(inst, conv, n);

  VerificationReport rep;
  rep.lhs = phi_f * phi_g;
  rep.rhs = m_est * phi_conv;
  rep.regime = Regime::Classical;
  rep.tolerance = tol;
  rep.resolution = GridMeta{n, f[0].grid().lo, f[0].grid().hi};
  if (!(rep.rhs > 0.0)) {
    rep.ratio = 0.0;
    rep.status = CheckStatus::Degenerate;
    return rep;
  }
  rep.ratio = rep.lhs / rep.rhs;
  rep.status = rep.ratio <= 1.0 + tol ? CheckStatus::Pass : CheckStatus::Fail;
  return rep;
}

GaussianFit fit_gaussian(const GridFunction& f) {
  const double m0 = integrate(f);
  if (!(m0 > 0.0)) throw std::domain_error("fit_gaussian: zero mass");
  const Grid& g = f.grid();
  const double h = g.step();
  double m1 = 0.0, m2 = 0.0;
  for (int i = 0; i < f.size(); ++i) {
    const double w = (i == 0 || i == f.size() - 1) ? 0.5 : 1.0;
    m1 += w * g.x(i) * f[i];
    m2 += w * g.x(i) * g.x(i) * f[i];
  }
  m1 *= h / m0;
  m2 = m2 * h / m0 - m1 * m1;
  if (!(m2 > 1e-12 * (g.hi - g.lo) * (g.hi - g.lo)))
    throw std::domain_error("fit_gaussian: near-zero variance");

  double a = m0 * std::sqrt(1.0 / (2.0 * m2) / kPi);
  double lam = 1.0 / (2.0 * m2);
  double y = m1;

  auto rel_residual = [&](double aa, double ll, double yy) {
    double num = 0.0, den = 0.0;
    for (int i = 0; i < f.size(); ++i) {
      const double w = (i == 0 || i == f.size() - 1) ? 0.5 : 1.0;
      const double d = g.x(i) - yy;
      const double e = aa * std::exp(-ll * d * d) - f[i];
      num += w * e * e;
      den += w * f[i] * f[i];
    }
    return den > 0.0 ? std::sqrt(num / den) : 0.0;
  };

  // One Gauss-Newton pass on (a, lambda, y).
  double jtj[3][3] = {};
  double jtr[3] = {};
  for (int i = 0; i < f.size(); ++i) {
    const double d = g.x(i) - y;
    const double e = std::exp(-lam * d * d);
    const double model = a * e;
    const double row[3] = {e, -a * d * d * e, 2.0 * a * lam * d * e};
    const double res = model - f[i];
    for (int r = 0; r < 3; ++r) {
      jtr[r] += row[r] * res;
      for (int c = 0; c < 3; ++c) jtj[r][c] += row[r] * row[c];
    }
  }
  // Cramer solve for the 3x3 normal equations.
  auto det3 = [](const double m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  const double d0 = det3(jtj);
  double a2 = a, lam2 = lam, y2 = y;
  if (std::abs(d0) > 1e-30) {
    double m[3][3];
    double delta[3];
    for (int k = 0; k < 3; ++k) {
      std::copy(&jtj[0][0], &jtj[0][0] + 9, &m[0][0]);
      for (int r = 0; r < 3; ++r) m[r][k] = jtr[r];
      delta[k] = det3(m) / d0;
    }
    a2 = a - delta[0];
    lam2 = lam - delta[1];
    y2 = y - delta[2];
  }

  const double r1 = rel_residual(a, lam, y);
  GaussianFit fit{a, lam, y, r1};
  if (a2 >= 0.0 && lam2 > 0.0) {
    const double r2 = rel_residual(a2, lam2, y2);
    if (r2 < r1) fit = GaussianFit{a2, lam2, y2, r2};
  }
  return fit;
}

std::pair<GridFunction, GridFunction> gaussian_equality_pair(const YoungTriple& triple,
                                                             int n1d) {
  const double p = triple.p(), q = triple.q();
  const Grid gf = Grid::make(-8.0 / std::sqrt(p), 8.0 / std::sqrt(p), n1d);
  const Grid gg = Grid::make(-8.0 / std::sqrt(q), 8.0 / std::sqrt(q), n1d);
  return {normalized(sample_gaussian(GaussianFn{1.0, p, 0.0}, gf)),
          normalized(sample_gaussian(GaussianFn{1.0, q, 0.0}, gg))};
}

GridFunction perturbation_direction(PerturbationKind kind, const YoungTriple& triple,
                                    const Grid& grid) {
  const double p = triple.p();
  std::vector<double> vals(grid.n);
  for (int i = 0; i < grid.n; ++i) {
    const double x = grid.x(i);
    const double f0 = std::exp(-p * x * x);
    double mod;
    switch (kind) {
      case PerturbationKind::Scaling: mod = 1.0; break;
      case PerturbationKind::Dilation:
        // rate-perturbation tangent 2p x^2, tapered so finite rays stay
        // nonnegative (the untapered tangent is unbounded relative to f0)
        mod = 2.0 * p * x * x * std::exp(-0.5 * p * x * x);
        break;
      case PerturbationKind::Quartic: mod = x * x * x * x * std::exp(-x * x); break;
      case PerturbationKind::Cosine:
        mod = 0.5 * (1.0 + std::cos(2.0 * x)) * std::exp(-x * x);
        break;
      case PerturbationKind::Sextic: mod = std::pow(x, 6) * std::exp(-2.0 * x * x); break;
      default: throw std::invalid_argument("perturbation_direction: unknown kind");
    }
    vals[i] = mod * f0;
  }
  return GridFunction(grid, std::move(vals));
}

std::vector<ScanPoint> stationarity_scan(const YoungTriple& triple,
                                         const GridFunction& direction, int steps,
                                         double eps_max, int n2d) {
  if (steps < 3) throw std::invalid_argument("stationarity_scan: needs at least 3 steps");
  if (!(eps_max > 0.0)) throw std::invalid_argument("stationarity_scan: eps_max must be positive");
  const Grid& grid = direction.grid();
  const GridFunction f0 = sample_gaussian(GaussianFn{1.0, triple.p(), 0.0}, grid);
  const Grid gg = Grid::make(-8.0 / std::sqrt(triple.q()), 8.0 / std::sqrt(triple.q()), grid.n);
  const GridFunction g0 = normalized(sample_gaussian(GaussianFn{1.0, triple.q(), 0.0}, gg));

  std::vector<ScanPoint> out;
  out.reserve(steps);
  for (int k = 0; k < steps; ++k) {
    const double eps = -eps_max + 2.0 * eps_max * k / (steps - 1);
    std::vector<double> vals(grid.n);
    for (int i = 0; i < grid.n; ++i) {
      vals[i] = f0[i] + eps * direction[i];
      if (vals[i] < 0.0)
        throw std::domain_error("stationarity_scan: perturbed function becomes negative");
    }
    const GridFunction f_eps = normalized(GridFunction(grid, std::move(vals)));
    out.push_back(ScanPoint{eps, verify_bilinear(f_eps, g0, triple, n2d).ratio});
  }
  return out;
}

}  // namespace sharpyoung
