#include "grid_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rng.hpp"

namespace sharpyoung {

Grid Grid::make(double lo, double hi, int n) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
    throw std::domain_error("Grid: requires finite lo < hi");
  if (n < 2) throw std::domain_error("Grid: requires n >= 2");
  return Grid{lo, hi, n};
}

bool same_step(const Grid& a, const Grid& b) {
  const double ha = a.step(), hb = b.step();
  return std::abs(ha - hb) <= 1e-12 * std::max(ha, hb);
}

GridFunction::GridFunction(Grid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  Grid::make(grid.lo, grid.hi, grid.n);
  if (static_cast<int>(values_.size()) != grid_.n)
    throw std::invalid_argument("GridFunction: values length must equal grid.n");
  for (double v : values_)
    if (!(v >= 0.0) || !std::isfinite(v))
      throw std::invalid_argument("GridFunction: values must be nonnegative and finite");
}

double GridFunction::value_at(double x) const {
  if (x < grid_.lo || x > grid_.hi) return 0.0;
  const double t = (x - grid_.lo) / grid_.step();
  int i = static_cast<int>(t);
  if (i >= grid_.n - 1) i = grid_.n - 2;
  const double frac = t - i;
  // snap rounding-level phases so node evaluations return exact samples
  if (frac < 1e-12) return values_[i];
  if (frac > 1.0 - 1e-12) return values_[i + 1];
  return values_[i] + frac * (values_[i + 1] - values_[i]);
}

double GridFunction::min_value() const {
  return *std::min_element(values_.begin(), values_.end());
}

double GridFunction::max_value() const {
  return *std::max_element(values_.begin(), values_.end());
}

double GaussianFn::operator()(double x) const {
  const double d = x - center;
  return amplitude * std::exp(-rate * d * d);
}

double GaussianFn::mass() const {
  const double pi = 3.14159265358979323846;
  return amplitude * std::sqrt(pi / rate);
}

double integrate(const GridFunction& f) {
  const auto v = f.values();
  double acc = 0.5 * (v.front() + v.back());
  for (int i = 1; i + 1 < f.size(); ++i) acc += v[i];
  return acc * f.grid().step();
}

double p_functional(const GridFunction& f, double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw std::domain_error("p_functional: p must be positive");
  if (p == 1.0) return integrate(f);
  const auto v = f.values();
  auto powp = [p](double x) { return x == 0.0 ? 0.0 : std::pow(x, p); };
  double acc = 0.5 * (powp(v.front()) + powp(v.back()));
  for (int i = 1; i + 1 < f.size(); ++i) acc += powp(v[i]);
  return std::pow(acc * f.grid().step(), 1.0 / p);
}

GridFunction sample_gaussian(const GaussianFn& g, const Grid& grid) {
  if (!(g.amplitude >= 0.0) || !(g.rate > 0.0))
    throw std::domain_error("sample_gaussian: requires amplitude >= 0 and rate > 0");
  std::vector<double> vals(grid.n);
  for (int i = 0; i < grid.n; ++i) vals[i] = g(grid.x(i));
  return GridFunction(grid, std::move(vals));
}

double gaussian_tail_mass(const GaussianFn& g, const Grid& grid) {
  const double sr = std::sqrt(g.rate);
  const double left = 0.5 * std::erfc(sr * (g.center - grid.lo));
  const double right = 0.5 * std::erfc(sr * (grid.hi - g.center));
  return g.mass() * (left + right);
}

GridFunction scaled(const GridFunction& f, double factor) {
  if (!(factor >= 0.0)) throw std::domain_error("scaled: factor must be nonnegative");
  std::vector<double> vals(f.values().begin(), f.values().end());
  for (double& v : vals) v *= factor;
  return GridFunction(f.grid(), std::move(vals));
}

GridFunction normalized(const GridFunction& f) {
  const double m = integrate(f);
  if (!(m > 0.0)) throw std::domain_error("normalized: zero mass");
  return scaled(f, 1.0 / m);
}

RandomDensity random_density(std::uint64_t seed, const Grid& grid, double smoothness) {
  if (!(smoothness >= 1.0)) throw std::domain_error("random_density: smoothness must be >= 1");
  Rng rng(seed);
  const int ncomp = rng.uniform_int(3, 8);
  const double mid = 0.5 * (grid.hi + grid.lo);
  const double max_rate = 0.35 + 1.25 / smoothness;

  // One broad base component keeps the density bounded away from zero in the
  // bulk (deep inter-bump valleys make quantile maps stiff and wreck the
  // transport residual); the narrower components sit on top of it.
  std::vector<GaussianFn> comps;
  comps.reserve(ncomp);
  comps.push_back(GaussianFn{rng.uniform(0.7, 1.0), rng.uniform(0.3, 0.42),
                             mid + rng.uniform(-0.5, 0.5)});
  for (int k = 1; k < ncomp; ++k) {
    GaussianFn g;
    g.amplitude = rng.uniform(0.2, 0.9);
    g.rate = rng.uniform(0.35, max_rate);
    g.center = mid + rng.uniform(-1.6, 1.6);
    comps.push_back(g);
  }

  double amp_sum = 0.0;
  double min_rate = comps.front().rate;
  for (const auto& g : comps) {
    amp_sum += g.amplitude;
    min_rate = std::min(min_rate, g.rate);
  }
  const GaussianFn floor_term{1e-6 * amp_sum, 1.0, mid};
  min_rate = std::min(min_rate, floor_term.rate);

  std::vector<double> vals(grid.n);
  for (int i = 0; i < grid.n; ++i) {
    const double x = grid.x(i);
    double v = floor_term(x);
    for (const auto& g : comps) v += g(x);
    vals[i] = v;
  }
  GridFunction fn = normalized(GridFunction(grid, std::move(vals)));

  const double dom_rate = 0.5 * min_rate;
  double dom_amp = 0.0;
  for (int i = 0; i < grid.n; ++i) {
    const double x = grid.x(i);
    dom_amp = std::max(dom_amp, fn[i] * std::exp(dom_rate * x * x));
  }
  return RandomDensity{std::move(fn), dom_amp, dom_rate};
}

}  // namespace sharpyoung
