// Nonnegative integrable functions on a truncated line: uniform-grid samples
// and closed-form Gaussians, with trapezoid quadrature and L^p functionals
// for every p > 0 (including p < 1).
#ifndef SHARPYOUNG_GRID_FUNCTION_HPP
#define SHARPYOUNG_GRID_FUNCTION_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace sharpyoung {

struct Grid {
  double lo;
  double hi;
  int n;  // number of samples, >= 2

  double step() const { return (hi - lo) / (n - 1); }
  double x(int i) const { return lo + step() * i; }

  // Validates lo < hi, n >= 2; throws std::domain_error otherwise.
  static Grid make(double lo, double hi, int n);
};

bool same_step(const Grid& a, const Grid& b);

class GridFunction {
 public:
  // Throws if values.size() != grid.n or any value is negative or non-finite.
  GridFunction(Grid grid, std::vector<double> values);

  const Grid& grid() const { return grid_; }
  std::span<const double> values() const { return values_; }
  double operator[](int i) const { return values_[i]; }
  int size() const { return grid_.n; }

  // Linear interpolation; zero outside [lo, hi].
  double value_at(double x) const;

  double min_value() const;
  double max_value() const;

 private:
  Grid grid_;
  std::vector<double> values_;
};

// x -> amplitude * exp(-rate (x - center)^2)
struct GaussianFn {
  double amplitude;
  double rate;
  double center;

  double operator()(double x) const;
  double mass() const;  // amplitude * sqrt(pi / rate)
};

// Trapezoid integral; exact for piecewise-linear data.
double integrate(const GridFunction& f);

// (\int f^p)^{1/p} for any p > 0; 0^p = 0. Throws for p <= 0.
double p_functional(const GridFunction& f, double p);

GridFunction sample_gaussian(const GaussianFn& g, const Grid& grid);

// Mass outside [lo, hi] of the exact Gaussian (erfc tail estimate).
double gaussian_tail_mass(const GaussianFn& g, const Grid& grid);

GridFunction scaled(const GridFunction& f, double factor);

// f / integrate(f); throws on zero mass.
GridFunction normalized(const GridFunction& f);

struct RandomDensity {
  GridFunction fn;
  // Domination envelope: fn(x) <= amplitude * exp(-rate x^2) on the grid.
  double domination_amplitude;
  double domination_rate;
};

// Strictly positive, unit-mass mixture of 3-8 Gaussians plus a small positive
// floor; deterministic for a fixed seed. `smoothness` >= 1 caps the mixture
// rates (higher = smoother).
RandomDensity random_density(std::uint64_t seed, const Grid& grid, double smoothness = 1.0);

}  // namespace sharpyoung

#endif
