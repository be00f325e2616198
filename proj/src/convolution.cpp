#include "convolution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace sharpyoung {

ConvolutionResult convolve_direct(const GridFunction& f, const GridFunction& g) {
  if (!same_step(f.grid(), g.grid()))
    throw std::invalid_argument("convolve_direct: grids must share one step (resample first)");
  const double h = f.grid().step();
  const int nf = f.size(), ng = g.size();
  const int n_out = nf + ng - 1;
  const auto fv = f.values();
  const auto gv = g.values();

  std::vector<double> out(n_out, 0.0);
  for (int k = 0; k < n_out; ++k) {
    const int i0 = std::max(0, k - ng + 1);
    const int i1 = std::min(nf - 1, k);
    double acc = 0.0;
    for (int i = i0; i <= i1; ++i) acc += fv[i] * gv[k - i];
    out[k] = acc * h;
  }

  const Grid grid_out{f.grid().lo + g.grid().lo, f.grid().hi + g.grid().hi, n_out};
  GridFunction result(grid_out, std::move(out));
  const double lost = integrate(f) * integrate(g) - integrate(result);
  return ConvolutionResult{std::move(result), ConvMethod::Direct, std::max(0.0, lost)};
}

GaussianFn convolve_gaussian(const GaussianFn& f, const GaussianFn& g) {
  const double pi = 3.14159265358979323846;
  const double sum = f.rate + g.rate;
  GaussianFn out;
  out.rate = f.rate * g.rate / sum;
  out.center = f.center + g.center;
  out.amplitude = f.amplitude * g.amplitude * std::sqrt(pi / sum);
  return out;
}

double young_ratio(const GridFunction& f, const GridFunction& g, const YoungTriple& triple) {
  if (triple.regime() == Regime::Boundary)
    throw std::domain_error("young_ratio: triple must be Classical or Reverse");
  const double nf = p_functional(f, triple.p());
  const double ng = p_functional(g, triple.q());
  if (!(nf > 0.0) || !(ng > 0.0)) throw std::domain_error("young_ratio: ratio undefined for zero input");
  const ConvolutionResult conv = convolve_direct(f, g);
  return p_functional(conv.result, triple.r()) / (nf * ng);
}

}  // namespace sharpyoung
