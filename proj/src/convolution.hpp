// Grid convolution on the exact Minkowski-sum window, the closed-form
// Gaussian convolution, and the convolution-inequality ratio.
#ifndef SHARPYOUNG_CONVOLUTION_HPP
#define SHARPYOUNG_CONVOLUTION_HPP

#include "exponents.hpp"
#include "grid_function.hpp"

namespace sharpyoung {

enum class ConvMethod { Direct, Fast };

struct ConvolutionResult {
  GridFunction result;     // on [f.lo + g.lo, f.hi + g.hi]
  ConvMethod method;
  double truncation_note;  // estimated mass lost to window truncation
};

// (f * g)(z) = \int f(x) g(z - x) dx by quadrature; requires equal steps.
ConvolutionResult convolve_direct(const GridFunction& f, const GridFunction& g);

// Exact: rate l1 l2/(l1+l2), center y1+y2, amplitude a1 a2 sqrt(pi/(l1+l2)).
GaussianFn convolve_gaussian(const GaussianFn& f, const GaussianFn& g);

// ||f * g||_r / (||f||_p ||g||_q); valid in both regimes (r < 1 included).
// Throws if f or g has zero mass or the triple is Boundary.
double young_ratio(const GridFunction& f, const GridFunction& g, const YoungTriple& triple);

}  // namespace sharpyoung

#endif
