// Both sides of the rotated bilinear inequality and of the mass-transport
// comparison bound, evaluated by tensor quadrature, with Gaussian closed
// forms and machine-readable verification reports.
#ifndef SHARPYOUNG_INEQUALITY_HPP
#define SHARPYOUNG_INEQUALITY_HPP

#include <string>

#include "convolution.hpp"
#include "exponents.hpp"
#include "grid_function.hpp"

namespace sharpyoung {

enum class CheckStatus { Pass, Fail, Degenerate };

const char* to_string(CheckStatus s);

struct GridMeta {
  int n;
  double lo, hi;
};

struct VerificationReport {
  double lhs;
  double rhs;
  double ratio;  // lhs / rhs, rhs being the bound side
  Regime regime;
  double tolerance;
  CheckStatus status;
  GridMeta resolution;
};

// {"lhs":..,"rhs":..,"ratio":..,"regime":..,"tolerance":..,"status":..,
//  "grid":{"n":..,"window":[lo,hi]}}
std::string report_to_json(const VerificationReport& r);

// ( \int ( \int f^{1/p}(cx-sy) g^{1/q}(sx+cy) dx )^r dy )^{1/r}
// on an n x n tensor grid over the rotated support box. Valid in both
// regimes; zero input gives zero.
double bilinear_form(const GridFunction& f, const GridFunction& g, const YoungTriple& triple,
                     int n = 1024);

// Exact value of the bilinear form for Gaussian inputs (center-independent).
double gaussian_closed_form(const GaussianFn& f, const GaussianFn& g, const YoungTriple& triple);

// \int ( \int F^{r/p}(cX-sY) G^{r/q}(sX+cY) dY )^{1/r} dX : the bound side
// of the comparison inequality for mass-matched inputs (Classical regime).
double majorant_form(const GridFunction& F, const GridFunction& G, const YoungTriple& triple,
                     int n = 1024);

// bilinear_form(f,g) against K (\int f)^{1/p} (\int g)^{1/q}; the Pass
// direction follows the regime.
VerificationReport verify_bilinear(const GridFunction& f, const GridFunction& g,
                                   const YoungTriple& triple, int n = 1024, double tol = 5e-3);

// bilinear_form(f,g) <= majorant_form(F,G) for mass-matched pairs.
VerificationReport verify_comparison(const GridFunction& f, const GridFunction& g,
                                     const GridFunction& F, const GridFunction& G,
                                     const YoungTriple& triple, int n = 1024, double tol = 5e-3);

// young_ratio(f,g) against the sharp one-dimensional convolution constant.
VerificationReport verify_convolution(const GridFunction& f, const GridFunction& g,
                                      const YoungTriple& triple, double tol = 5e-3);

// Extremal h with ||h||_{r'} = 1 saturating the duality step (Classical);
// returned on the outer-integral axis grid.
GridFunction dual_witness(const GridFunction& f, const GridFunction& g, const YoungTriple& triple,
                          int n = 1024);

}  // namespace sharpyoung

#endif
