// Brascamp-Lieb functional on low-dimensional instances, the
// maximizer-convolution property, Gaussian-form fitting, and perturbative
// stationarity scans around Gaussian extremizers.
#ifndef SHARPYOUNG_EXTREMIZER_HPP
#define SHARPYOUNG_EXTREMIZER_HPP

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "exponents.hpp"
#include "grid_function.hpp"
#include "inequality.hpp"

namespace sharpyoung {

struct BLInstance {
  int dim;                                  // 1 or 2
  std::vector<std::array<double, 2>> dirs;  // m unit-normalizable vectors (dim 1 uses [0])
  std::vector<double> weights;              // m positive weights

  int m() const { return static_cast<int>(dirs.size()); }
};

BLInstance make_bl_instance(int dim, std::vector<std::array<double, 2>> dirs,
                            std::vector<double> weights);

// The rotated-coordinates encoding of the sharp convolution inequality:
// dirs (c,-s), (s,c), (0,1) with weights 1/p, 1/q, 1/r'. A Reverse triple is
// encoded through its Classical dual (the weights must stay positive).
BLInstance young_instance(const YoungTriple& triple);

// The triple whose exponents the instance carries (the dual for Reverse input).
YoungTriple young_instance_triple(const YoungTriple& triple);

// Unit-mass Gaussian maximizer tuple (rates p, q, r of the instance triple)
// sampled on a shared grid.
std::vector<GridFunction> gaussian_maximizer_tuple(const YoungTriple& triple, int n1d);

// \int prod f_i^{a_i}(<x,u_i>) dx / prod (\int f_i)^{a_i} by tensor
// quadrature (dim <= 2).
double bl_functional(const BLInstance& inst, std::span<const GridFunction> fns, int n = 1024);

// Componentwise convolution of two equal-length tuples.
std::vector<GridFunction> convolve_tuple(std::span<const GridFunction> f,
                                         std::span<const GridFunction> g);

// Checks Phi(f) Phi(g) <= M_est Phi(f (x) g) for unit-mass tuples, where Phi
// is the unnormalized instance integral.
VerificationReport supermodularity_check(const BLInstance& inst,
                                         std::span<const GridFunction> f,
                                         std::span<const GridFunction> g, double m_est,
                                         int n = 1024, double tol = 5e-3);

struct GaussianFit {
  double amplitude;
  double rate;
  double center;
  double residual;  // relative L2 misfit
};

// Moment-matched Gaussian fit with one least-squares refinement pass.
GaussianFit fit_gaussian(const GridFunction& f);

// Unit-mass pair (rates p and q) on windows scaled to the rates.
std::pair<GridFunction, GridFunction> gaussian_equality_pair(const YoungTriple& triple,
                                                             int n1d = 2048);

enum class PerturbationKind { Scaling, Dilation, Quartic, Cosine, Sextic };

// Nonnegative perturbation direction for the first function of the equality
// pair. Scaling is the exact invariance direction (removed by the scan's
// mass renormalization); the others carry genuine curvature.
GridFunction perturbation_direction(PerturbationKind kind, const YoungTriple& triple,
                                    const Grid& grid);

struct ScanPoint {
  double epsilon;
  double ratio;
};

// Sharp-ratio scan along f -> normalize(f0 + eps * direction) with g fixed
// at the matching Gaussian; mass renormalized at every eps.
std::vector<ScanPoint> stationarity_scan(const YoungTriple& triple,
                                         const GridFunction& direction, int steps,
                                         double eps_max, int n2d = 512);

}  // namespace sharpyoung

#endif
