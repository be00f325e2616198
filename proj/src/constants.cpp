#include "constants.hpp"

#include <cmath>
#include <stdexcept>

namespace sharpyoung {

double sharp_ct(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw std::domain_error("sharp_ct: t must be positive");
  if (std::abs(t - 1.0) < 1e-12) return 1.0;
  const double tc = conjugate(t);
  // exp/log form keeps irrational exponents like 1/t accurate in one rounding.
  const double log_num = std::log(t) / t;
  const double log_den = std::log(std::abs(tc)) / tc;
  return std::exp(0.5 * (log_num - log_den));
}

double sharp_k(const YoungTriple& t) {
  const double lp = std::log(t.p()) / (2.0 * t.p());
  const double lq = std::log(t.q()) / (2.0 * t.q());
  const double lr = std::log(t.r()) / (2.0 * t.r());
  return std::exp(lp + lq - lr);
}

double young_constant(const YoungTriple& t, int n) {
  if (n < 1) throw std::domain_error("young_constant: dimension must be >= 1");
  const double base = sharp_ct(t.p()) * sharp_ct(t.q()) / sharp_ct(t.r());
  return std::pow(base, static_cast<double>(n));
}

SharpConstants compute_constants(const YoungTriple& t, int dimension) {
  SharpConstants out;
  out.c_p = sharp_ct(t.p());
  out.c_q = sharp_ct(t.q());
  out.c_r = sharp_ct(t.r());
  out.k = sharp_k(t);
  out.young_nd = young_constant(t, dimension);
  out.dimension = dimension;
  return out;
}

}  // namespace sharpyoung
