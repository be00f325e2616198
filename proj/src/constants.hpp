// Sharp constants of the Young inequality: C_t, K(p,q,r) and the
// N-dimensional constant (C_p C_q / C_r)^N.
#ifndef SHARPYOUNG_CONSTANTS_HPP
#define SHARPYOUNG_CONSTANTS_HPP

#include "exponents.hpp"

namespace sharpyoung {

// C_t = sqrt(t^{1/t} / |t'|^{1/t'}). Continuous at t = 1 with C_1 = 1
// (|t'|^{1/t'} -> 1 as t' -> +-inf); an explicit branch handles |t-1| < 1e-12.
double sharp_ct(double t);

// K(p,q,r) = p^{1/2p} q^{1/2q} / r^{1/2r}.
double sharp_k(const YoungTriple& t);

// (C_p C_q / C_r)^n.
double young_constant(const YoungTriple& t, int n);

struct SharpConstants {
  double c_p, c_q, c_r;
  double k;
  double young_nd;
  int dimension;
};

SharpConstants compute_constants(const YoungTriple& t, int dimension);

}  // namespace sharpyoung

#endif
