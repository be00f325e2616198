/*
 * sharpyoung - numerical verification of sharp convolution inequalities of
 * Young type, their reverse forms, and the monotone-transport machinery
 * behind them.
 *
 * C API: opaque handles plus integer status codes. Every function returns
 * SY_OK on success; on failure the thread-local message from
 * sy_last_error() describes the problem. Handles are freed with their
 * matching *_free function; passing NULL to a *_free is a no-op.
 */
#ifndef SHARPYOUNG_H
#define SHARPYOUNG_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sy_status {
  SY_OK = 0,
  SY_ERR_DOMAIN = 1,    /* precondition violated (bad exponent, zero mass, ...) */
  SY_ERR_INVALID = 2,   /* malformed argument (null handle, bad sizes, ...) */
  SY_ERR_IO = 3,        /* file read/write or parse failure */
  SY_ERR_BUFFER = 4,    /* caller buffer too small */
  SY_ERR_INTERNAL = 5
} sy_status;

typedef enum sy_regime {
  SY_REGIME_CLASSICAL = 0,
  SY_REGIME_REVERSE = 1,
  SY_REGIME_BOUNDARY = 2
} sy_regime;

typedef enum sy_check_status {
  SY_CHECK_PASS = 0,
  SY_CHECK_FAIL = 1,
  SY_CHECK_DEGENERATE = 2
} sy_check_status;

typedef struct sy_triple sy_triple;
typedef struct sy_fn sy_fn;
typedef struct sy_transport sy_transport;
typedef struct sy_report sy_report;

/* Thread-local message for the most recent failing call in this thread. */
const char* sy_last_error(void);

const char* sy_version(void);

/* ---- exponent algebra ---------------------------------------------- */

/* t' with 1/t + 1/t' = 1; fails for t <= 0 and t == 1. */
sy_status sy_conjugate(double t, double* out);

/* Triple (p, q, r) with r = 1/(1/p + 1/q - 1); fails unless r is positive
 * and finite. */
sy_status sy_triple_make(double p, double q, sy_triple** out);
void sy_triple_free(sy_triple* t);
sy_status sy_triple_values(const sy_triple* t, double* p, double* q, double* r);
sy_status sy_triple_regime(const sy_triple* t, sy_regime* out);
sy_status sy_triple_conjugates(const sy_triple* t, double* pc, double* qc, double* rc);
/* (c, s) with c^2 + s^2 = 1; fails on the Boundary regime. */
sy_status sy_triple_rotation(const sy_triple* t, double* c, double* s);
/* (p/r, q/r, 1/r); swaps regimes; fails on Boundary. */
sy_status sy_triple_dual(const sy_triple* t, sy_triple** out);

/* ---- sharp constants ------------------------------------------------ */

sy_status sy_constant_ct(double t, double* out);
sy_status sy_constant_k(const sy_triple* t, double* out);
/* (C_p C_q / C_r)^dimension */
sy_status sy_constant_young(const sy_triple* t, int dimension, double* out);

/* ---- grid functions -------------------------------------------------- */

/* Nonnegative samples on the uniform grid [lo, hi] with n points. */
sy_status sy_fn_create(double lo, double hi, int n, const double* values, sy_fn** out);
sy_status sy_fn_gaussian(double amplitude, double rate, double center, double lo, double hi,
                         int n, sy_fn** out);
/* Strictly positive unit-mass mixture; deterministic per seed. */
sy_status sy_fn_random_density(uint64_t seed, double lo, double hi, int n, double smoothness,
                               sy_fn** out);
void sy_fn_free(sy_fn* f);
sy_status sy_fn_size(const sy_fn* f, int* n);
sy_status sy_fn_window(const sy_fn* f, double* lo, double* hi);
/* Copies min(n, size) samples into values. */
sy_status sy_fn_values(const sy_fn* f, double* values, int n);
sy_status sy_fn_integral(const sy_fn* f, double* out);
/* (\int f^p)^{1/p}, any p > 0. */
sy_status sy_fn_lp(const sy_fn* f, double p, double* out);
sy_status sy_fn_normalized(const sy_fn* f, sy_fn** out);
sy_status sy_fn_scaled(const sy_fn* f, double factor, sy_fn** out);
/* CSV (`x,value` header) or JSON ({lo,hi,n,values}) chosen by suffix. */
sy_status sy_fn_read(const char* path, sy_fn** out);
sy_status sy_fn_write(const sy_fn* f, const char* path);

/* ---- convolution ------------------------------------------------------ */

/* Quadrature convolution on [f.lo+g.lo, f.hi+g.hi]; grids must share one
 * step. truncation_note (optional) reports the mass lost to windowing. */
sy_status sy_convolve(const sy_fn* f, const sy_fn* g, sy_fn** out, double* truncation_note);
/* ||f * g||_r / (||f||_p ||g||_q) */
sy_status sy_young_ratio(const sy_fn* f, const sy_fn* g, const sy_triple* t, double* out);

/* ---- inequality checks ------------------------------------------------ */

/* Rotated bilinear form on an n x n tensor grid. */
sy_status sy_bilinear_form(const sy_fn* f, const sy_fn* g, const sy_triple* t, int n,
                           double* out);
/* Exact bilinear form for Gaussian inputs. */
sy_status sy_bilinear_gaussian(double amp_f, double rate_f, double center_f, double amp_g,
                               double rate_g, double center_g, const sy_triple* t, double* out);
/* Bound side of the mass-transport comparison inequality (Classical). */
sy_status sy_majorant_form(const sy_fn* F, const sy_fn* G, const sy_triple* t, int n,
                           double* out);

/* Reports: bilinear form vs K (\int f)^{1/p} (\int g)^{1/q} ... */
sy_status sy_verify_bilinear(const sy_fn* f, const sy_fn* g, const sy_triple* t, int n,
                             double tol, sy_report** out);
/* ... bilinear form of (f,g) vs majorant form of mass-matched (F,G) ... */
sy_status sy_verify_comparison(const sy_fn* f, const sy_fn* g, const sy_fn* F, const sy_fn* G,
                               const sy_triple* t, int n, double tol, sy_report** out);
/* ... and convolution ratio vs the sharp constant. */
sy_status sy_verify_convolution(const sy_fn* f, const sy_fn* g, const sy_triple* t, double tol,
                                sy_report** out);

void sy_report_free(sy_report* r);
sy_status sy_report_values(const sy_report* r, double* lhs, double* rhs, double* ratio);
sy_status sy_report_status(const sy_report* r, sy_check_status* out);
sy_status sy_report_regime(const sy_report* r, sy_regime* out);
/* Serializes the report; fails with SY_ERR_BUFFER when cap is too small and
 * stores the required size (including NUL) in needed. */
sy_status sy_report_json(const sy_report* r, char* buf, size_t cap, size_t* needed);

/* ---- monotone transport ------------------------------------------------ */

/* Quantile map u with int_{-inf}^{u(t)} f = int_{-inf}^{t} F on F's grid;
 * requires strictly positive densities with matching masses. */
sy_status sy_transport_build(const sy_fn* f, const sy_fn* F, sy_transport** out);
void sy_transport_free(sy_transport* t);
sy_status sy_transport_size(const sy_transport* t, int* n);
/* Row i: target point t, u(t), u'(t), finite-difference pushforward residual. */
sy_status sy_transport_row(const sy_transport* t, int i, double* point, double* u,
                           double* uprime, double* residual);
sy_status sy_transport_residual(const sy_transport* t, double* out);

/* ---- extremizers ------------------------------------------------------- */

/* Moment-matched Gaussian fit with one refinement pass; residual is the
 * relative L2 misfit. */
sy_status sy_fit_gaussian(const sy_fn* f, double* amplitude, double* rate, double* center,
                          double* residual);

typedef enum sy_perturbation {
  SY_PERTURB_SCALING = 0, /* exact invariance direction */
  SY_PERTURB_DILATION = 1,
  SY_PERTURB_QUARTIC = 2,
  SY_PERTURB_COSINE = 3,
  SY_PERTURB_SEXTIC = 4
} sy_perturbation;

/* Sharp-ratio scan along f -> normalize(f0 + eps * direction) through the
 * Gaussian equality pair; writes `steps` epsilons and ratios. */
sy_status sy_stationarity_scan(const sy_triple* t, sy_perturbation direction, int steps,
                               double eps_max, int n1d, int n2d, double* epsilons,
                               double* ratios);

#ifdef __cplusplus
}
#endif

#endif /* SHARPYOUNG_H */
