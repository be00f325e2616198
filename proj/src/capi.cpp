// extern-C surface over the core library: opaque handles, status codes,
// a thread-local error message.
#include "sharpyoung/sharpyoung.h"

#include <cmath>
#include <cstring>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>

#include "constants.hpp"
#include "convolution.hpp"
#include "exponents.hpp"
#include "extremizer.hpp"
#include "grid_function.hpp"
#include "inequality.hpp"
#include "serialization.hpp"
#include "transport.hpp"

using namespace sharpyoung;

struct sy_triple {
  YoungTriple value;
};
struct sy_fn {
  GridFunction value;
};
struct sy_transport {
  TransportMap value;
};
struct sy_report {
  VerificationReport value;
};

namespace {

thread_local std::string g_last_error;

sy_status fail(sy_status code, const char* msg) {
  g_last_error = msg;
  return code;
}

// Maps core exceptions onto status codes.
template <typename Fn>
sy_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::domain_error& e) {
    return fail(SY_ERR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(SY_ERR_INVALID, e.what());
  } catch (const std::runtime_error& e) {
    return fail(SY_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SY_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SY_ERR_INTERNAL, e.what());
  }
}

sy_status require(bool ok, const char* what) {
  return ok ? SY_OK : fail(SY_ERR_INVALID, what);
}

sy_regime map_regime(Regime r) {
  switch (r) {
    case Regime::Classical: return SY_REGIME_CLASSICAL;
    case Regime::Reverse: return SY_REGIME_REVERSE;
    default: return SY_REGIME_BOUNDARY;
  }
}

sy_check_status map_status(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return SY_CHECK_PASS;
    case CheckStatus::Fail: return SY_CHECK_FAIL;
    default: return SY_CHECK_DEGENERATE;
  }
}

}  // namespace

extern "C" {

const char* sy_last_error(void) { return g_last_error.c_str(); }

const char* sy_version(void) { return "1.0.0"; }

sy_status sy_conjugate(double t, double* out) {
  if (sy_status s = require(out != nullptr, "null output"); s != SY_OK) return s;
  return guarded([&] {
    *out = conjugate(t);
    return SY_OK;
  });
}

sy_status sy_triple_make(double p, double q, sy_triple** out) {
  if (sy_status s = require(out != nullptr, "null output"); s != SY_OK) return s;
  return guarded([&] {
    *out = new sy_triple{YoungTriple::from_pq(p, q)};
    return SY_OK;
  });
}

void sy_triple_free(sy_triple* t) { delete t; }

sy_status sy_triple_values(const sy_triple* t, double* p, double* q, double* r) {
  if (sy_status s = require(t != nullptr, "null triple"); s != SY_OK) return s;
  if (p) *p = t->value.p();
  if (q) *q = t->value.q();
  if (r) *r = t->value.r();
  return SY_OK;
}

sy_status sy_triple_regime(const sy_triple* t, sy_regime* out) {
  if (sy_status s = require(t != nullptr && out != nullptr, "null argument"); s != SY_OK)
    return s;
  *out = map_regime(t->value.regime());
  return SY_OK;
}

sy_status sy_triple_conjugates(const sy_triple* t, double* pc, double* qc, double* rc) {
  if (sy_status s = require(t != nullptr, "null triple"); s != SY_OK) return s;
  return guarded([&] {
    const double a = t->value.p_conj(), b = t->value.q_conj(), c = t->value.r_conj();
    if (pc) *pc = a;
    if (qc) *qc = b;
    if (rc) *rc = c;
    return SY_OK;
  });
}

sy_status sy_triple_rotation(const sy_triple* t, double* c, double* s) {
  if (sy_status st = require(t != nullptr, "null triple"); st != SY_OK) return st;
  return guarded([&] {
    const RotationPair rot = t->value.rotation();
    if (c) *c = rot.c;
    if (s) *s = rot.s;
    return SY_OK;
  });
}

sy_status sy_triple_dual(const sy_triple* t, sy_triple** out) {
  if (sy_status s = require(t != nullptr && out != nullptr, "null argument"); s != SY_OK)
    return s;
  return guarded([&] {
    *out = new sy_triple{t->value.dual()};
    return SY_OK;
  });
}

sy_status sy_constant_ct(double t, double* out) {
  if (sy_status s = require(out != nullptr, "null output"); s != SY_OK) return s;
  return guarded([&] {
    *out = sharp_ct(t);
    return SY_OK;
  });
}

sy_status sy_constant_k(const sy_triple* t, double* out) {
  if (sy_status s = require(t != nullptr && out != nullptr, "null argument"); s != SY_OK)
    return s;
  return guarded([&] {
    *out = sharp_k(t->value);
    return SY_OK;
  });
}

sy_status sy_constant_young(const sy_triple* t, int dimension, double* out) {
  if (sy_status s = require(t != nullptr && out != nullptr, "null argument"); s != SY_OK)
    return s;
  return guarded([&] {
    *out = young_constant(t->value, dimension);
    return SY_OK;
  });
}

sy_status sy_fn_create(double lo, double hi, int n, const double* values, sy_fn** out) {
  if (sy_status s = require(values != nullptr && out != nullptr, "null argument"); s != SY_OK)
    return s;
  return guarded([&] {
    *out = new sy_fn{GridFunction(Grid::make(lo, hi, n), std::vector<double>(values, values + n))};
    return SY_OK;
  });
}

sy_status sy_fn_gaussian(double amplitude, double rate, double center, double lo, double hi,
                         int n, sy_fn** out) {
  if (sy_status s = require(out != nullptr, "null output"); s != SY_OK) return s;
  return guarded([&] {
    *out = new sy_fn{sample_gaussian(GaussianFn{amplitude, rate, center}, Grid::make(lo, hi, n))};
    return SY_OK;
  });
}

sy_status sy_fn_random_density(uint64_t seed, double lo, double hi, int n, double smoothness,
                               sy_fn** out) {
  if (sy_status s = require(out != nullptr, "null output"); s != SY_OK) return s;
  return guarded([&] {
    *out = new sy_fn{random_density(seed, Grid::make(lo, hi, n), smoothness).fn};
    return SY_OK;
  });
}

void sy_fn_free(sy_fn* f) { delete f; }

sy_status sy_fn_size(const sy_fn* f, int* n) {
  if (sy_status s = require(f != nullptr && n != nullptr, "null argument"); s != SY_OK) return s;
  *n = f->value.size();
  return SY_OK;
}

sy_status sy_fn_window(const sy_fn* f, double* lo, double* hi) {
  if (sy_status s = require(f != nullptr, "null function"); s != SY_OK) return s;
  if (lo) *lo = f->value.grid().lo;
  if (hi) *hi = f->value.grid().hi;
  return SY_OK;
}

sy_status sy_fn_values(const sy_fn* f, double* values, int n) {
  if (sy_status s = require(f != nullptr && values != nullptr, "null argument"); s != SY_OK)
    return s;
  const int m = std::min(n, f->value.size());
  std::memcpy(values, f->value.values().data(), sizeof(double) * m);
  return SY_OK;
}

sy_status sy_fn_integral(const sy_fn* f, double* out) {
  if (sy_status s = require(f != nullptr && out != nullptr, "null argument"); s != SY_OK)
    return s;
  *out = integrate(f->value);
  return SY_OK;
}

sy_status sy_fn_lp(const sy_fn* f, double p, double* out) {
  if (sy_status s = require(f != nullptr && out != nullptr, "null argument"); s != SY_OK)
    return s;
  return guarded([&] {
    *out = p_functional(f->value, p);
    return SY_OK;
  });
}

sy_status sy_fn_normalized(const sy_fn* f, sy_fn** out) {
  if (sy_status s = require(f != nullptr && out != nullptr, "null argument"); s != SY_OK)
    return s;
  return guarded([&] {
    *out = new sy_fn{normalized(f->value)};
    return SY_OK;
  });
}

sy_status sy_fn_scaled(const sy_fn* f, double factor, sy_fn** out) {
  if (sy_status s = require(f != nullptr && out != nullptr, "null argument"); s != SY_OK)
    return s;
  return guarded([&] {
    *out = new sy_fn{scaled(f->value, factor)};
    return SY_OK;
  });
}

sy_status sy_fn_read(const char* path, sy_fn** out) {
  if (sy_status s = require(path != nullptr && out != nullptr, "null argument"); s != SY_OK)
    return s;
  return guarded([&] {
    *out = new sy_fn{read_function_file(path)};
    return SY_OK;
  });
}

sy_status sy_fn_write(const sy_fn* f, const char* path) {
  if (sy_status s = require(f != nullptr && path != nullptr, "null argument"); s != SY_OK)
    return s;
  return guarded([&] {
    write_function_file(f->value, path);
    return SY_OK;
  });
}

sy_status sy_convolve(const sy_fn* f, const sy_fn* g, sy_fn** out, double* truncation_note) {
  if (sy_status s = require(f != nullptr && g != nullptr && out != nullptr, "null argument");
      s != SY_OK)
    return s;
  return guarded([&] {
    ConvolutionResult conv = convolve_direct(f->value, g->value);
    if (truncation_note) *truncation_note = conv.truncation_note;
    *out = new sy_fn{std::move(conv.result)};
    return SY_OK;
  });
}

sy_status sy_young_ratio(const sy_fn* f, const sy_fn* g, const sy_triple* t, double* out) {
  if (sy_status s = require(f && g && t && out, "null argument"); s != SY_OK) return s;
  return guarded([&] {
    *out = young_ratio(f->value, g->value, t->value);
    return SY_OK;
  });
}

sy_status sy_bilinear_form(const sy_fn* f, const sy_fn* g, const sy_triple* t, int n,
                           double* out) {
  if (sy_status s = require(f && g && t && out, "null argument"); s != SY_OK) return s;
  return guarded([&] {
    *out = bilinear_form(f->value, g->value, t->value, n);
    return SY_OK;
  });
}

sy_status sy_bilinear_gaussian(double amp_f, double rate_f, double center_f, double amp_g,
                               double rate_g, double center_g, const sy_triple* t, double* out) {
  if (sy_status s = require(t != nullptr && out != nullptr, "null argument"); s != SY_OK)
    return s;
  return guarded([&] {
    *out = gaussian_closed_form(GaussianFn{amp_f, rate_f, center_f},
                                GaussianFn{amp_g, rate_g, center_g}, t->value);
    return SY_OK;
  });
}

sy_status sy_majorant_form(const sy_fn* F, const sy_fn* G, const sy_triple* t, int n,
                           double* out) {
  if (sy_status s = require(F && G && t && out, "null argument"); s != SY_OK) return s;
  return guarded([&] {
    *out = majorant_form(F->value, G->value, t->value, n);
    return SY_OK;
  });
}

sy_status sy_verify_bilinear(const sy_fn* f, const sy_fn* g, const sy_triple* t, int n,
                             double tol, sy_report** out) {
  if (sy_status s = require(f && g && t && out, "null argument"); s != SY_OK) return s;
  return guarded([&] {
    *out = new sy_report{verify_bilinear(f->value, g->value, t->value, n, tol)};
    return SY_OK;
  });
}

sy_status sy_verify_comparison(const sy_fn* f, const sy_fn* g, const sy_fn* F, const sy_fn* G,
                               const sy_triple* t, int n, double tol, sy_report** out) {
  if (sy_status s = require(f && g && F && G && t && out, "null argument"); s != SY_OK) return s;
  return guarded([&] {
    *out = new sy_report{verify_comparison(f->value, g->value, F->value, G->value, t->value, n, tol)};
    return SY_OK;
  });
}

sy_status sy_verify_convolution(const sy_fn* f, const sy_fn* g, const sy_triple* t, double tol,
                                sy_report** out) {
  if (sy_status s = require(f && g && t && out, "null argument"); s != SY_OK) return s;
  return guarded([&] {
    *out = new sy_report{verify_convolution(f->value, g->value, t->value, tol)};
    return SY_OK;
  });
}

void sy_report_free(sy_report* r) { delete r; }

sy_status sy_report_values(const sy_report* r, double* lhs, double* rhs, double* ratio) {
  if (sy_status s = require(r != nullptr, "null report"); s != SY_OK) return s;
  if (lhs) *lhs = r->value.lhs;
  if (rhs) *rhs = r->value.rhs;
  if (ratio) *ratio = r->value.ratio;
  return SY_OK;
}

sy_status sy_report_status(const sy_report* r, sy_check_status* out) {
  if (sy_status s = require(r != nullptr && out != nullptr, "null argument"); s != SY_OK)
    return s;
  *out = map_status(r->value.status);
  return SY_OK;
}

sy_status sy_report_regime(const sy_report* r, sy_regime* out) {
  if (sy_status s = require(r != nullptr && out != nullptr, "null argument"); s != SY_OK)
    return s;
  *out = map_regime(r->value.regime);
  return SY_OK;
}

sy_status sy_report_json(const sy_report* r, char* buf, size_t cap, size_t* needed) {
  if (sy_status s = require(r != nullptr && buf != nullptr, "null argument"); s != SY_OK)
    return s;
  return guarded([&] {
    const std::string json = report_to_json(r->value);
    if (needed) *needed = json.size() + 1;
    if (json.size() + 1 > cap) return fail(SY_ERR_BUFFER, "report buffer too small");
    std::memcpy(buf, json.c_str(), json.size() + 1);
    return SY_OK;
  });
}

sy_status sy_transport_build(const sy_fn* f, const sy_fn* F, sy_transport** out) {
  if (sy_status s = require(f && F && out, "null argument"); s != SY_OK) return s;
  return guarded([&] {
    *out = new sy_transport{monotone_map(f->value, F->value)};
    return SY_OK;
  });
}

void sy_transport_free(sy_transport* t) { delete t; }

sy_status sy_transport_size(const sy_transport* t, int* n) {
  if (sy_status s = require(t != nullptr && n != nullptr, "null argument"); s != SY_OK) return s;
  *n = static_cast<int>(t->value.values().size());
  return SY_OK;
}

sy_status sy_transport_row(const sy_transport* t, int i, double* point, double* u,
                           double* uprime, double* residual) {
  if (sy_status s = require(t != nullptr, "null transport"); s != SY_OK) return s;
  if (i < 0 || i >= static_cast<int>(t->value.values().size()))
    return fail(SY_ERR_INVALID, "row index out of range");
  if (point) *point = t->value.domain().x(i);
  if (u) *u = t->value.values()[i];
  if (uprime) *uprime = t->value.derivatives()[i];
  if (residual) *residual = t->value.pointwise_residuals()[i];
  return SY_OK;
}

sy_status sy_transport_residual(const sy_transport* t, double* out) {
  if (sy_status s = require(t != nullptr && out != nullptr, "null argument"); s != SY_OK)
    return s;
  *out = t->value.residual();
  return SY_OK;
}

sy_status sy_fit_gaussian(const sy_fn* f, double* amplitude, double* rate, double* center,
                          double* residual) {
  if (sy_status s = require(f != nullptr, "null function"); s != SY_OK) return s;
  return guarded([&] {
    const GaussianFit fit = fit_gaussian(f->value);
    if (amplitude) *amplitude = fit.amplitude;
    if (rate) *rate = fit.rate;
    if (center) *center = fit.center;
    if (residual) *residual = fit.residual;
    return SY_OK;
  });
}

sy_status sy_stationarity_scan(const sy_triple* t, sy_perturbation direction, int steps,
                               double eps_max, int n1d, int n2d, double* epsilons,
                               double* ratios) {
  if (sy_status s = require(t && epsilons && ratios, "null argument"); s != SY_OK) return s;
  return guarded([&] {
    PerturbationKind kind;
    switch (direction) {
      case SY_PERTURB_SCALING: kind = PerturbationKind::Scaling; break;
      case SY_PERTURB_DILATION: kind = PerturbationKind::Dilation; break;
      case SY_PERTURB_QUARTIC: kind = PerturbationKind::Quartic; break;
      case SY_PERTURB_COSINE: kind = PerturbationKind::Cosine; break;
      case SY_PERTURB_SEXTIC: kind = PerturbationKind::Sextic; break;
      default: return fail(SY_ERR_INVALID, "unknown perturbation kind");
    }
    const double w = 8.0 / std::sqrt(t->value.p());
    const Grid grid = Grid::make(-w, w, n1d);
    const GridFunction dir = perturbation_direction(kind, t->value, grid);
    const auto scan = stationarity_scan(t->value, dir, steps, eps_max, n2d);
    for (size_t i = 0; i < scan.size(); ++i) {
      epsilons[i] = scan[i].epsilon;
      ratios[i] = scan[i].ratio;
    }
    return SY_OK;
  });
}

}  // extern "C"
