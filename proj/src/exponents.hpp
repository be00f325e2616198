// Young exponent triples (p, q, r) with 1/p + 1/q = 1 + 1/r, their conjugates,
// rotation parameters and the dual-triple construction.
#ifndef SHARPYOUNG_EXPONENTS_HPP
#define SHARPYOUNG_EXPONENTS_HPP

#include <string>

namespace sharpyoung {

enum class Regime { Classical, Reverse, Boundary };

const char* to_string(Regime r);

// Conjugate exponent t' with 1/t + 1/t' = 1. Negative for t < 1.
// Throws std::domain_error for t <= 0 and for t == 1 (conjugate undefined).
double conjugate(double t);

struct RotationPair {
  double c;  // sqrt(r'/q')
  double s;  // sqrt(r'/p')
};

// Exponent triple constrained to 1/p + 1/q = 1 + 1/r by construction.
class YoungTriple {
 public:
  // Builds the triple from (p, q); r = 1/(1/p + 1/q - 1).
  // Throws std::domain_error unless p, q > 0 and 1/p + 1/q > 1.
  static YoungTriple from_pq(double p, double q);

  double p() const { return p_; }
  double q() const { return q_; }
  double r() const { return r_; }
  Regime regime() const { return regime_; }

  double p_conj() const { return conjugate(p_); }
  double q_conj() const { return conjugate(q_); }
  double r_conj() const { return conjugate(r_); }

  // (c, s) with c^2 + s^2 = 1. Throws on Boundary regime (mixed or unit
  // exponents give mixed-sign conjugates and the ratios lose meaning).
  RotationPair rotation() const;

  // (p/r, q/r, 1/r): swaps Classical and Reverse, involutive, and swaps the
  // rotation pair. Throws on Boundary regime.
  YoungTriple dual() const;

 private:
  YoungTriple(double p, double q, double r);
  double p_, q_, r_;
  Regime regime_;
};

}  // namespace sharpyoung

#endif
