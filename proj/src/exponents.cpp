#include "exponents.hpp"

#include <cmath>
#include <stdexcept>

namespace sharpyoung {

const char* to_string(Regime r) {
  switch (r) {
    case Regime::Classical: return "Classical";
    case Regime::Reverse: return "Reverse";
    case Regime::Boundary: return "Boundary";
  }
  return "?";
}

double conjugate(double t) {
  if (!(t > 0.0)) throw std::domain_error("conjugate: exponent must be positive");
  if (t == 1.0) throw std::domain_error("conjugate undefined at boundary");
  return t / (t - 1.0);
}

YoungTriple::YoungTriple(double p, double q, double r) : p_(p), q_(q), r_(r) {
  if (p > 1.0 && q > 1.0 && r > 1.0)
    regime_ = Regime::Classical;
  else if (p < 1.0 && q < 1.0 && r < 1.0)
    regime_ = Regime::Reverse;
  else
    regime_ = Regime::Boundary;
}

YoungTriple YoungTriple::from_pq(double p, double q) {
  if (!(p > 0.0) || !(q > 0.0) || !std::isfinite(p) || !std::isfinite(q))
    throw std::domain_error("YoungTriple: p and q must be positive finite");
  const double excess = 1.0 / p + 1.0 / q - 1.0;
  if (!(excess > 0.0)) throw std::domain_error("YoungTriple: r not positive finite");
  return YoungTriple(p, q, 1.0 / excess);
}

RotationPair YoungTriple::rotation() const {
  if (regime_ == Regime::Boundary)
    throw std::domain_error("rotation: triple must be Classical or Reverse");
  // r', p', q' share one sign in either regime, so both ratios are positive.
  const double rp = r_conj();
  return RotationPair{std::sqrt(rp / q_conj()), std::sqrt(rp / p_conj())};
}

YoungTriple YoungTriple::dual() const {
  if (regime_ == Regime::Boundary)
    throw std::domain_error("dual: triple must be Classical or Reverse");
  return YoungTriple(p_ / r_, q_ / r_, 1.0 / r_);
}

}  // namespace sharpyoung
