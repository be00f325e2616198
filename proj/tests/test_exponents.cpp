#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "exponents.hpp"
#include "oracles.hpp"
#include "rng.hpp"

using namespace sharpyoung;

TEST_CASE("conjugate fixed points and signs") {
  CHECK(conjugate(2.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(conjugate(4.0 / 3.0) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(conjugate(0.5) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK_THROWS_AS(conjugate(1.0), std::domain_error);
  CHECK_THROWS_AS(conjugate(0.0), std::domain_error);
  CHECK_THROWS_AS(conjugate(-2.0), std::domain_error);
}

TEST_CASE("triple construction and regimes") {
  const auto t1 = YoungTriple::from_pq(4.0 / 3.0, 4.0 / 3.0);
  CHECK(t1.r() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(t1.regime() == Regime::Classical);

  const auto t2 = YoungTriple::from_pq(0.5, 0.5);
  CHECK(t2.r() == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(t2.regime() == Regime::Reverse);

  CHECK_THROWS_WITH_AS(YoungTriple::from_pq(2.0, 2.0), "YoungTriple: r not positive finite",
                       std::domain_error);
  // 1/(3/2) + 1/3 = 1 exactly, so r is infinite: rejected by construction.
  CHECK_THROWS_AS(YoungTriple::from_pq(1.5, 3.0), std::domain_error);

  // mixed exponents land in Boundary and are rejected downstream
  const auto mixed = YoungTriple::from_pq(0.5, 4.0);  // r = 0.8 < 1 < q
  CHECK(mixed.regime() == Regime::Boundary);
  CHECK_THROWS_AS(mixed.rotation(), std::domain_error);
  CHECK_THROWS_AS(mixed.dual(), std::domain_error);

  const auto unit = YoungTriple::from_pq(1.0, 2.0);
  CHECK(unit.regime() == Regime::Boundary);
}

TEST_CASE("rotation pair at the symmetric triples") {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const auto cl = YoungTriple::from_pq(4.0 / 3.0, 4.0 / 3.0).rotation();
  CHECK(cl.c == doctest::Approx(inv_sqrt2).epsilon(1e-14));
  CHECK(cl.s == doctest::Approx(inv_sqrt2).epsilon(1e-14));

  // (1/2, 1/2, 1/3): p' = q' = -1, r' = -1/2; same-sign ratios stay positive
  const auto rv = YoungTriple::from_pq(0.5, 0.5).rotation();
  CHECK(rv.c == doctest::Approx(inv_sqrt2).epsilon(1e-14));
  CHECK(rv.s == doctest::Approx(inv_sqrt2).epsilon(1e-14));
}

TEST_CASE("exponent identities over random triples") {
  Rng rng(20240901);
  for (auto regime : {Regime::Classical, Regime::Reverse}) {
    for (int i = 0; i < 1000; ++i) {
      const auto t = oracles::random_triple(rng, regime);
      CHECK(std::abs(1.0 / t.p() + 1.0 / t.q() - 1.0 - 1.0 / t.r()) < 1e-12);
      CHECK(std::abs(1.0 / t.p_conj() + 1.0 / t.q_conj() - 1.0 / t.r_conj()) < 1e-12);
      const auto rot = t.rotation();
      CHECK(std::abs(rot.c * rot.c + rot.s * rot.s - 1.0) < 1e-12);
      // conjugates share one sign away from Boundary
      CHECK(t.p_conj() * t.q_conj() > 0.0);
      CHECK(t.p_conj() * t.r_conj() > 0.0);
    }
  }
}

TEST_CASE("dual triple arithmetic, involution, rotation swap") {
  const auto t = YoungTriple::from_pq(4.0 / 3.0, 4.0 / 3.0);
  const auto d = t.dual();
  CHECK(d.p() == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(d.q() == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(d.r() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(d.regime() == Regime::Reverse);

  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    const auto a = oracles::random_triple(rng, i % 2 ? Regime::Classical : Regime::Reverse);
    const auto b = a.dual();
    CHECK(b.regime() == (a.regime() == Regime::Classical ? Regime::Reverse : Regime::Classical));
    const auto back = b.dual();
    CHECK(back.p() == doctest::Approx(a.p()).epsilon(1e-12));
    CHECK(back.q() == doctest::Approx(a.q()).epsilon(1e-12));
    CHECK(back.r() == doctest::Approx(a.r()).epsilon(1e-12));
    const auto ra = a.rotation(), rb = b.rotation();
    CHECK(rb.c == doctest::Approx(ra.s).epsilon(1e-12));
    CHECK(rb.s == doctest::Approx(ra.c).epsilon(1e-12));
  }
}
