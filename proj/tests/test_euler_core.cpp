#include <doctest.h>

#include <cmath>

#include "cgrp/euler.hpp"

using namespace cgrp;

namespace {
const GasParams gas{};  // gamma 1.4, SGC gas constant
}

TEST_CASE("conversion of the reference combustion-chamber state") {
  // rho = 1 kg/m^3, u = 250 m/s, p = 146820.4 Pa.
  // en = p/0.4 + rho u^2/2 = 367051 + 31250 = 398301 exactly.
  const PrimState w{1.0, 250.0, 146820.4};
  const ConsState q = prim_to_cons(w, gas);
  CHECK(q.rho == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(q.mom == doctest::Approx(250.0).epsilon(1e-14));
  CHECK(q.en == doctest::Approx(398301.0).epsilon(1e-12));

  const PrimState back = cons_to_prim(q, gas);
  CHECK(back.rho == doctest::Approx(w.rho).epsilon(1e-13));
  CHECK(back.u == doctest::Approx(w.u).epsilon(1e-13));
  CHECK(back.p == doctest::Approx(w.p).epsilon(1e-13));
}

TEST_CASE("flux of the reference state") {
  const PrimState w{1.0, 250.0, 146820.4};
  const ConsState f = euler_flux(w, gas);
  // (rho u, rho u^2 + p, u (en + p)) with en from the previous test.
  CHECK(f.rho == doctest::Approx(250.0).epsilon(1e-14));
  CHECK(f.mom == doctest::Approx(209320.4).epsilon(1e-13));
  CHECK(f.en == doctest::Approx(136280350.0).epsilon(1e-13));
}

TEST_CASE("sound speed and temperature") {
  const PrimState w{1.0, 250.0, 146820.4};
  // c = sqrt(1.4 * 146820.4 / 1)
  CHECK(sound_speed(w, gas) == doctest::Approx(453.3746).epsilon(1e-6));
  // Ideal gas law round trip p = rho R T.
  const double T = temperature(w, gas);
  CHECK(w.rho * gas.r_sgc * T == doctest::Approx(w.p).epsilon(1e-14));
}

TEST_CASE("round trip over a parameter sweep") {
  for (double rho : {0.01, 1.0, 5.3, 80.0}) {
    for (double u : {-900.0, -1.5, 0.0, 333.0}) {
      for (double p : {10.0, 1e5, 4.7e6}) {
        const PrimState w{rho, u, p};
        const ConsState q = prim_to_cons(w, gas);
        const PrimState back = cons_to_prim(q, gas);
        CHECK(back.rho == doctest::Approx(rho).epsilon(1e-13));
        CHECK(back.u == doctest::Approx(u).epsilon(1e-13));
        // Pressure recovery subtracts kinetic from total energy, so its
        // round-off floor scales with en, not with p itself.
        CHECK(std::abs(back.p - p) <= 1e-13 * q.en);
      }
    }
  }
}

TEST_CASE("invalid states are rejected") {
  CHECK_THROWS_AS(prim_to_cons(PrimState{-1.0, 0.0, 1e5}, gas),
                  NonPhysicalState);
  CHECK_THROWS_AS(prim_to_cons(PrimState{1.0, 0.0, 0.0}, gas),
                  NonPhysicalState);
  CHECK_THROWS_AS(prim_to_cons(PrimState{1.0, 0.0, -2.0}, gas),
                  NonPhysicalState);
  // Conserved state with internal energy <= 0.
  ConsState q{1.0, 100.0, 0.5 * 100.0 * 100.0 / 1.0};
  CHECK_THROWS_AS(cons_to_prim(q, gas), NonPhysicalState);
  // Kind classification: these are numerical failures, not validation.
  try {
    prim_to_cons(PrimState{-1.0, 0.0, 1e5}, gas);
  } catch (const SolverError& e) {
    CHECK(e.kind() == SolverError::Kind::numerical);
  }
}

TEST_CASE("conserved-state arithmetic") {
  const ConsState a{1.0, 2.0, 3.0};
  const ConsState b{0.5, -1.0, 10.0};
  const ConsState s = a + 2.0 * b;
  CHECK(s.rho == doctest::Approx(2.0));
  CHECK(s.mom == doctest::Approx(0.0));
  CHECK(s.en == doctest::Approx(23.0));
  const ConsState d = a - b;
  CHECK(d.rho == doctest::Approx(0.5));
  CHECK(d.mom == doctest::Approx(3.0));
  CHECK(d.en == doctest::Approx(-7.0));
}
