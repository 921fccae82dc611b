#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oitkit/error.hpp"
#include "oitkit/physics.hpp"

using namespace oit;
using namespace oit::physics;

namespace {

bool within_relative(double value, double expected, double tol) {
  return std::abs(value - expected) <= tol * std::abs(expected);
}

}  // namespace

TEST_CASE("constants profiles") {
  const auto p = paper_constants();
  CHECK(p.profile == "paper");
  CHECK(p.h == 6.6e-34);
  CHECK(p.C == 3.0e8);
  CHECK(p.k_b == 1.38e-23);
  CHECK(p.G == 6.7e-11);
  CHECK(p.H0 == 2.1e-18);
  const auto c = codata_constants();
  CHECK(c.profile == "codata");
  CHECK(c.h == 6.62607015e-34);
  CHECK(c.C == 299792458.0);
  CHECK(constants_by_name("codata").h == c.h);
  CHECK_THROWS_AS(constants_by_name("cgs"), Error);
  auto broken = p;
  broken.G = 0;
  CHECK_THROWS_AS(broken.check(), Error);
}

TEST_CASE("quantum volume at the origin and after one transition") {
  const auto p = paper_constants();
  const auto zero = quantum_volume(1e-20, 0.0, p);
  CHECK(zero.exact == 1.0);
  CHECK(zero.asymptotic == 0.0);
  CHECK(zero.gap == 1.0);
  CHECK(zero.profile == "paper");

  const auto one = quantum_volume(p.h / 4.0, 1.0, p);
  CHECK(one.exact == 2.0);
  CHECK(one.transition_time == doctest::Approx(1.0).epsilon(1e-15));

  CHECK_THROWS_AS(quantum_volume(0.0, 1.0, p), Error);
  CHECK_THROWS_AS(quantum_volume(1.0, -1.0, p), Error);
}

TEST_CASE("quantum volume is a unit step function of time") {
  const auto p = paper_constants();
  const double dE = 1e-20;
  const double dt = quantum_volume(dE, 0, p).transition_time;
  double previous = 0;
  for (int k = 0; k < 2000; ++k) {
    const double t = dt * k * 0.37;
    const auto q = quantum_volume(dE, t, p);
    CHECK(q.exact >= previous);
    CHECK(q.exact - previous <= 1.0);
    CHECK(q.exact == std::floor(q.exact));
    CHECK(q.exact >= q.asymptotic);
    CHECK(q.gap > 0.0);
    CHECK(q.gap <= 1.0);
    previous = q.exact;
  }
}

TEST_CASE("carrier volume regimes") {
  const auto p = paper_constants();
  CarrierSpec kg{.mass_kg = 1.0, .duration_s = 1.0};
  const auto big = carrier_volume(kg, p, Regime::LargeT);
  CHECK(within_relative(big.qubits, 4.0 * 9e16 / 6.6e-34, 1e-12));
  CHECK(within_relative(big.qubits, 5.45e50, 1e-3));

  CarrierSpec electrons{.mass_kg = 1.0, .quantum_count = 1e30, .duration_s = 0.0};
  CHECK(carrier_volume(electrons, p, Regime::NearZero).qubits == 1e30);
  CHECK(carrier_volume(electrons, p, Regime::Auto).regime == Regime::NearZero);

  CarrierSpec missing{.mass_kg = 1.0};
  CHECK_THROWS_AS(carrier_volume(missing, p, Regime::NearZero), Error);
  CHECK_THROWS_AS(carrier_volume(CarrierSpec{}, p, Regime::LargeT), Error);

  electrons.duration_s = 1.0;
  CHECK(carrier_volume(electrons, p, Regime::Auto).regime == Regime::LargeT);
}

TEST_CASE("carrier volume is linear in t, m and E_r") {
  const auto p = paper_constants();
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double m = u(rng), e = u(rng) * 1e16, t = u(rng), a = u(rng);
    const double base = carrier_volume({.mass_kg = m, .radiation_energy_j = e, .duration_s = t}, p, Regime::LargeT).qubits;
    const double scaled_t = carrier_volume({.mass_kg = m, .radiation_energy_j = e, .duration_s = a * t}, p, Regime::LargeT).qubits;
    CHECK(within_relative(scaled_t, a * base, 1e-12));
    const double only_m = carrier_volume({.mass_kg = m, .duration_s = t}, p, Regime::LargeT).qubits;
    const double only_am = carrier_volume({.mass_kg = a * m, .duration_s = t}, p, Regime::LargeT).qubits;
    CHECK(within_relative(only_am, a * only_m, 1e-12));
    const double only_e = carrier_volume({.radiation_energy_j = e, .duration_s = t}, p, Regime::LargeT).qubits;
    const double only_ae = carrier_volume({.radiation_energy_j = a * e, .duration_s = t}, p, Regime::LargeT).qubits;
    CHECK(within_relative(only_ae, a * only_e, 1e-12));
    CHECK(within_relative(base, only_m + only_e, 1e-12));
  }
}

TEST_CASE("N identical quanta add up") {
  const auto p = paper_constants();
  for (double n : {1.0, 2.0, 10.0, 1e6, 1e30}) {
    const double dE = 3e-19;
    const double t = 2.5;
    const double one = quantum_volume(dE, t, p).asymptotic;
    const double all = carrier_volume({.radiation_energy_j = n * dE, .duration_s = t}, p, Regime::LargeT).qubits;
    CHECK(within_relative(all, n * one, 1e-12));
  }
}

TEST_CASE("unit mass rate and its flagged deviation") {
  const auto r = unit_mass_rate(paper_constants());
  CHECK(within_relative(r.value, 4.0 * 3.0e8 * 3.0e8 / 6.6e-34, 1e-12));
  CHECK(within_relative(r.value, 5.45e50, 1e-3));
  CHECK(r.quoted == 5.3853e50);
  CHECK(r.relative_deviation > 0.01);
  CHECK(r.note.find("deviation") == 0);
  CHECK(r.note.find("5.3853e50") != std::string::npos);
}

TEST_CASE("bit mass") {
  const auto p = paper_constants();
  const double b = bits_per_kg(300, p);
  CHECK(within_relative(b, 3.1e37, 0.02));
  CHECK(within_relative(b, 3.0e8 * 3.0e8 / (1.38e-23 * 300 * std::log(2.0)), 1e-12));
  CHECK(within_relative(bits_per_kg(600, p), b / 2, 1e-15));
  CHECK(within_relative(min_bit_mass(300, p) * b, 1.0, 1e-15));
  CHECK(within_relative(device_bits_per_kg(1.6e-3, 1e12), 6.25e14, 1e-12));
  CHECK_THROWS_AS(bits_per_kg(0, p), Error);
}

TEST_CASE("counting quanta") {
  const auto p = paper_constants();
  CHECK(within_relative(quanta_in_mass(1.0, 9.1093837015e-31), 1.1e30, 0.01));
  CHECK(within_relative(photons_for_energy(5.6e35 * p.eV, 0.2e-3, p), 2.8e39, 1e-12));
}

TEST_CASE("universe budget under the rounded constants") {
  const auto u = universe_info(paper_constants());
  CHECK(within_relative(u.rho_c, 3 * 2.1e-18 * 2.1e-18 / (8 * std::numbers::pi * 6.7e-11), 1e-14));
  CHECK(within_relative(u.rho_c, 7.9e-27, 0.05));
  CHECK(within_relative(u.volume_m3, 3.35e80, 0.05));
  CHECK(within_relative(u.mass_kg, 2.6e54, 0.05));
  CHECK(within_relative(u.info_qubits, 6.1e122, 0.05));
  CHECK(u.profile == "paper");
  CHECK_THROWS_AS(universe_info(paper_constants(), -1.0), Error);
}

TEST_CASE("precise constants shift the budget smoothly") {
  const auto a = universe_info(paper_constants());
  const auto b = universe_info(codata_constants());
  CHECK(b.profile == "codata");
  CHECK(within_relative(b.rho_c, a.rho_c, 0.2));
  CHECK(within_relative(b.info_qubits, a.info_qubits, 0.2));
  const auto ra = unit_mass_rate(paper_constants());
  const auto rb = unit_mass_rate(codata_constants());
  CHECK(within_relative(rb.value, ra.value, 0.02));
}
