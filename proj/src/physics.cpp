#include "oitkit/physics.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "oitkit/error.hpp"

namespace oit::physics {

namespace {

void require_positive(double v, const std::string& name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw Error(ErrorKind::NonPositiveInput, name + " must be a positive finite number");
  }
}

void require_nonnegative(double v, const std::string& name) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    throw Error(ErrorKind::NonPositiveInput, name + " must be a nonnegative finite number");
  }
}

}  // namespace

void PhysicalConstants::check() const {
  require_positive(h, "h");
  require_positive(C, "C");
  require_positive(k_b, "k_b");
  require_positive(G, "G");
  require_positive(H0, "H0");
  require_positive(ly, "ly");
  require_positive(eV, "eV");
}

PhysicalConstants paper_constants() {
  return {.profile = "paper",
          .h = 6.6e-34,
          .C = 3.0e8,
          .k_b = 1.38e-23,
          .G = 6.7e-11,
          .H0 = 2.1e-18,
          .ly = 9.46e15,
          .eV = 1.602176634e-19};
}

PhysicalConstants codata_constants() {
  constexpr double kMegaparsec = 3.0856775814913673e22;
  return {.profile = "codata",
          .h = 6.62607015e-34,
          .C = 299792458.0,
          .k_b = 1.380649e-23,
          .G = 6.67430e-11,
          .H0 = 67.4e3 / kMegaparsec,
          .ly = 9.4607304725808e15,
          .eV = 1.602176634e-19};
}

PhysicalConstants constants_by_name(const std::string& name) {
  if (name == "paper") return paper_constants();
  if (name == "codata") return codata_constants();
  throw Error(ErrorKind::Parse, "unknown constants profile '" + name + "' (expected paper or codata)");
}

QuantumVolume quantum_volume(double delta_energy_j, double duration_s, const PhysicalConstants& c) {
  c.check();
  require_positive(delta_energy_j, "average energy");
  require_nonnegative(duration_s, "reflection duration");
  QuantumVolume out;
  out.profile = c.profile;
  out.transition_time = c.h / (4.0 * delta_energy_j);
  out.asymptotic = 4.0 * delta_energy_j * duration_s / c.h;
  const double completed = std::floor(out.asymptotic);
  out.exact = completed + 1.0;
  out.gap = 1.0 - (out.asymptotic - completed);
  return out;
}

void CarrierSpec::check() const {
  require_nonnegative(mass_kg, "mass");
  require_nonnegative(radiation_energy_j, "radiation energy");
  require_nonnegative(duration_s, "duration");
  require_nonnegative(temperature_k, "temperature");
  if (quantum_count) require_nonnegative(*quantum_count, "quantum count");
  if (!(mass_kg > 0.0 || radiation_energy_j > 0.0 || quantum_count.value_or(0.0) > 0.0)) {
    throw Error(ErrorKind::NonPositiveInput, "carrier needs a positive mass, radiation energy or quantum count");
  }
}

CarrierVolume carrier_volume(const CarrierSpec& spec, const PhysicalConstants& c, Regime regime) {
  c.check();
  spec.check();
  CarrierVolume out;
  out.profile = c.profile;
  out.energy_j = spec.mass_kg * c.C * c.C + spec.radiation_energy_j;

  if (regime == Regime::Auto) {
    if (!spec.quantum_count) {
      throw Error(ErrorKind::MissingQuantumCount, "automatic regime selection needs the quantum count N");
    }
    // Both regimes agree (4 E t / h = N) at t = N h / (4 E).
    const double boundary = *spec.quantum_count * c.h / (4.0 * out.energy_j);
    regime = spec.duration_s < boundary ? Regime::NearZero : Regime::LargeT;
  }
  out.regime = regime;
  if (regime == Regime::NearZero) {
    if (!spec.quantum_count) {
      throw Error(ErrorKind::MissingQuantumCount, "the t ~ 0 regime counts quanta; quantum count N is required");
    }
    out.qubits = *spec.quantum_count;
  } else {
    out.qubits = 4.0 * out.energy_j * spec.duration_s / c.h;
  }
  return out;
}

UnitMassRate unit_mass_rate(const PhysicalConstants& c) {
  c.check();
  UnitMassRate out;
  out.profile = c.profile;
  out.value = 4.0 * c.C * c.C / c.h;
  out.relative_deviation = (out.value - out.quoted) / out.quoted;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "deviation: the commonly quoted 4C^2/h = 5.3853e50 is not reproduced by its own rounded constants "
                "(h = 6.6e-34, C = 3.0e8 give 5.4545e50); reporting the recomputed %.5g (%+.2f%% from the quoted value)",
                out.value, 100.0 * out.relative_deviation);
  out.note = buf;
  return out;
}

double min_bit_mass(double temperature_k, const PhysicalConstants& c) {
  c.check();
  require_positive(temperature_k, "temperature");
  return c.k_b * temperature_k * std::numbers::ln2 / (c.C * c.C);
}

double bits_per_kg(double temperature_k, const PhysicalConstants& c) {
  c.check();
  require_positive(temperature_k, "temperature");
  return c.C * c.C / (c.k_b * temperature_k * std::numbers::ln2);
}

double device_bits_per_kg(double device_mass_kg, double device_bits) {
  require_positive(device_mass_kg, "device mass");
  require_nonnegative(device_bits, "device bits");
  return device_bits / device_mass_kg;
}

double quanta_in_mass(double mass_kg, double particle_mass_kg) {
  require_nonnegative(mass_kg, "mass");
  require_positive(particle_mass_kg, "particle mass");
  return mass_kg / particle_mass_kg;
}

double photons_for_energy(double total_energy_j, double photon_energy_ev, const PhysicalConstants& c) {
  c.check();
  require_nonnegative(total_energy_j, "total energy");
  require_positive(photon_energy_ev, "photon energy");
  return total_energy_j / (photon_energy_ev * c.eV);
}

UniverseReport universe_info(const PhysicalConstants& c, double radius_ly, double age_s) {
  c.check();
  require_positive(radius_ly, "radius");
  require_positive(age_s, "age");
  UniverseReport out;
  out.profile = c.profile;
  out.radius_ly = radius_ly;
  out.age_s = age_s;
  out.radius_m = radius_ly * c.ly;
  out.rho_c = 3.0 * c.H0 * c.H0 / (8.0 * std::numbers::pi * c.G);
  out.volume_m3 = 4.0 / 3.0 * std::numbers::pi * out.radius_m * out.radius_m * out.radius_m;
  out.mass_kg = out.rho_c * out.volume_m3;
  out.info_qubits = 4.0 * out.mass_kg * c.C * c.C * age_s / c.h;
  return out;
}

}  // namespace oit::physics
