#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace oit::physics {

struct PhysicalConstants {
  std::string profile;
  double h = 0;        // Planck constant, J s
  double C = 0;        // speed of light, m/s
  double k_b = 0;      // Boltzmann constant, J/K
  double G = 0;        // gravitational constant, m^3 / (kg s^2)
  double H0 = 0;       // Hubble parameter, 1/s
  double ly = 0;       // light-year, m
  double eV = 0;       // electronvolt, J

  // Throws Error(NonPositiveInput) if any constant is not > 0.
  void check() const;
};

// Rounded values used for the published back-of-envelope estimates.
PhysicalConstants paper_constants();
// CODATA 2018 values; H0 = 67.4 km/s/Mpc.
PhysicalConstants codata_constants();
// "paper" or "codata"; throws Error(Parse) for anything else.
PhysicalConstants constants_by_name(const std::string& name);

struct QuantumVolume {
  double exact = 0;        // floor(4 dE t / h) + 1
  double asymptotic = 0;   // 4 dE t / h
  double gap = 0;          // exact - asymptotic, in (0, 1]
  double transition_time = 0;  // h / (4 dE), the Margolus-Levitin time
  std::string profile;

  double relative_gap() const { return gap / asymptotic; }
};

// Distinguishable states a single quantum of mean energy dE passes through in
// time t. Both the counting value and its large-t asymptote are returned.
QuantumVolume quantum_volume(double delta_energy_j, double duration_s, const PhysicalConstants& c);

struct CarrierSpec {
  double mass_kg = 0;
  double radiation_energy_j = 0;
  std::optional<double> quantum_count;
  double duration_s = 0;
  double temperature_k = 0;

  void check() const;
};

enum class Regime {
  LargeT,    // 4 (m C^2 + E_r) t / h
  NearZero,  // N quanta, one qubit each
  Auto,      // NearZero when t < N h / (4 E), else LargeT
};

struct CarrierVolume {
  double qubits = 0;
  Regime regime = Regime::LargeT;
  double energy_j = 0;  // m C^2 + E_r
  std::string profile;
};

CarrierVolume carrier_volume(const CarrierSpec& spec, const PhysicalConstants& c, Regime regime);

// 4 C^2 / h: qubits one kilogram of matter carries per second.
struct UnitMassRate {
  double value = 0;
  double quoted = 5.3853e50;
  double relative_deviation = 0;  // (value - quoted) / quoted
  std::string note;
  std::string profile;
};
UnitMassRate unit_mass_rate(const PhysicalConstants& c);

// Minimum mass of one stored bit at temperature T: k_b T ln 2 / C^2.
double min_bit_mass(double temperature_k, const PhysicalConstants& c);
// Upper bound on bits per kilogram: C^2 / (k_b T ln 2). Applies to classical
// equilibrium memory only, not to quantum carriers.
double bits_per_kg(double temperature_k, const PhysicalConstants& c);
// Storage density of a device of the given mass holding the given bits.
double device_bits_per_kg(double device_mass_kg, double device_bits);

// Quanta in a mass made of identical particles.
double quanta_in_mass(double mass_kg, double particle_mass_kg);
// Photons carrying a total energy at a given energy per photon.
double photons_for_energy(double total_energy_j, double photon_energy_ev, const PhysicalConstants& c);

struct UniverseReport {
  double rho_c = 0;  // kg/m^3
  double volume_m3 = 0;
  double mass_kg = 0;
  double info_qubits = 0;
  double radius_ly = 0;
  double radius_m = 0;
  double age_s = 0;
  std::string profile;
};

inline constexpr double kDefaultUniverseRadiusLy = 4.56e10;
inline constexpr double kDefaultUniverseAgeS = 4.3e17;

// Flat-universe information budget: rho_c = 3 H0^2 / (8 pi G),
// V = 4/3 pi L^3, m = rho_c V, I = 4 m C^2 t / h.
UniverseReport universe_info(const PhysicalConstants& c, double radius_ly = kDefaultUniverseRadiusLy,
                             double age_s = kDefaultUniverseAgeS);

}  // namespace oit::physics
