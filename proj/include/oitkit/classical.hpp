#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "oitkit/metrics.hpp"
#include "oitkit/model.hpp"

namespace oit::classical {

// Minimum restorable volume of random-event information: the Shannon
// entropy -sum p_i log2 p_i in bits. Zero probabilities contribute nothing.
double shannon_min_volume(std::span<const double> p);

// Delay of a serial transmission chain is the sum of its link delays.
Seconds serial_chain_delay(std::span<const Seconds> delays);

// Radar range equation: R_max = (Pt Gt Ae sigma / ((4 pi)^2 Smin))^(1/4).
double radar_max_range(double transmit_power_w, double antenna_gain, double effective_aperture_m2,
                       double min_detectable_signal_w, double scope_sigma_m2);

// Rayleigh criterion: minimum resolvable angle l / a (radians).
double rayleigh_granularity(double wavelength_m, double aperture_width_m);

struct InvarianceCheck {
  double on_states = 0;
  double on_reflections = 0;
  bool equal = false;
};

// Transports R through the mapping to a relation Q on reflections and
// compares the class counts. Requires a restorable model.
InvarianceCheck variety_invariance_check(const InformationModel& model, const EquivalenceRelation& relation);

// Transports the labeled edges through the mapping and compares
// edges-per-element ratios on both sides. Requires a restorable model.
InvarianceCheck aggregation_invariance_check(const InformationModel& model, const RelationSet& relations);

struct Session {
  Seconds sup;
  Seconds inf;
};

// Mean of (sup - inf) over monitoring sessions: the collection device's MTBF.
double mtbf_duration(std::span<const Session> sessions);

// Lowest restorable sampling rate 1 / (2T) for a signal of period T.
double nyquist_min_rate(double period_s);
// rate >= 1 / (2T), boundary inclusive.
bool nyquist_restorable(double rate_hz, double period_s);
// Equivalent gap form: every gap is at most T/2 long.
bool nyquist_restorable(std::span<const Interval> gaps, Seconds period);

// Metcalfe's law: network value n^2.
std::uint64_t metcalfe_value(std::uint64_t nodes);

struct MetcalfeCheck {
  double max_scope = 0;
  double max_coverage = 0;
  std::uint64_t value = 0;
  bool equal = false;
};
// Compares scope * coverage of a network model against n^2.
MetcalfeCheck metcalfe_check(const InformationModel& network_model, std::uint64_t nodes);

// Average search length.
enum class SearchAlgorithm { Sequential, Bisection };

// (n + 1) / 2.
double asl_sequential(std::uint64_t n);
// Closed form ((n + 1) / n) log2(n + 1) - 1; only for perfect trees, n = 2^h - 1.
double asl_bisection(std::uint64_t n);
// Total comparisons over all n keys when bisecting a sorted list of n keys
// (middle element as root, recursively). Average is this over n.
std::uint64_t bisection_total_comparisons(std::uint64_t n);
double asl_bisection_general(std::uint64_t n);
// sum p_i c_i for an arbitrary probability vector and per-key comparison counts.
double asl_weighted(std::span<const double> p, std::span<const double> comparisons);
double asl(SearchAlgorithm algorithm, std::uint64_t n);

struct SearchSetup {
  std::vector<InformationModel> candidates;
  InformationModel target;
  DistanceSpec spec;
  double threshold = 0.0;
  SearchAlgorithm algorithm = SearchAlgorithm::Sequential;
  // Bisection only: ascending order key per candidate, and the target's key.
  std::vector<double> keys;
  double target_key = 0.0;
};

struct SearchResult {
  std::size_t index = 0;
  std::size_t comparisons = 0;
  double mismatch = 0.0;
  bool early_stop = false;
};

// Returns the candidate with minimum mismatch to the target (ties to the
// lowest index). Stops as soon as a mismatch <= threshold is met; otherwise
// every candidate is compared.
SearchResult search_min_mismatch(const SearchSetup& setup);

}  // namespace oit::classical
