#include "oitkit/classical.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <tuple>

#include "oitkit/core.hpp"
#include "oitkit/error.hpp"

namespace oit::classical {

namespace {

struct EntryLess {
  bool operator()(const StateEntry& a, const StateEntry& b) const { return entry_less(a, b); }
};

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw Error(ErrorKind::NonPositiveInput, std::string(name) + " must be a positive finite number");
  }
}

void require_restorable(const InformationModel& model) {
  if (!is_restorable(model)) {
    throw Error(ErrorKind::NotRestorable, "invariance only holds for restorable information");
  }
}

std::vector<std::size_t> image_of_states(const InformationModel& model) {
  std::vector<std::size_t> image(model.states.size());
  for (const auto& [s, r] : model.mapping) image[s] = r;
  return image;
}

// Disjoint-set forest over reflection indices.
struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

double shannon_min_volume(std::span<const double> p) {
  if (p.empty()) throw Error(ErrorKind::EmptyInput, "probability vector is empty");
  double sum = 0.0;
  for (double pi : p) {
    if (pi < 0.0 || std::isnan(pi)) throw Error(ErrorKind::NegativeProbability, "probabilities must be nonnegative");
    sum += pi;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw Error(ErrorKind::NonNormalized, "probabilities sum to " + std::to_string(sum) + ", not 1");
  }
  double h = 0.0;
  for (double pi : p) {
    if (pi > 0.0) h -= pi * std::log2(pi);
  }
  return h;
}

Seconds serial_chain_delay(std::span<const Seconds> delays) {
  return std::accumulate(delays.begin(), delays.end(), Seconds{});
}

double radar_max_range(double transmit_power_w, double antenna_gain, double effective_aperture_m2,
                       double min_detectable_signal_w, double scope_sigma_m2) {
  require_positive(transmit_power_w, "transmit power");
  require_positive(antenna_gain, "antenna gain");
  require_positive(effective_aperture_m2, "effective aperture");
  require_positive(min_detectable_signal_w, "minimum detectable signal");
  require_positive(scope_sigma_m2, "reflection area");
  const double four_pi = 4.0 * std::numbers::pi;
  const double r4 = transmit_power_w * antenna_gain * effective_aperture_m2 * scope_sigma_m2 /
                    (four_pi * four_pi * min_detectable_signal_w);
  return std::sqrt(std::sqrt(r4));
}

double rayleigh_granularity(double wavelength_m, double aperture_width_m) {
  require_positive(wavelength_m, "wavelength");
  require_positive(aperture_width_m, "aperture width");
  return wavelength_m / aperture_width_m;
}

InvarianceCheck variety_invariance_check(const InformationModel& model, const EquivalenceRelation& relation) {
  require_restorable(model);
  InvarianceCheck out;
  out.on_states = static_cast<double>(variety(model, relation));

  // Q: reflections are equivalent when their preimages are R-equivalent.
  // Equal reflection entries are one element of g.
  const auto image = image_of_states(model);
  UnionFind q(model.reflections.size());
  std::map<std::string, std::size_t> representative;
  for (std::size_t s = 0; s < model.states.size(); ++s) {
    auto [it, inserted] = representative.emplace(*relation.labels[s], image[s]);
    if (!inserted) q.unite(it->second, image[s]);
  }
  std::map<StateEntry, std::size_t, EntryLess> by_value;
  for (std::size_t r = 0; r < model.reflections.size(); ++r) {
    auto [it, inserted] = by_value.emplace(model.reflections[r], r);
    if (!inserted) q.unite(it->second, r);
  }
  std::set<std::size_t> roots;
  for (std::size_t r = 0; r < model.reflections.size(); ++r) roots.insert(q.find(r));
  out.on_reflections = static_cast<double>(roots.size());
  out.equal = out.on_states == out.on_reflections;
  return out;
}

InvarianceCheck aggregation_invariance_check(const InformationModel& model, const RelationSet& relations) {
  if (model.states.empty()) throw Error(ErrorKind::EmptyStates, "aggregation needs a nonempty state set");
  require_restorable(model);
  InvarianceCheck out;
  out.on_states = aggregation(model, relations);

  const auto image = image_of_states(model);
  std::set<std::tuple<std::size_t, std::size_t, std::string>> transported;
  // Canonical index per distinct reflection value.
  std::map<StateEntry, std::size_t, EntryLess> canonical;
  for (std::size_t r = 0; r < model.reflections.size(); ++r) canonical.emplace(model.reflections[r], r);
  auto canon = [&](std::size_t r) { return canonical.at(model.reflections[r]); };
  for (const auto& e : relations.edges) {
    transported.emplace(canon(image[e.from]), canon(image[e.to]), e.label);
  }
  out.on_reflections = static_cast<double>(transported.size()) / static_cast<double>(canonical.size());
  out.equal = out.on_states == out.on_reflections;
  return out;
}

double mtbf_duration(std::span<const Session> sessions) {
  if (sessions.empty()) throw Error(ErrorKind::EmptyInput, "no monitoring sessions");
  Seconds total;
  for (const auto& s : sessions) {
    if (s.sup < s.inf) throw Error(ErrorKind::InvalidModel, "session ends (" + s.sup.to_string() + ") before it starts");
    total += s.sup - s.inf;
  }
  return total.to_double() / static_cast<double>(sessions.size());
}

double nyquist_min_rate(double period_s) {
  require_positive(period_s, "period");
  return 1.0 / (2.0 * period_s);
}

bool nyquist_restorable(double rate_hz, double period_s) {
  require_positive(rate_hz, "sampling rate");
  return rate_hz >= nyquist_min_rate(period_s);
}

bool nyquist_restorable(std::span<const Interval> gaps, Seconds period) {
  if (period <= Seconds{}) throw Error(ErrorKind::NonPositiveInput, "period must be positive");
  // |U| <= T/2  <=>  2|U| <= T, exact in nanoseconds.
  return std::all_of(gaps.begin(), gaps.end(), [&](const Interval& u) { return u.length() * 2 <= period; });
}

std::uint64_t metcalfe_value(std::uint64_t nodes) { return nodes * nodes; }

MetcalfeCheck metcalfe_check(const InformationModel& network_model, std::uint64_t nodes) {
  MetcalfeCheck out;
  out.max_scope = scope(network_model);
  out.max_coverage = coverage(network_model);
  out.value = metcalfe_value(nodes);
  out.equal = out.max_scope * out.max_coverage == static_cast<double>(out.value);
  return out;
}

double asl_sequential(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidN, "search needs n >= 1");
  return (static_cast<double>(n) + 1.0) / 2.0;
}

double asl_bisection(std::uint64_t n) {
  if (n == 0 || !std::has_single_bit(n + 1)) {
    throw Error(ErrorKind::InvalidN, "closed form needs a perfect tree, n = 2^h - 1; got n = " + std::to_string(n));
  }
  // log2(n + 1) = h is exact here, so ((n + 1) / n) h - 1 = ((n + 1) h - n) / n
  // can be formed in integers and rounded once.
  const auto h = static_cast<std::uint64_t>(std::countr_zero(n + 1));
  return static_cast<double>((n + 1) * h - n) / static_cast<double>(n);
}

std::uint64_t bisection_total_comparisons(std::uint64_t n) {
  // Sum of node depths (root = 1) over the middle-rooted tree of n keys.
  auto rec = [](auto&& self, std::uint64_t size, std::uint64_t depth) -> std::uint64_t {
    if (size == 0) return 0;
    const std::uint64_t left = (size - 1) / 2;
    const std::uint64_t right = size - 1 - left;
    return depth + self(self, left, depth + 1) + self(self, right, depth + 1);
  };
  return rec(rec, n, 1);
}

double asl_bisection_general(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidN, "search needs n >= 1");
  return static_cast<double>(bisection_total_comparisons(n)) / static_cast<double>(n);
}

double asl_weighted(std::span<const double> p, std::span<const double> comparisons) {
  if (p.size() != comparisons.size() || p.empty()) {
    throw Error(ErrorKind::DimensionMismatch, "need one probability per comparison count");
  }
  double sum = 0.0;
  double total_p = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0.0) throw Error(ErrorKind::NegativeProbability, "probabilities must be nonnegative");
    total_p += p[i];
    sum += p[i] * comparisons[i];
  }
  if (std::abs(total_p - 1.0) > 1e-12) throw Error(ErrorKind::NonNormalized, "probabilities must sum to 1");
  return sum;
}

double asl(SearchAlgorithm algorithm, std::uint64_t n) {
  return algorithm == SearchAlgorithm::Sequential ? asl_sequential(n) : asl_bisection(n);
}

SearchResult search_min_mismatch(const SearchSetup& setup) {
  const auto& cands = setup.candidates;
  const std::size_t n = cands.size();
  if (n == 0) throw Error(ErrorKind::EmptyCandidates, "no candidates to search");
  if (!(setup.threshold >= 0.0)) throw Error(ErrorKind::NonPositiveInput, "threshold must be nonnegative");
  setup.spec.check();

  std::vector<std::optional<double>> cache(n);
  auto measure = [&](std::size_t i) {
    if (!cache[i]) cache[i] = mismatch(cands[i], setup.target, setup.spec);
    return *cache[i];
  };

  SearchResult result;
  if (setup.algorithm == SearchAlgorithm::Bisection) {
    if (setup.keys.size() != n) throw Error(ErrorKind::InvalidModel, "bisection needs one order key per candidate");
    if (!std::is_sorted(setup.keys.begin(), setup.keys.end())) {
      throw Error(ErrorKind::InvalidModel, "bisection needs candidates in ascending key order");
    }
    std::size_t lo = 0;
    std::size_t hi = n;  // half-open
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo - 1) / 2;
      ++result.comparisons;
      const double d = measure(mid);
      if (d <= setup.threshold) return {mid, result.comparisons, d, true};
      if (setup.target_key < setup.keys[mid]) {
        hi = mid;
      } else if (setup.keys[mid] < setup.target_key) {
        lo = mid + 1;
      } else {
        break;
      }
    }
    // No candidate within threshold on the search path: every mismatch must
    // be compared to find the minimum.
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const double d = measure(i);
      if (d <= setup.threshold) return {i, i + 1, d, true};
    }
  }

  result.index = 0;
  result.mismatch = measure(0);
  for (std::size_t i = 1; i < n; ++i) {
    const double d = measure(i);
    if (d < result.mismatch) {
      result.mismatch = d;
      result.index = i;
    }
  }
  result.comparisons = n;
  result.early_stop = false;
  return result;
}

}  // namespace oit::classical
