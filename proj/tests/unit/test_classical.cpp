#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "builders.hpp"
#include "generators.hpp"
#include "oitkit/classical.hpp"
#include "oitkit/core.hpp"
#include "oitkit/error.hpp"
#include "oitkit/io.hpp"
#include "oitkit/metrics.hpp"
#include "oracles.hpp"

using namespace oit;
using namespace oit::classical;
using testing::mapped_model;
using testing::s;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Parse;
}

// Candidate whose only difference from the target is the reflection end time.
InformationModel candidate(const InformationModel& target, const char* end) {
  auto m = target;
  m.reflection = TimeSet::interval(s("5"), s(end));
  return m;
}

}  // namespace

TEST_CASE("entropy of dyadic distributions") {
  CHECK(shannon_min_volume(std::vector<double>{0.5, 0.5}) == 1.0);
  CHECK(shannon_min_volume(std::vector<double>{0.5, 0.25, 0.25}) == 1.5);
  CHECK(shannon_min_volume(std::vector<double>{1.0}) == 0.0);
  CHECK(shannon_min_volume(std::vector<double>(8, 0.125)) == 3.0);
  CHECK(shannon_min_volume(std::vector<double>{0.5, 0.5, 0.0}) == 1.0);
}

TEST_CASE("entropy input errors") {
  CHECK(kind_of([] { (void)shannon_min_volume(std::vector<double>{}); }) == ErrorKind::EmptyInput);
  CHECK(kind_of([] { (void)shannon_min_volume(std::vector<double>{0.5, 0.6}); }) == ErrorKind::NonNormalized);
  CHECK(kind_of([] { (void)shannon_min_volume(std::vector<double>{1.5, -0.5}); }) == ErrorKind::NegativeProbability);
}

TEST_CASE("entropy stays within its bounds") {
  std::mt19937_64 rng(31);
  std::exponential_distribution<double> e(1.0);
  std::uniform_int_distribution<int> len(1, 16);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<double> p(static_cast<std::size_t>(len(rng)));
    double total = 0;
    for (auto& x : p) total += x = e(rng);
    for (auto& x : p) x /= total;
    // Renormalise residual rounding onto the last entry.
    double head = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) head += p[i];
    p.back() = 1.0 - head;
    if (p.back() < 0) continue;
    const double h = shannon_min_volume(p);
    CHECK(h >= -1e-15);
    CHECK(h <= std::log2(double(p.size())) + 1e-12);
  }
}

TEST_CASE("serial chain delay") {
  const std::vector<Seconds> d{s("1"), s("2"), s("3")};
  CHECK(serial_chain_delay(d) == s("6"));
  CHECK(serial_chain_delay(std::vector<Seconds>{s("0.7")}) == s("0.7"));
}

TEST_CASE("serial chain delay matches the composed model") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    const auto chain = testing::random_chain(rng, 5);
    std::vector<Seconds> delays;
    for (const auto& link : chain) delays.push_back(delay(link));
    CHECK(serial_chain_delay(delays) == delay(compose_chain(chain)));
  }
}

TEST_CASE("radar range") {
  const double r = radar_max_range(1e6, 1e3, 1.0, 1e-13, 1.0);
  const double expected = std::pow(1e6 * 1e3 * 1.0 * 1.0 / (16.0 * std::numbers::pi * std::numbers::pi * 1e-13), 0.25);
  CHECK(r == doctest::Approx(expected).epsilon(1e-12));
  CHECK(r == doctest::Approx(8.92e4).epsilon(1e-3));
  CHECK(radar_max_range(1e6, 1e3, 1.0, 1e-13, 16.0) == doctest::Approx(2.0 * r).epsilon(1e-14));
  CHECK(kind_of([] { (void)radar_max_range(0, 1, 1, 1, 1); }) == ErrorKind::NonPositiveInput);
}

TEST_CASE("rayleigh granularity") {
  CHECK(rayleigh_granularity(500e-9, 5e-3) == doctest::Approx(1e-4).epsilon(1e-14));
  CHECK(rayleigh_granularity(500e-9, 10e-3) == rayleigh_granularity(500e-9, 5e-3) / 2);
  CHECK(rayleigh_granularity(1000e-9, 5e-3) == rayleigh_granularity(500e-9, 5e-3) * 2);
  CHECK(kind_of([] { (void)rayleigh_granularity(500e-9, 0); }) == ErrorKind::NonPositiveInput);
}

TEST_CASE("variety invariance") {
  const auto id = testing::identity_model(6);
  const auto check = variety_invariance_check(id, {{"a", "a", "b", "b", "c", "c"}});
  CHECK(check.on_states == 3);
  CHECK(check.on_reflections == 3);
  CHECK(check.equal);

  const auto lossy = mapped_model(2, 1, {{0, 0}, {1, 0}});
  CHECK(kind_of([&] { (void)variety_invariance_check(lossy, {{"a", "b"}}); }) == ErrorKind::NotRestorable);

  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = testing::random_restorable_model(rng);
    const auto r = testing::random_relation(rng, m, 4);
    const auto c = variety_invariance_check(m, r);
    CHECK(c.equal);
    CHECK(c.on_reflections == double(testing::transported_class_count(m, r)));
  }
}

TEST_CASE("aggregation invariance") {
  const auto id = testing::identity_model(3);
  const auto check = aggregation_invariance_check(id, {{{0, 1, "r"}, {1, 2, "r"}}});
  CHECK(check.equal);
  CHECK(check.on_states == doctest::Approx(2.0 / 3.0));

  const auto none = aggregation_invariance_check(id, {});
  CHECK(none.on_states == 0);
  CHECK(none.on_reflections == 0);
  CHECK(none.equal);

  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = testing::random_restorable_model(rng);
    const auto rels = testing::random_relations(rng, m, 12);
    const auto c = aggregation_invariance_check(m, rels);
    CHECK(c.equal);
    CHECK(c.on_reflections == testing::transported_edge_ratio(m, rels));
  }
}

TEST_CASE("mtbf") {
  const double hour = 3600;
  const std::vector<Session> sessions{{s("36000"), s("0")}, {s("72000"), s("0")}, {s("108000"), s("0")}};
  CHECK(mtbf_duration(sessions) == 20 * hour);
  CHECK(mtbf_duration(std::vector<Session>{{s("12.5"), s("2.5")}}) == 10.0);
  CHECK(kind_of([] { (void)mtbf_duration(std::vector<Session>{}); }) == ErrorKind::EmptyInput);
}

TEST_CASE("mtbf equals the mean duration of per-session models") {
  std::mt19937_64 rng(35);
  std::vector<Session> sessions;
  double sum = 0;
  for (int k = 0; k < 10; ++k) {
    const auto m = testing::random_restorable_model(rng);
    sessions.push_back({m.occurrence.sup(), m.occurrence.inf()});
    sum += duration(m).to_double();
  }
  CHECK(mtbf_duration(sessions) == doctest::Approx(sum / 10).epsilon(1e-15));
}

TEST_CASE("nyquist") {
  CHECK(nyquist_min_rate(0.5) == 1.0);
  CHECK(nyquist_restorable(1.0, 0.5));
  CHECK_FALSE(nyquist_restorable(0.999, 0.5));
  CHECK(nyquist_restorable(1.0 / (2.0 * 0.3), 0.3));
  const std::vector<Interval> half{{s("0"), s("0.15")}, {s("0.2"), s("0.35")}};
  CHECK(nyquist_restorable(half, s("0.3")));
  const std::vector<Interval> wide{{s("0"), s("0.150000001")}};
  CHECK_FALSE(nyquist_restorable(wide, s("0.3")));
}

TEST_CASE("metcalfe") {
  CHECK(metcalfe_value(4) == 16);
  CHECK(metcalfe_value(0) == 0);
  const auto net = io::load_model(OITKIT_FIXTURES_DIR "/network4.json");
  const auto c = metcalfe_check(net, 4);
  CHECK(c.max_scope == 4);
  CHECK(c.max_coverage == 4);
  CHECK(c.value == 16);
  CHECK(c.equal);
}

TEST_CASE("average search length") {
  CHECK(asl_sequential(7) == 4.0);
  CHECK(asl(SearchAlgorithm::Sequential, 1) == 1.0);
  CHECK(asl_bisection(7) == doctest::Approx(17.0 / 7.0).epsilon(1e-15));
  CHECK(asl(SearchAlgorithm::Bisection, 1) == 1.0);
  CHECK(kind_of([] { (void)asl_bisection(6); }) == ErrorKind::InvalidN);
  CHECK(kind_of([] { (void)asl_sequential(0); }) == ErrorKind::InvalidN);
}

TEST_CASE("bisection totals match an explicit tree for every n") {
  for (std::uint64_t n = 1; n <= 200; ++n) {
    CAPTURE(n);
    CHECK(bisection_total_comparisons(n) == testing::MiddleRootedTree(n).total_comparisons(n));
  }
  // Perfect trees: total = (n + 1) log2(n + 1) - n.
  for (std::uint64_t h = 1; h <= 10; ++h) {
    const std::uint64_t n = (std::uint64_t{1} << h) - 1;
    CHECK(bisection_total_comparisons(n) == (n + 1) * h - n);
  }
  CHECK(asl_bisection_general(7) == asl_bisection(7));
}

TEST_CASE("weighted search length") {
  CHECK(asl_weighted(std::vector<double>{0.5, 0.5}, std::vector<double>{1, 3}) == 2.0);
  CHECK(kind_of([] { (void)asl_weighted(std::vector<double>{1.0}, std::vector<double>{1, 2}); }) ==
        ErrorKind::DimensionMismatch);
}

TEST_CASE("min-mismatch search") {
  const auto target = mapped_model(1, 1, {{0, 0}});
  SearchSetup setup;
  setup.target = target;
  for (const char* end : {"13", "11", "14", "12", "15"}) setup.candidates.push_back(candidate(target, end));

  SUBCASE("nonzero minimum compares every candidate") {
    const auto r = search_min_mismatch(setup);
    CHECK(r.comparisons == 5);
    CHECK(r.index == 1);
    CHECK(r.mismatch == 1.0);
    CHECK_FALSE(r.early_stop);
  }
  SUBCASE("exact match stops early") {
    setup.candidates.insert(setup.candidates.begin() + 2, target);
    const auto r = search_min_mismatch(setup);
    CHECK(r.index == 2);
    CHECK(r.comparisons == 3);
    CHECK(r.mismatch == 0.0);
    CHECK(r.early_stop);
  }
  SUBCASE("threshold") {
    setup.threshold = 2.0;
    const auto r = search_min_mismatch(setup);
    CHECK(r.index == 1);
    CHECK(r.comparisons == 2);
  }
  SUBCASE("ties go to the lowest index") {
    setup.candidates.push_back(candidate(target, "11"));
    CHECK(search_min_mismatch(setup).index == 1);
  }
  SUBCASE("bisection falls back to n comparisons") {
    setup.algorithm = SearchAlgorithm::Bisection;
    setup.keys = {1, 2, 3, 4, 5};
    setup.target_key = 2;
    const auto r = search_min_mismatch(setup);
    CHECK(r.comparisons == 5);
    CHECK(r.index == 1);
  }
  SUBCASE("bisection finds an exact match on its path") {
    setup.algorithm = SearchAlgorithm::Bisection;
    setup.candidates[3] = target;
    setup.keys = {1, 2, 3, 4, 5};
    setup.target_key = 4;
    const auto r = search_min_mismatch(setup);
    CHECK(r.index == 3);
    CHECK(r.early_stop);
    CHECK(r.comparisons <= 3);
  }
  SUBCASE("no candidates") {
    setup.candidates.clear();
    CHECK(kind_of([&] { (void)search_min_mismatch(setup); }) == ErrorKind::EmptyCandidates);
  }
}
