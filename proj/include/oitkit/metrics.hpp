#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "oitkit/model.hpp"

namespace oit {

// Class label per state index; std::nullopt marks an unlabeled state.
struct EquivalenceRelation {
  std::vector<std::optional<std::string>> labels;
};

struct LabeledEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::string label;

  friend auto operator<=>(const LabeledEdge&, const LabeledEdge&) = default;
};

struct RelationSet {
  std::vector<LabeledEdge> edges;
};

enum class DistanceKind { Discrete, L1, L2, Linf };

std::string to_string(DistanceKind kind);
DistanceKind parse_distance_kind(const std::string& text);

// Component order for mismatch weights: o, T_h, f, c, T_m, g.
struct DistanceSpec {
  DistanceKind kind = DistanceKind::L2;
  std::array<double, 6> weights{1, 1, 1, 1, 1, 1};

  // Throws Error(InvalidModel) for negative or all-zero weights.
  void check() const;
};

// volume_sigma(I) = sigma(g): sum of reflection measures over distinct
// reflection entries.
double volume(const InformationModel& model);

// sup T_m - sup T_h. Signed.
Seconds delay(const InformationModel& model);

// scope_sigma(I) = sigma(o).
double scope(const InformationModel& model);

// Mean noumenon measure over the atoms (counting measure on the index set).
double granularity(const InformationModel& model);

// Number of equivalence classes of R on the state set.
std::size_t variety(const InformationModel& model, const EquivalenceRelation& relation);

// sup T_h - inf T_h.
Seconds duration(const InformationModel& model);

// Count of interruptions over their total length. Kept as the exact pair so
// callers can compare rates without rounding.
struct SamplingRate {
  std::size_t count = 0;
  Seconds total;

  double hz() const;
};

// With no explicit gaps, the maximal gaps of T_h inside [inf, sup] are used.
SamplingRate sampling_rate(const InformationModel& model, std::optional<std::vector<Interval>> gaps = std::nullopt);

// Distinct labeled edges over distinct state values.
double aggregation(const InformationModel& model, const RelationSet& relations);

// Integral of copy carrier measures against copy weights; the copies list
// includes the model itself.
double coverage(const InformationModel& model);

// d(f, f~) between restored and true state values.
double distortion(const Value& restored, const Value& truth, const DistanceSpec& spec = {});
double distortion(std::span<const Value> restored, std::span<const Value> truth, const DistanceSpec& spec = {});

// Weighted sum of per-component distances between a model and a target.
struct MismatchBreakdown {
  std::array<double, 6> components{};
  double total = 0.0;
};
MismatchBreakdown mismatch_breakdown(const InformationModel& model, const InformationModel& target,
                                     const DistanceSpec& spec = {});
double mismatch(const InformationModel& model, const InformationModel& target, const DistanceSpec& spec = {});

}  // namespace oit
