#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "oitkit/time_set.hpp"

namespace oit {

using ElementId = std::string;

// State value: a symbolic token, a numeric scalar, or a numeric vector.
// Equality is exact; numeric values also admit a metric (see metrics.hpp).
struct Symbol {
  std::string token;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};
using Value = std::variant<Symbol, double, std::vector<double>>;

bool is_numeric(const Value& v);
// Scalars flatten to a one-element vector. Throws for symbols.
std::vector<double> numeric_components(const Value& v);
std::string describe(const Value& v);

// One element of f(o, T_h) or g(c, T_m).
struct StateEntry {
  std::set<ElementId> subjects;
  TimeSet time;
  Value value;

  friend bool operator==(const StateEntry&, const StateEntry&) = default;
};

// Total order used for value-level grouping (subjects, time, value).
bool entry_less(const StateEntry& a, const StateEntry& b);

struct MeasureAssignment {
  std::map<ElementId, double> noumena;
  std::map<ElementId, double> carriers;
  std::map<std::size_t, double> reflections;

  friend bool operator==(const MeasureAssignment&, const MeasureAssignment&) = default;
};

// One copy of the information (the model itself is listed as one of them).
struct CopyRecord {
  double carrier_measure = 0.0;
  double weight = 1.0;

  friend bool operator==(const CopyRecord&, const CopyRecord&) = default;
};

struct MappingPair {
  std::size_t state = 0;
  std::size_t reflection = 0;

  friend auto operator<=>(const MappingPair&, const MappingPair&) = default;
};

// The sextuple <o, T_h, f, c, T_m, g> with an explicit mapping table.
struct InformationModel {
  std::set<ElementId> noumena;
  std::set<ElementId> carriers;
  TimeSet occurrence;
  TimeSet reflection;
  std::vector<StateEntry> states;
  std::vector<StateEntry> reflections;
  std::vector<MappingPair> mapping;
  std::optional<std::vector<CopyRecord>> copies;
  MeasureAssignment measures;
  // Author-asserted physical causation ("enabling"); never inferred.
  bool enabled = true;

  friend bool operator==(const InformationModel&, const InformationModel&) = default;
};

// Indivisible piece <o_l, T_hl, f_l, c_l, T_ml, g_l>: exactly one state and
// the reflection it maps to, with the measures that apply to them.
struct AtomicInfo {
  std::set<ElementId> noumena;
  TimeSet occurrence;
  StateEntry state;
  std::set<ElementId> carriers;
  TimeSet reflection_time;
  StateEntry reflection;

  std::map<ElementId, double> noumenon_measure;
  std::map<ElementId, double> carrier_measure;
  std::optional<double> reflection_measure;
};

}  // namespace oit
