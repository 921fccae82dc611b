#pragma once

#include <span>
#include <string>
#include <vector>

#include "oitkit/model.hpp"

namespace oit {

enum class Severity { Error, Warning, Info };

struct Violation {
  std::string code;       // stable identifier, e.g. "empty-carriers"
  std::string postulate;  // the model requirement it breaks
  Severity severity = Severity::Error;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  // Valid iff no Error-severity violation was found.
  bool valid() const;
  bool has(const std::string& code) const;
};

// Checks every structural requirement of the sextuple model. Violations are
// returned as data; this never throws.
ValidationReport validate(const InformationModel& model);

// Throws Error(InvalidModel) carrying the first error-level violation.
void require_valid(const InformationModel& model);

// True iff distinct state values always map to distinct reflection values.
// Duplicate state values sharing one reflection are allowed.
bool is_restorable(const InformationModel& model);

// Inverse mapping: the state entry whose image is reflection `reflection_index`.
StateEntry restore(const InformationModel& model, std::size_t reflection_index);

// One atom per distinct (state value, reflection value) pair of the mapping.
std::vector<AtomicInfo> decompose_atomic(const InformationModel& model);

// Union of atoms. Throws Error(Overlap) when two atoms share a reflection entry.
InformationModel combine(std::span<const AtomicInfo> pieces);

// Serial transmission chain I_1 -> ... -> I_n collapsed to
// <o_1, T_h1, f_1, c_n, T_mn, g_n>. Each junction requires c_i = o_{i+1},
// T_mi = T_h(i+1) and g_i = f_{i+1} entry by entry.
InformationModel compose_chain(std::span<const InformationModel> chain);

// Same set of (state entry, reflection entry) pairs.
bool mapping_equivalent(const InformationModel& a, const InformationModel& b);

}  // namespace oit
