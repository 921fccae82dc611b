#pragma once

// Small hand-built models used across the unit tests.

#include <string>
#include <vector>

#include "oitkit/model.hpp"

namespace oit::testing {

inline Seconds s(const char* text) { return Seconds::parse(text); }

inline StateEntry entry(std::set<ElementId> subjects, TimeSet time, Value value) {
  return {std::move(subjects), std::move(time), std::move(value)};
}

// f = g over n symbolic states, mapping k -> k, one bit per reflection.
inline InformationModel identity_model(std::size_t n) {
  InformationModel m;
  m.noumena = {"x"};
  m.carriers = {"x"};
  m.occurrence = TimeSet::interval(s("0"), s("1"));
  m.reflection = m.occurrence;
  for (std::size_t k = 0; k < n; ++k) {
    m.states.push_back(entry({"x"}, m.occurrence, Symbol{"v" + std::to_string(k)}));
    m.mapping.push_back({k, k});
    m.measures.reflections[k] = 1.0;
  }
  m.reflections = m.states;
  m.measures.noumena["x"] = 1.0;
  m.measures.carriers["x"] = 1.0;
  return m;
}

// States a, b, c with an explicit mapping table onto reflections r0..r(n-1).
inline InformationModel mapped_model(std::size_t states, std::size_t reflections,
                                     const std::vector<MappingPair>& mapping) {
  InformationModel m;
  m.noumena = {"o"};
  m.carriers = {"c"};
  m.occurrence = TimeSet::interval(s("0"), s("0.01"));
  m.reflection = TimeSet::interval(s("5"), s("10"));
  for (std::size_t k = 0; k < states; ++k) {
    m.states.push_back(entry({"o"}, m.occurrence, Symbol{"state-" + std::to_string(k)}));
  }
  for (std::size_t k = 0; k < reflections; ++k) {
    m.reflections.push_back(entry({"c"}, m.reflection, Symbol{"refl-" + std::to_string(k)}));
    m.measures.reflections[k] = 1.0;
  }
  m.mapping = mapping;
  m.measures.noumena["o"] = 1.0;
  m.measures.carriers["c"] = 1.0;
  return m;
}

}  // namespace oit::testing
