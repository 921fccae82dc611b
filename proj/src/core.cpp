#include "oitkit/core.hpp"

#include <algorithm>
#include <map>

#include "oitkit/error.hpp"

namespace oit {

namespace {

struct EntryLess {
  bool operator()(const StateEntry& a, const StateEntry& b) const { return entry_less(a, b); }
};

constexpr const char* kNonempty = "noumena and carriers exist";
constexpr const char* kTimes = "states lie within their time windows";
constexpr const char* kStates = "state and reflection sets are well formed";
constexpr const char* kMapping = "mapping is a total surjective function";
constexpr const char* kMeasure = "measure: nonnegative and resolvable";

void check_entries(const std::vector<StateEntry>& entries, const std::set<ElementId>& owners,
                   const TimeSet& window, const std::string& what, const std::string& owner_name,
                   std::vector<Violation>& out) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    const std::string where = what + "[" + std::to_string(i) + "]";
    if (e.subjects.empty()) {
      out.push_back({"empty-subjects", kStates, Severity::Error, where + " has no subjects"});
    }
    for (const auto& id : e.subjects) {
      if (!owners.contains(id)) {
        out.push_back({"unresolved-subject", kStates, Severity::Error,
                       where + " references '" + id + "' which is not among the " + owner_name});
      }
    }
    if (!window.contains(e.time)) {
      out.push_back({"time-outside-window", kTimes, Severity::Error,
                     where + " time is not contained in the " + (what == "states" ? "occurrence" : "reflection") +
                         " time set"});
    }
  }
}

}  // namespace

bool ValidationReport::valid() const {
  return std::none_of(violations.begin(), violations.end(),
                      [](const Violation& v) { return v.severity == Severity::Error; });
}

bool ValidationReport::has(const std::string& code) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.code == code; });
}

ValidationReport validate(const InformationModel& m) {
  std::vector<Violation> out;

  if (m.noumena.empty()) out.push_back({"empty-noumena", kNonempty, Severity::Error, "noumena set is empty"});
  if (m.carriers.empty()) out.push_back({"empty-carriers", kNonempty, Severity::Error, "carrier set is empty"});
  if (m.states.empty()) out.push_back({"empty-states", kStates, Severity::Error, "state set f is empty"});
  if (m.reflections.empty()) {
    out.push_back({"empty-reflections", kStates, Severity::Error, "reflection set g is empty"});
  }

  check_entries(m.states, m.noumena, m.occurrence, "states", "noumena", out);
  check_entries(m.reflections, m.carriers, m.reflection, "reflections", "carriers", out);

  std::vector<int> state_hits(m.states.size(), 0);
  std::vector<int> reflection_hits(m.reflections.size(), 0);
  bool indices_ok = true;
  for (const auto& [s, r] : m.mapping) {
    if (s >= m.states.size() || r >= m.reflections.size()) {
      indices_ok = false;
      out.push_back({"mapping-index-out-of-range", kMapping, Severity::Error,
                     "mapping pair (" + std::to_string(s) + " -> " + std::to_string(r) + ") does not resolve"});
      continue;
    }
    ++state_hits[s];
    ++reflection_hits[r];
  }
  for (std::size_t s = 0; s < state_hits.size(); ++s) {
    if (state_hits[s] == 0) {
      out.push_back({"mapping-not-total", kMapping, Severity::Error,
                     "state " + std::to_string(s) + " is not mapped to any reflection"});
    } else if (state_hits[s] > 1) {
      out.push_back({"mapping-not-a-function", kMapping, Severity::Error,
                     "state " + std::to_string(s) + " appears " + std::to_string(state_hits[s]) + " times in the mapping"});
    }
  }
  for (std::size_t r = 0; r < reflection_hits.size(); ++r) {
    if (reflection_hits[r] == 0) {
      out.push_back({"not-surjective", kMapping, Severity::Error,
                     "reflection " + std::to_string(r) + " is not the image of any state"});
    }
  }

  // Equal state values are one element of f and must share one image value.
  if (indices_ok) {
    std::map<StateEntry, std::size_t, EntryLess> image_of;
    std::set<StateEntry, EntryLess> duplicated;
    for (const auto& [s, r] : m.mapping) {
      auto [it, inserted] = image_of.emplace(m.states[s], r);
      if (inserted) continue;
      duplicated.insert(m.states[s]);
      if (!(m.reflections[it->second] == m.reflections[r])) {
        out.push_back({"mapping-not-well-defined", kMapping, Severity::Error,
                       "state " + std::to_string(s) + " equals an earlier state but maps to a different reflection value"});
      }
    }
    if (!duplicated.empty()) {
      out.push_back({"duplicate-state-values", kStates, Severity::Info,
                     std::to_string(duplicated.size()) + " state value(s) occur more than once; treated as one value"});
    }
  }

  for (const auto& [id, v] : m.measures.noumena) {
    if (!(v >= 0.0)) out.push_back({"negative-measure", kMeasure, Severity::Error, "noumenon '" + id + "' has a negative measure"});
    if (!m.noumena.contains(id)) out.push_back({"unresolved-measure", kMeasure, Severity::Error, "measure for unknown noumenon '" + id + "'"});
  }
  for (const auto& [id, v] : m.measures.carriers) {
    if (!(v >= 0.0)) out.push_back({"negative-measure", kMeasure, Severity::Error, "carrier '" + id + "' has a negative measure"});
    if (!m.carriers.contains(id)) out.push_back({"unresolved-measure", kMeasure, Severity::Error, "measure for unknown carrier '" + id + "'"});
  }
  for (const auto& [idx, v] : m.measures.reflections) {
    if (!(v >= 0.0)) {
      out.push_back({"negative-measure", kMeasure, Severity::Error, "reflection " + std::to_string(idx) + " has a negative measure"});
    }
    if (idx >= m.reflections.size()) {
      out.push_back({"unresolved-measure", kMeasure, Severity::Error, "measure for unknown reflection " + std::to_string(idx)});
    }
  }
  if (m.copies) {
    for (std::size_t i = 0; i < m.copies->size(); ++i) {
      const auto& c = (*m.copies)[i];
      if (!(c.carrier_measure >= 0.0) || !(c.weight >= 0.0)) {
        out.push_back({"negative-copy", kMeasure, Severity::Error, "copy " + std::to_string(i) + " has a negative measure or weight"});
      }
    }
  }

  if (m.reflection.sup() < m.occurrence.sup()) {
    out.push_back({"negative-delay", kMapping, Severity::Warning,
                   "reflection ends before occurrence (delay " + (m.reflection.sup() - m.occurrence.sup()).to_string() +
                       " s); causation implies a nonnegative delay"});
  }
  if (!m.enabled) {
    out.push_back({"not-enabled", kMapping, Severity::Warning,
                   "model is not marked as enabling: a surjective map without physical causation"});
  }

  return {std::move(out)};
}

void require_valid(const InformationModel& model) {
  const auto report = validate(model);
  for (const auto& v : report.violations) {
    if (v.severity == Severity::Error) {
      throw Error(ErrorKind::InvalidModel, v.code + " (" + v.postulate + "): " + v.message);
    }
  }
}

bool is_restorable(const InformationModel& model) {
  require_valid(model);
  // Each reflection value must have exactly one preimage value.
  std::map<StateEntry, const StateEntry*, EntryLess> preimage;
  for (const auto& [s, r] : model.mapping) {
    auto [it, inserted] = preimage.emplace(model.reflections[r], &model.states[s]);
    if (!inserted && !(*it->second == model.states[s])) return false;
  }
  return true;
}

StateEntry restore(const InformationModel& model, std::size_t reflection_index) {
  if (!is_restorable(model)) {
    throw Error(ErrorKind::NotRestorable, "two distinct state values share a reflection value; no inverse exists");
  }
  if (reflection_index >= model.reflections.size()) {
    throw Error(ErrorKind::UnknownIndex, "reflection index " + std::to_string(reflection_index) + " out of range (" +
                                             std::to_string(model.reflections.size()) + " reflections)");
  }
  for (const auto& [s, r] : model.mapping) {
    if (r == reflection_index) return model.states[s];
  }
  // Unreachable for a valid (surjective) model.
  throw Error(ErrorKind::InvalidModel, "reflection " + std::to_string(reflection_index) + " has no preimage");
}

std::vector<AtomicInfo> decompose_atomic(const InformationModel& model) {
  require_valid(model);

  auto restrict_to = [](const std::map<ElementId, double>& all, const std::set<ElementId>& keys) {
    std::map<ElementId, double> out;
    for (const auto& k : keys) {
      if (auto it = all.find(k); it != all.end()) out.emplace(k, it->second);
    }
    return out;
  };

  // First reflection index carrying a given reflection value.
  std::map<StateEntry, std::size_t, EntryLess> first_index;
  for (std::size_t r = 0; r < model.reflections.size(); ++r) first_index.emplace(model.reflections[r], r);

  std::set<std::pair<StateEntry, StateEntry>, decltype([](const auto& a, const auto& b) {
             if (entry_less(a.first, b.first)) return true;
             if (entry_less(b.first, a.first)) return false;
             return entry_less(a.second, b.second);
           })>
      seen;

  std::vector<AtomicInfo> atoms;
  for (const auto& [s, r] : model.mapping) {
    const auto& state = model.states[s];
    const auto& refl = model.reflections[r];
    if (!seen.emplace(state, refl).second) continue;

    AtomicInfo atom;
    atom.noumena = state.subjects;
    atom.occurrence = state.time;
    atom.state = state;
    atom.carriers = refl.subjects;
    atom.reflection_time = refl.time;
    atom.reflection = refl;
    atom.noumenon_measure = restrict_to(model.measures.noumena, state.subjects);
    atom.carrier_measure = restrict_to(model.measures.carriers, refl.subjects);
    if (auto it = model.measures.reflections.find(first_index.at(refl)); it != model.measures.reflections.end()) {
      atom.reflection_measure = it->second;
    }
    atoms.push_back(std::move(atom));
  }
  return atoms;
}

InformationModel combine(std::span<const AtomicInfo> pieces) {
  if (pieces.empty()) throw Error(ErrorKind::EmptyInput, "combine needs at least one atomic piece");

  std::set<StateEntry, EntryLess> reflections_seen;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (!reflections_seen.insert(pieces[i].reflection).second) {
      throw Error(ErrorKind::Overlap, "piece " + std::to_string(i) + " shares its reflection entry with an earlier piece");
    }
  }

  auto merge = [](std::map<ElementId, double>& into, const std::map<ElementId, double>& from, const char* what) {
    for (const auto& [id, v] : from) {
      auto [it, inserted] = into.emplace(id, v);
      if (!inserted && it->second != v) {
        throw Error(ErrorKind::InvalidModel, std::string("conflicting ") + what + " measure for '" + id + "'");
      }
    }
  };

  InformationModel m;
  m.occurrence = pieces.front().occurrence;
  m.reflection = pieces.front().reflection_time;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& p = pieces[i];
    m.noumena.insert(p.noumena.begin(), p.noumena.end());
    m.carriers.insert(p.carriers.begin(), p.carriers.end());
    m.occurrence = unite(m.occurrence, p.occurrence);
    m.reflection = unite(m.reflection, p.reflection_time);
    m.states.push_back(p.state);
    m.reflections.push_back(p.reflection);
    m.mapping.push_back({i, i});
    merge(m.measures.noumena, p.noumenon_measure, "noumenon");
    merge(m.measures.carriers, p.carrier_measure, "carrier");
    if (p.reflection_measure) m.measures.reflections.emplace(i, *p.reflection_measure);
  }
  return m;
}

InformationModel compose_chain(std::span<const InformationModel> chain) {
  if (chain.empty()) throw Error(ErrorKind::EmptyInput, "chain has no links");
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (!is_restorable(chain[i])) {
      throw Error(ErrorKind::NotRestorable, "link " + std::to_string(i) + " is not restorable");
    }
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const auto& a = chain[i];
    const auto& b = chain[i + 1];
    const std::string junction = "junction " + std::to_string(i) + " -> " + std::to_string(i + 1) + ": ";
    if (a.carriers != b.noumena) throw Error(ErrorKind::ChainMismatch, junction + "carriers differ from the next noumena");
    if (!(a.reflection == b.occurrence)) {
      throw Error(ErrorKind::ChainMismatch, junction + "reflection time differs from the next occurrence time");
    }
    if (a.reflections != b.states) {
      throw Error(ErrorKind::ChainMismatch, junction + "reflection entries differ from the next state entries");
    }
  }

  const auto& first = chain.front();
  const auto& last = chain.back();
  InformationModel out;
  out.noumena = first.noumena;
  out.occurrence = first.occurrence;
  out.states = first.states;
  out.carriers = last.carriers;
  out.reflection = last.reflection;
  out.reflections = last.reflections;
  out.copies = last.copies;
  out.measures.noumena = first.measures.noumena;
  out.measures.carriers = last.measures.carriers;
  out.measures.reflections = last.measures.reflections;
  out.enabled = std::all_of(chain.begin(), chain.end(), [](const InformationModel& m) { return m.enabled; });

  // Junction entries are identical index by index, so the composed map is the
  // composition of the per-link index maps.
  std::vector<std::vector<std::size_t>> maps;
  for (const auto& link : chain) {
    std::vector<std::size_t> f(link.states.size());
    for (const auto& [s, r] : link.mapping) f[s] = r;
    maps.push_back(std::move(f));
  }
  for (std::size_t s = 0; s < first.states.size(); ++s) {
    std::size_t idx = s;
    for (const auto& f : maps) idx = f[idx];
    out.mapping.push_back({s, idx});
  }
  return out;
}

bool mapping_equivalent(const InformationModel& a, const InformationModel& b) {
  auto pairs = [](const InformationModel& m) {
    std::vector<std::pair<StateEntry, StateEntry>> out;
    for (const auto& [s, r] : m.mapping) out.emplace_back(m.states.at(s), m.reflections.at(r));
    auto less = [](const auto& x, const auto& y) {
      if (entry_less(x.first, y.first)) return true;
      if (entry_less(y.first, x.first)) return false;
      return entry_less(x.second, y.second);
    };
    std::sort(out.begin(), out.end(), less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  return pairs(a) == pairs(b);
}

}  // namespace oit
