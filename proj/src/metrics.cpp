#include "oitkit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "oitkit/core.hpp"
#include "oitkit/error.hpp"

namespace oit {

namespace {

struct EntryLess {
  bool operator()(const StateEntry& a, const StateEntry& b) const { return entry_less(a, b); }
};

std::string join_indices(const std::vector<std::size_t>& idx) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) out += (i ? ", " : "") + std::to_string(idx[i]);
  return out;
}

double lp_distance(const std::vector<double>& a, const std::vector<double>& b, DistanceKind kind) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = std::abs(a[i] - b[i]);
    switch (kind) {
      case DistanceKind::L1: acc += d; break;
      case DistanceKind::L2: acc += d * d; break;
      case DistanceKind::Linf: acc = std::max(acc, d); break;
      case DistanceKind::Discrete: break;
    }
  }
  return kind == DistanceKind::L2 ? std::sqrt(acc) : acc;
}

double time_distance(const TimeSet& a, const TimeSet& b) {
  return (a.sup() - b.sup()).abs().to_double() + (a.inf() - b.inf()).abs().to_double();
}

// Metric on the aligned state values when both lists line up entry by entry
// with numeric values of matching shape; otherwise 0/1 equality.
double entry_list_distance(const std::vector<StateEntry>& a, const std::vector<StateEntry>& b, DistanceKind kind) {
  const double discrete = a == b ? 0.0 : 1.0;
  if (kind == DistanceKind::Discrete || a.size() != b.size()) return discrete;
  std::vector<double> va;
  std::vector<double> vb;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].subjects != b[i].subjects || !(a[i].time == b[i].time)) return discrete;
    if (!is_numeric(a[i].value) || !is_numeric(b[i].value)) return discrete;
    auto ca = numeric_components(a[i].value);
    auto cb = numeric_components(b[i].value);
    if (ca.size() != cb.size()) return discrete;
    va.insert(va.end(), ca.begin(), ca.end());
    vb.insert(vb.end(), cb.begin(), cb.end());
  }
  return lp_distance(va, vb, kind);
}

std::size_t distinct_state_values(const InformationModel& m) {
  return std::set<StateEntry, EntryLess>(m.states.begin(), m.states.end()).size();
}

}  // namespace

std::string to_string(DistanceKind kind) {
  switch (kind) {
    case DistanceKind::Discrete: return "discrete";
    case DistanceKind::L1: return "L1";
    case DistanceKind::L2: return "L2";
    case DistanceKind::Linf: return "Linf";
  }
  return "?";
}

DistanceKind parse_distance_kind(const std::string& text) {
  if (text == "discrete") return DistanceKind::Discrete;
  if (text == "L1" || text == "l1") return DistanceKind::L1;
  if (text == "L2" || text == "l2") return DistanceKind::L2;
  if (text == "Linf" || text == "linf") return DistanceKind::Linf;
  throw Error(ErrorKind::Parse, "unknown distance kind '" + text + "' (expected discrete, L1, L2 or Linf)");
}

void DistanceSpec::check() const {
  bool any_positive = false;
  for (double w : weights) {
    if (!(w >= 0.0)) throw Error(ErrorKind::InvalidModel, "distance weights must be nonnegative");
    any_positive = any_positive || w > 0.0;
  }
  if (!any_positive) throw Error(ErrorKind::InvalidModel, "distance weights must not all be zero");
}

double volume(const InformationModel& model) {
  require_valid(model);
  std::vector<std::size_t> missing;
  for (std::size_t r = 0; r < model.reflections.size(); ++r) {
    if (!model.measures.reflections.contains(r)) missing.push_back(r);
  }
  if (!missing.empty()) {
    throw Error(ErrorKind::MissingMeasure, "no reflection measure for reflection(s) " + join_indices(missing));
  }
  std::set<StateEntry, EntryLess> seen;
  double total = 0.0;
  for (std::size_t r = 0; r < model.reflections.size(); ++r) {
    if (seen.insert(model.reflections[r]).second) total += model.measures.reflections.at(r);
  }
  return total;
}

Seconds delay(const InformationModel& model) {
  require_valid(model);
  return model.reflection.sup() - model.occurrence.sup();
}

double scope(const InformationModel& model) {
  require_valid(model);
  double total = 0.0;
  std::string missing;
  for (const auto& id : model.noumena) {
    auto it = model.measures.noumena.find(id);
    if (it == model.measures.noumena.end()) {
      missing += (missing.empty() ? "" : ", ") + id;
    } else {
      total += it->second;
    }
  }
  if (!missing.empty()) throw Error(ErrorKind::MissingMeasure, "no noumenon measure for " + missing);
  return total;
}

double granularity(const InformationModel& model) {
  const auto atoms = decompose_atomic(model);
  double sum = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (const auto& id : atoms[i].noumena) {
      auto it = atoms[i].noumenon_measure.find(id);
      if (it == atoms[i].noumenon_measure.end()) {
        throw Error(ErrorKind::MissingMeasure, "atom " + std::to_string(i) + ": no noumenon measure for " + id);
      }
      sum += it->second;
    }
  }
  return sum / static_cast<double>(atoms.size());
}

std::size_t variety(const InformationModel& model, const EquivalenceRelation& relation) {
  require_valid(model);
  if (relation.labels.size() != model.states.size()) {
    throw Error(ErrorKind::PartialRelation, "relation labels " + std::to_string(relation.labels.size()) +
                                                " states but the model has " + std::to_string(model.states.size()));
  }
  std::map<StateEntry, std::string, EntryLess> label_of_value;
  std::set<std::string> classes;
  for (std::size_t s = 0; s < model.states.size(); ++s) {
    const auto& label = relation.labels[s];
    if (!label) throw Error(ErrorKind::PartialRelation, "state " + std::to_string(s) + " has no class label");
    auto [it, inserted] = label_of_value.emplace(model.states[s], *label);
    if (!inserted && it->second != *label) {
      throw Error(ErrorKind::InvalidRelation,
                  "state " + std::to_string(s) + " repeats an earlier state value but carries a different class label");
    }
    classes.insert(*label);
  }
  return classes.size();
}

Seconds duration(const InformationModel& model) {
  require_valid(model);
  return model.occurrence.sup() - model.occurrence.inf();
}

double SamplingRate::hz() const {
  return static_cast<double>(count) * static_cast<double>(Seconds::kScale) / static_cast<double>(total.nanos());
}

SamplingRate sampling_rate(const InformationModel& model, std::optional<std::vector<Interval>> gaps) {
  require_valid(model);
  const TimeSet& th = model.occurrence;
  std::vector<Interval> us = gaps ? std::move(*gaps) : th.gaps();
  if (us.empty()) {
    throw Error(ErrorKind::EmptyGap, "occurrence time has no interruptions; sampling rate needs at least one gap");
  }

  // Gaps are the open intervals (lo, hi).
  for (std::size_t i = 0; i < us.size(); ++i) {
    const auto& u = us[i];
    const std::string name = "gap " + std::to_string(i) + " (" + u.lo.to_string() + ", " + u.hi.to_string() + ")";
    if (!(u.lo < u.hi)) throw Error(ErrorKind::EmptyGap, name + " has no length");
    if (u.lo < th.inf() || th.sup() < u.hi) {
      throw Error(ErrorKind::GapOverlap, name + " leaves [inf T_h, sup T_h]");
    }
    for (const auto& iv : th.intervals()) {
      if (iv.lo < u.hi && u.lo < iv.hi) throw Error(ErrorKind::GapOverlap, name + " meets the occurrence time");
    }
    for (Seconds p : th.points()) {
      if (u.lo < p && p < u.hi) throw Error(ErrorKind::GapOverlap, name + " meets the occurrence time");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (us[j].lo < u.hi && u.lo < us[j].hi) {
        throw Error(ErrorKind::GapOverlap, name + " overlaps gap " + std::to_string(j));
      }
    }
  }

  SamplingRate rate;
  rate.count = us.size();
  for (const auto& u : us) rate.total += u.length();
  return rate;
}

double aggregation(const InformationModel& model, const RelationSet& relations) {
  if (model.states.empty()) throw Error(ErrorKind::EmptyStates, "aggregation needs a nonempty state set");
  require_valid(model);
  std::set<std::tuple<StateEntry, StateEntry, std::string>, decltype([](const auto& a, const auto& b) {
             const auto& [a0, a1, a2] = a;
             const auto& [b0, b1, b2] = b;
             if (entry_less(a0, b0)) return true;
             if (entry_less(b0, a0)) return false;
             if (entry_less(a1, b1)) return true;
             if (entry_less(b1, a1)) return false;
             return a2 < b2;
           })>
      distinct;
  for (const auto& e : relations.edges) {
    if (e.from >= model.states.size() || e.to >= model.states.size()) {
      throw Error(ErrorKind::UnknownIndex, "edge (" + std::to_string(e.from) + ", " + std::to_string(e.to) +
                                               ") references a state outside the model");
    }
    distinct.emplace(model.states[e.from], model.states[e.to], e.label);
  }
  return static_cast<double>(distinct.size()) / static_cast<double>(distinct_state_values(model));
}

double coverage(const InformationModel& model) {
  require_valid(model);
  if (!model.copies || model.copies->empty()) {
    throw Error(ErrorKind::MissingCopies, "coverage needs the copies list (including the model itself)");
  }
  double total = 0.0;
  for (const auto& c : *model.copies) total += c.carrier_measure * c.weight;
  return total;
}

double distortion(const Value& restored, const Value& truth, const DistanceSpec& spec) {
  if (spec.kind == DistanceKind::Discrete) return restored == truth ? 0.0 : 1.0;
  const auto a = numeric_components(restored);
  const auto b = numeric_components(truth);
  if (a.size() != b.size()) {
    throw Error(ErrorKind::DimensionMismatch, "restored has dimension " + std::to_string(a.size()) +
                                                  ", truth has dimension " + std::to_string(b.size()));
  }
  return lp_distance(a, b, spec.kind);
}

double distortion(std::span<const Value> restored, std::span<const Value> truth, const DistanceSpec& spec) {
  if (restored.size() != truth.size()) {
    throw Error(ErrorKind::DimensionMismatch, std::to_string(restored.size()) + " restored values against " +
                                                  std::to_string(truth.size()) + " true values");
  }
  if (spec.kind == DistanceKind::Discrete) {
    return std::equal(restored.begin(), restored.end(), truth.begin()) ? 0.0 : 1.0;
  }
  std::vector<double> a;
  std::vector<double> b;
  for (std::size_t i = 0; i < restored.size(); ++i) {
    auto ca = numeric_components(restored[i]);
    auto cb = numeric_components(truth[i]);
    if (ca.size() != cb.size()) {
      throw Error(ErrorKind::DimensionMismatch, "value " + std::to_string(i) + " differs in dimension");
    }
    a.insert(a.end(), ca.begin(), ca.end());
    b.insert(b.end(), cb.begin(), cb.end());
  }
  return lp_distance(a, b, spec.kind);
}

MismatchBreakdown mismatch_breakdown(const InformationModel& model, const InformationModel& target,
                                     const DistanceSpec& spec) {
  spec.check();
  require_valid(model);
  require_valid(target);
  MismatchBreakdown out;
  out.components[0] = model.noumena == target.noumena ? 0.0 : 1.0;
  out.components[1] = time_distance(model.occurrence, target.occurrence);
  out.components[2] = entry_list_distance(model.states, target.states, spec.kind);
  out.components[3] = model.carriers == target.carriers ? 0.0 : 1.0;
  out.components[4] = time_distance(model.reflection, target.reflection);
  out.components[5] = entry_list_distance(model.reflections, target.reflections, spec.kind);
  for (std::size_t i = 0; i < 6; ++i) out.total += spec.weights[i] * out.components[i];
  return out;
}

double mismatch(const InformationModel& model, const InformationModel& target, const DistanceSpec& spec) {
  return mismatch_breakdown(model, target, spec).total;
}

}  // namespace oit
