#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "oitkit/classical.hpp"
#include "oitkit/core.hpp"
#include "oitkit/kalman.hpp"
#include "oitkit/metrics.hpp"
#include "oitkit/model.hpp"
#include "oitkit/physics.hpp"

namespace oit::io {

using Json = nlohmann::ordered_json;

// All readers throw Error(Parse) with the offending path on malformed input.

Json read_json_file(const std::filesystem::path& path);

// Time sets: {"intervals": [["0", "0.01"]], "points": ["5"]}, times as decimal strings.
TimeSet time_set_from_json(const Json& j);
Json to_json(const TimeSet& t);

// Values: string -> symbol, number -> scalar, array of numbers -> vector.
Value value_from_json(const Json& j);
Json to_json(const Value& v);

StateEntry state_entry_from_json(const Json& j);
Json to_json(const StateEntry& e);

// Model file: noumena, carriers, occurrence, reflection, states, reflections,
// mapping, copies, measures, enabled.
InformationModel model_from_json(const Json& j);
Json to_json(const InformationModel& m);
InformationModel load_model(const std::filesystem::path& path);

// Chain file: {"links": [model, ...]}.
std::vector<InformationModel> chain_from_json(const Json& j);

// {"labels": ["a", "b", null, ...]} indexed by state.
EquivalenceRelation equivalence_from_json(const Json& j);
Json to_json(const EquivalenceRelation& r);
// {"edges": [[from, to, "label"], ...]}
RelationSet relations_from_json(const Json& j);
Json to_json(const RelationSet& r);

Json to_json(const ValidationReport& report);

// Kalman scenario: A, B, H, Q, R, x0, P0 plus per-step U and z arrays.
struct KalmanScenario {
  classical::LinearSystemSpec system;
  std::vector<Eigen::VectorXd> inputs;
  std::vector<Eigen::VectorXd> measurements;
};
KalmanScenario kalman_scenario_from_json(const Json& j);
Json to_json(const std::vector<classical::KalmanStep>& trace);
Json matrix_to_json(const Eigen::MatrixXd& m);
Json vector_to_json(const Eigen::VectorXd& v);

// {"candidates": [model...], "target": model, "algorithm": "sequential",
//  "threshold": 0, "distance": "L2", "weights": [...], "keys": [...], "target_key": x}
classical::SearchSetup search_setup_from_json(const Json& j);

// {"profile": "...", "h": ..., "C": ..., "k_b": ..., "G": ..., "H0": ..., "ly": ..., "eV": ...}
physics::PhysicalConstants constants_from_json(const Json& j);
Json to_json(const physics::PhysicalConstants& c);

}  // namespace oit::io
