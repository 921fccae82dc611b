#include "oitkit/io.hpp"

#include <fstream>

#include "oitkit/error.hpp"

namespace oit::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& why) {
  throw Error(ErrorKind::Parse, where + ": " + why);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing key '") + key + "'");
  return *it;
}

Seconds seconds_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) return Seconds::parse(j.get<std::string>());
  if (j.is_number_integer()) return Seconds::from_whole(j.get<std::int64_t>());
  fail(where, "times must be decimal strings (e.g. \"12.010\") or integers");
}

double number(const Json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  return j.get<double>();
}

std::size_t index(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    fail(where, "expected a nonnegative integer index");
  }
  return j.get<std::size_t>();
}

std::set<ElementId> id_set(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of identifiers");
  std::set<ElementId> out;
  for (const auto& e : j) {
    if (!e.is_string()) fail(where, "identifiers must be strings");
    out.insert(e.get<std::string>());
  }
  return out;
}

std::map<ElementId, double> id_measures(const Json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object of id -> measure");
  std::map<ElementId, double> out;
  for (const auto& [k, v] : j.items()) out.emplace(k, number(v, where + "." + k));
  return out;
}

Eigen::MatrixXd matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(j.front().size());
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) fail(where, "ragged matrix");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = number(row[static_cast<std::size_t>(c)], where);
  }
  return m;
}

Eigen::VectorXd vector_from_json(const Json& j, const std::string& where) {
  if (j.is_number()) return Eigen::VectorXd::Constant(1, j.get<double>());
  if (!j.is_array()) fail(where, "expected an array of numbers");
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = number(j[i], where);
  return v;
}

std::vector<Eigen::VectorXd> vectors_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of per-step vectors");
  std::vector<Eigen::VectorXd> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(vector_from_json(j[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, "'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

TimeSet time_set_from_json(const Json& j) {
  if (!j.is_object()) fail("time set", "expected {\"intervals\": [...], \"points\": [...]}");
  std::vector<Interval> intervals;
  std::vector<Seconds> points;
  if (auto it = j.find("intervals"); it != j.end()) {
    if (!it->is_array()) fail("time set intervals", "expected an array");
    for (const auto& iv : *it) {
      if (!iv.is_array() || iv.size() != 2) fail("time set intervals", "each interval is [lo, hi]");
      intervals.push_back({seconds_from_json(iv[0], "interval lo"), seconds_from_json(iv[1], "interval hi")});
    }
  }
  if (auto it = j.find("points"); it != j.end()) {
    if (!it->is_array()) fail("time set points", "expected an array");
    for (const auto& p : *it) points.push_back(seconds_from_json(p, "point"));
  }
  return TimeSet(std::move(intervals), std::move(points));
}

Json to_json(const TimeSet& t) {
  Json ivs = Json::array();
  for (const auto& iv : t.intervals()) ivs.push_back(Json::array({iv.lo.to_string(), iv.hi.to_string()}));
  Json pts = Json::array();
  for (Seconds p : t.points()) pts.push_back(p.to_string());
  return Json{{"intervals", ivs}, {"points", pts}};
}

Value value_from_json(const Json& j) {
  if (j.is_string()) return Symbol{j.get<std::string>()};
  if (j.is_number()) return j.get<double>();
  if (j.is_array()) {
    std::vector<double> v;
    for (const auto& x : j) v.push_back(number(x, "vector value"));
    return v;
  }
  fail("value", "expected a string token, a number or an array of numbers");
}

Json to_json(const Value& v) {
  if (const auto* s = std::get_if<Symbol>(&v)) return s->token;
  if (const auto* d = std::get_if<double>(&v)) return *d;
  return std::get<std::vector<double>>(v);
}

StateEntry state_entry_from_json(const Json& j) {
  StateEntry e;
  e.subjects = id_set(field(j, "subjects", "state entry"), "state entry subjects");
  e.time = time_set_from_json(field(j, "time", "state entry"));
  e.value = value_from_json(field(j, "value", "state entry"));
  return e;
}

Json to_json(const StateEntry& e) {
  return Json{{"subjects", e.subjects}, {"time", to_json(e.time)}, {"value", to_json(e.value)}};
}

InformationModel model_from_json(const Json& j) {
  const std::string where = "model";
  InformationModel m;
  m.noumena = id_set(field(j, "noumena", where), "noumena");
  m.carriers = id_set(field(j, "carriers", where), "carriers");
  m.occurrence = time_set_from_json(field(j, "occurrence", where));
  m.reflection = time_set_from_json(field(j, "reflection", where));

  for (const char* key : {"states", "reflections"}) {
    const auto& arr = field(j, key, where);
    if (!arr.is_array()) fail(key, "expected an array of state entries");
    auto& dest = std::string(key) == "states" ? m.states : m.reflections;
    for (const auto& e : arr) dest.push_back(state_entry_from_json(e));
  }

  const auto& mapping = field(j, "mapping", where);
  if (!mapping.is_array()) fail("mapping", "expected an array of [state, reflection] pairs");
  for (const auto& p : mapping) {
    if (!p.is_array() || p.size() != 2) fail("mapping", "each pair is [state_index, reflection_index]");
    m.mapping.push_back({index(p[0], "mapping"), index(p[1], "mapping")});
  }

  if (auto it = j.find("copies"); it != j.end() && !it->is_null()) {
    if (!it->is_array()) fail("copies", "expected an array");
    std::vector<CopyRecord> copies;
    for (const auto& c : *it) {
      CopyRecord rec;
      rec.carrier_measure = number(field(c, "carrier_measure", "copy"), "copy carrier_measure");
      if (auto w = c.find("weight"); w != c.end()) rec.weight = number(*w, "copy weight");
      copies.push_back(rec);
    }
    m.copies = std::move(copies);
  }

  if (auto it = j.find("measures"); it != j.end() && !it->is_null()) {
    if (!it->is_object()) fail("measures", "expected an object");
    if (auto n = it->find("noumena"); n != it->end()) m.measures.noumena = id_measures(*n, "measures.noumena");
    if (auto c = it->find("carriers"); c != it->end()) m.measures.carriers = id_measures(*c, "measures.carriers");
    if (auto r = it->find("reflections"); r != it->end()) {
      if (!r->is_object()) fail("measures.reflections", "expected an object of index -> measure");
      for (const auto& [k, v] : r->items()) {
        std::size_t idx = 0;
        try {
          std::size_t used = 0;
          idx = std::stoul(k, &used);
          if (used != k.size()) throw std::invalid_argument(k);
        } catch (const std::exception&) {
          fail("measures.reflections", "key '" + k + "' is not a reflection index");
        }
        m.measures.reflections.emplace(idx, number(v, "measures.reflections." + k));
      }
    }
  }

  if (auto it = j.find("enabled"); it != j.end()) {
    if (!it->is_boolean()) fail("enabled", "expected a boolean");
    m.enabled = it->get<bool>();
  }
  return m;
}

Json to_json(const InformationModel& m) {
  Json states = Json::array();
  for (const auto& e : m.states) states.push_back(to_json(e));
  Json reflections = Json::array();
  for (const auto& e : m.reflections) reflections.push_back(to_json(e));
  Json mapping = Json::array();
  for (const auto& p : m.mapping) mapping.push_back(Json::array({p.state, p.reflection}));
  Json copies = nullptr;
  if (m.copies) {
    copies = Json::array();
    for (const auto& c : *m.copies) copies.push_back(Json{{"carrier_measure", c.carrier_measure}, {"weight", c.weight}});
  }
  Json refl_measures = Json::object();
  for (const auto& [idx, v] : m.measures.reflections) refl_measures[std::to_string(idx)] = v;
  Json measures{{"noumena", Json(m.measures.noumena)},
                {"carriers", Json(m.measures.carriers)},
                {"reflections", refl_measures}};

  return Json{{"noumena", m.noumena},
              {"carriers", m.carriers},
              {"occurrence", to_json(m.occurrence)},
              {"reflection", to_json(m.reflection)},
              {"states", states},
              {"reflections", reflections},
              {"mapping", mapping},
              {"copies", copies},
              {"measures", measures},
              {"enabled", m.enabled}};
}

InformationModel load_model(const std::filesystem::path& path) {
  const auto j = read_json_file(path);
  try {
    return model_from_json(j);
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, "'" + path.string() + "': " + e.what());
  }
}

std::vector<InformationModel> chain_from_json(const Json& j) {
  const auto& links = field(j, "links", "chain");
  if (!links.is_array()) fail("chain.links", "expected an array of models");
  std::vector<InformationModel> out;
  for (const auto& l : links) out.push_back(model_from_json(l));
  return out;
}

EquivalenceRelation equivalence_from_json(const Json& j) {
  const auto& labels = field(j, "labels", "relation");
  if (!labels.is_array()) fail("relation.labels", "expected an array indexed by state");
  EquivalenceRelation r;
  for (const auto& l : labels) {
    if (l.is_null()) {
      r.labels.emplace_back(std::nullopt);
    } else if (l.is_string()) {
      r.labels.emplace_back(l.get<std::string>());
    } else if (l.is_number_integer()) {
      r.labels.emplace_back(std::to_string(l.get<std::int64_t>()));
    } else {
      fail("relation.labels", "labels are strings, integers or null");
    }
  }
  return r;
}

Json to_json(const EquivalenceRelation& r) {
  Json labels = Json::array();
  for (const auto& l : r.labels) labels.push_back(l ? Json(*l) : Json(nullptr));
  return Json{{"labels", labels}};
}

RelationSet relations_from_json(const Json& j) {
  const auto& edges = field(j, "edges", "relations");
  if (!edges.is_array()) fail("relations.edges", "expected an array of [from, to, label]");
  RelationSet r;
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 3 || !e[2].is_string()) fail("relations.edges", "each edge is [from, to, \"label\"]");
    r.edges.push_back({index(e[0], "edge"), index(e[1], "edge"), e[2].get<std::string>()});
  }
  return r;
}

Json to_json(const RelationSet& r) {
  Json edges = Json::array();
  for (const auto& e : r.edges) edges.push_back(Json::array({e.from, e.to, e.label}));
  return Json{{"edges", edges}};
}

Json to_json(const ValidationReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    const char* sev = v.severity == Severity::Error ? "error" : v.severity == Severity::Warning ? "warning" : "info";
    violations.push_back(Json{{"code", v.code}, {"requirement", v.postulate}, {"severity", sev}, {"message", v.message}});
  }
  return Json{{"valid", report.valid()}, {"violations", violations}};
}

KalmanScenario kalman_scenario_from_json(const Json& j) {
  KalmanScenario s;
  auto& sys = s.system;
  sys.A = matrix_from_json(field(j, "A", "kalman"), "A");
  sys.B = matrix_from_json(field(j, "B", "kalman"), "B");
  sys.H = matrix_from_json(field(j, "H", "kalman"), "H");
  sys.Q = matrix_from_json(field(j, "Q", "kalman"), "Q");
  sys.R = matrix_from_json(field(j, "R", "kalman"), "R");
  sys.x0 = vector_from_json(field(j, "x0", "kalman"), "x0");
  sys.P0 = matrix_from_json(field(j, "P0", "kalman"), "P0");
  if (auto it = j.find("U"); it != j.end()) s.inputs = vectors_from_json(*it, "U");
  s.measurements = vectors_from_json(field(j, "z", "kalman"), "z");
  return s;
}

Json matrix_to_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

Json vector_to_json(const Eigen::VectorXd& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json to_json(const std::vector<classical::KalmanStep>& trace) {
  Json steps = Json::array();
  for (std::size_t k = 0; k < trace.size(); ++k) {
    steps.push_back(Json{{"k", k + 1},
                         {"x", vector_to_json(trace[k].x)},
                         {"P", matrix_to_json(trace[k].P)},
                         {"G", matrix_to_json(trace[k].G)}});
  }
  return steps;
}

classical::SearchSetup search_setup_from_json(const Json& j) {
  classical::SearchSetup s;
  const auto& cands = field(j, "candidates", "search");
  if (!cands.is_array()) fail("search.candidates", "expected an array of models");
  for (const auto& c : cands) s.candidates.push_back(model_from_json(c));
  s.target = model_from_json(field(j, "target", "search"));
  if (auto it = j.find("algorithm"); it != j.end()) {
    const auto name = it->get<std::string>();
    if (name == "sequential") {
      s.algorithm = classical::SearchAlgorithm::Sequential;
    } else if (name == "bisection") {
      s.algorithm = classical::SearchAlgorithm::Bisection;
    } else {
      fail("search.algorithm", "expected sequential or bisection");
    }
  }
  if (auto it = j.find("threshold"); it != j.end()) s.threshold = number(*it, "search.threshold");
  if (auto it = j.find("distance"); it != j.end()) s.spec.kind = parse_distance_kind(it->get<std::string>());
  if (auto it = j.find("weights"); it != j.end()) {
    if (!it->is_array() || it->size() != 6) fail("search.weights", "expected six weights (o, T_h, f, c, T_m, g)");
    for (std::size_t i = 0; i < 6; ++i) s.spec.weights[i] = number((*it)[i], "search.weights");
  }
  if (auto it = j.find("keys"); it != j.end()) {
    for (const auto& k : *it) s.keys.push_back(number(k, "search.keys"));
  }
  if (auto it = j.find("target_key"); it != j.end()) s.target_key = number(*it, "search.target_key");
  return s;
}

physics::PhysicalConstants constants_from_json(const Json& j) {
  physics::PhysicalConstants c;
  c.profile = j.value("profile", std::string("file"));
  c.h = number(field(j, "h", "constants"), "constants.h");
  c.C = number(field(j, "C", "constants"), "constants.C");
  c.k_b = number(field(j, "k_b", "constants"), "constants.k_b");
  c.G = number(field(j, "G", "constants"), "constants.G");
  c.H0 = number(field(j, "H0", "constants"), "constants.H0");
  c.ly = number(field(j, "ly", "constants"), "constants.ly");
  c.eV = j.contains("eV") ? number(j["eV"], "constants.eV") : 1.602176634e-19;
  c.check();
  return c;
}

Json to_json(const physics::PhysicalConstants& c) {
  return Json{{"profile", c.profile}, {"h", c.h}, {"C", c.C}, {"k_b", c.k_b}, {"G", c.G},
              {"H0", c.H0},           {"ly", c.ly}, {"eV", c.eV}};
}

}  // namespace oit::io
