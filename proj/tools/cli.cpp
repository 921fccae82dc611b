#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "oitkit/classical.hpp"
#include "oitkit/core.hpp"
#include "oitkit/error.hpp"
#include "oitkit/io.hpp"
#include "oitkit/kalman.hpp"
#include "oitkit/metrics.hpp"
#include "oitkit/physics.hpp"

namespace oit::cli {

using Json = nlohmann::ordered_json;

namespace {

struct Outcome {
  Json report;
  int status = 0;
};

Json quantity(double value, const std::string& unit) { return Json{{"value", value}, {"unit", unit}}; }
Json quantity(const Seconds& value, const std::string& unit) { return Json{{"value", value.to_string()}, {"unit", unit}}; }

std::vector<Interval> parse_ranges(const std::vector<std::string>& specs, const char* what) {
  std::vector<Interval> out;
  for (const auto& s : specs) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) {
      throw Error(ErrorKind::Parse, std::string(what) + " '" + s + "' must look like start:end");
    }
    out.push_back({Seconds::parse(s.substr(0, colon)), Seconds::parse(s.substr(colon + 1))});
  }
  return out;
}

DistanceSpec make_spec(const std::string& distance, const std::vector<double>& weights) {
  DistanceSpec spec;
  spec.kind = parse_distance_kind(distance);
  if (!weights.empty()) {
    if (weights.size() != 6) throw Error(ErrorKind::Parse, "--weights takes six values (o, T_h, f, c, T_m, g)");
    std::copy(weights.begin(), weights.end(), spec.weights.begin());
  }
  spec.check();
  return spec;
}

Json spec_json(const DistanceSpec& spec) {
  return Json{{"kind", to_string(spec.kind)}, {"weights", spec.weights}};
}

physics::PhysicalConstants resolve_constants(const std::string& name) {
  if (name == "paper" || name == "codata") return physics::constants_by_name(name);
  return io::constants_from_json(io::read_json_file(name));
}

// Runs one metric; failures become an "error" entry and flip the status.
void add_metric(Json& report, int& status, const std::string& name, const std::function<Json()>& compute) {
  try {
    report[name] = compute();
  } catch (const Error& e) {
    report[name] = Json{{"error", e.what()}};
    status = 1;
  }
}

Json validation_json(const InformationModel& model) {
  const auto report = validate(model);
  Json j = io::to_json(report);
  const bool restorable = report.valid() && is_restorable(model);
  j["restorable"] = restorable;
  j["summary"] = report.valid() ? (restorable ? "valid, restorable" : "valid, not restorable") : "invalid";
  return j;
}

Outcome penguin_demo() {
  const auto model = io::model_from_json(Json::parse(penguin_model_json()));
  Json j = validation_json(model);
  j.erase("summary");
  j["volume"] = quantity(volume(model), "bit");
  j["volume_note"] = "1 MB = 2^20 bytes = 8388608 bits";
  j["delay"] = quantity(delay(model), "s");
  j["duration"] = quantity(duration(model), "s");
  j["scope"] = quantity(scope(model), "noumena");
  j["restored_state"] = io::to_json(restore(model, 0));
  return {j, 0};
}

Json universe_json(const physics::UniverseReport& u) {
  auto rel = [](double got, double published) { return (got - published) / published; };
  Json j;
  j["profile"] = u.profile;
  j["radius"] = Json{{"value", u.radius_ly}, {"unit", "ly"}, {"meters", u.radius_m}};
  j["age"] = quantity(u.age_s, "s");
  j["rho_c"] = quantity(u.rho_c, "kg/m^3");
  j["V"] = quantity(u.volume_m3, "m^3");
  j["m"] = quantity(u.mass_kg, "kg");
  j["I"] = quantity(u.info_qubits, "qubit");
  j["published_estimates"] = Json{
      {"rho_c", Json{{"value", 7.9e-27}, {"relative_deviation", rel(u.rho_c, 7.9e-27)}}},
      {"V", Json{{"value", 3.35e80}, {"relative_deviation", rel(u.volume_m3, 3.35e80)}}},
      {"m", Json{{"value", 2.6e54}, {"relative_deviation", rel(u.mass_kg, 2.6e54)}}},
      {"I", Json{{"value", 6.1e122}, {"relative_deviation", rel(u.info_qubits, 6.1e122)}}},
  };
  j["summary"] = "I ≈ " + format_sig(u.info_qubits, 2) + " qubit";
  return j;
}

void render(const Json& node, const std::string& path, std::ostringstream& os) {
  if (node.is_object()) {
    for (const auto& [k, v] : node.items()) render(v, path.empty() ? k : path + "." + k, os);
  } else if (node.is_array() && std::any_of(node.begin(), node.end(), [](const Json& x) { return x.is_structured(); })) {
    for (std::size_t i = 0; i < node.size(); ++i) render(node[i], path + "[" + std::to_string(i) + "]", os);
  } else {
    os << path << ": " << (node.is_string() ? node.get<std::string>() : node.dump()) << '\n';
  }
}

}  // namespace

std::string format_sig(double value, int digits) {
  if (!std::isfinite(value)) return std::to_string(value);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", std::max(0, digits - 1), value);
  std::string s(buf);
  const auto e = s.find('e');
  std::string mantissa = s.substr(0, e);
  int exponent = std::stoi(s.substr(e + 1));
  if (exponent == 0) return mantissa;
  return mantissa + "e" + std::to_string(exponent);
}

std::string render_text(const Json& report) {
  std::ostringstream os;
  std::optional<std::string> summary;
  if (report.is_object()) {
    for (const auto& [k, v] : report.items()) {
      if (k == "summary" && v.is_string()) {
        summary = v.get<std::string>();
      } else {
        render(v, k, os);
      }
    }
  } else {
    render(report, "", os);
  }
  if (summary) os << *summary << '\n';
  return os.str();
}

std::string penguin_model_json() {
  return R"json({
  "noumena": ["penguin-1", "penguin-2", "penguin-3"],
  "carriers": ["laptop"],
  "occurrence": {"intervals": [["1000", "1000.01"]], "points": []},
  "reflection": {"intervals": [["1000.5", "3600"]], "points": []},
  "states": [
    {
      "subjects": ["penguin-1", "penguin-2", "penguin-3"],
      "time": {"intervals": [["1000", "1000.01"]], "points": []},
      "value": "three penguins under blue sky and white clouds"
    }
  ],
  "reflections": [
    {
      "subjects": ["laptop"],
      "time": {"intervals": [["1000.5", "3600"]], "points": []},
      "value": "penguin.jpg"
    }
  ],
  "mapping": [[0, 0]],
  "copies": [{"carrier_measure": 1, "weight": 1}],
  "measures": {
    "noumena": {"penguin-1": 1, "penguin-2": 1, "penguin-3": 1},
    "carriers": {"laptop": 1},
    "reflections": {"0": 8388608}
  },
  "enabled": true
})json";
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"oitkit: sextuple information models, their metrics, classical corollaries and physical bounds"};
  app.name("oitkit");
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::string output;
  std::string constants = "paper";
  std::string distance = "L2";
  std::vector<double> weights;
  double threshold = 0.0;
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--output", output, "Write the report to this file instead of stdout");
  app.add_option("--constants", constants, "Constants profile: paper, codata, or a JSON file");
  app.add_option("--distance", distance, "Distance kind: discrete, L1, L2, Linf");
  app.add_option("--weights", weights, "Six mismatch weights for o, T_h, f, c, T_m, g")->delimiter(',');
  app.add_option("--threshold", threshold, "Early-stop mismatch threshold for search");

  std::function<Outcome()> action;

  // validate
  std::string model_path;
  auto* validate_cmd = app.add_subcommand(
      "validate", "Check the sextuple requirements: nonempty noumena, carriers and state sets, times inside T_h / T_m, "
                  "and a total surjective mapping f -> g; also reports restorability (injectivity on state values).");
  validate_cmd->add_option("model", model_path, "Model JSON file")->required();
  validate_cmd->callback([&] {
    action = [&]() -> Outcome {
      const auto model = io::load_model(model_path);
      Json j = validation_json(model);
      return {j, j["valid"].get<bool>() ? 0 : 1};
    };
  });

  // metrics
  std::string relation_path;
  std::string relations_path;
  std::string target_path;
  std::vector<std::string> gap_specs;
  std::string restored_text;
  std::string truth_text;
  auto* metrics_cmd = app.add_subcommand(
      "metrics", "Compute the information metrics: volume = sigma(g), delay = sup T_m - sup T_h, scope = sigma(o), "
                 "granularity (mean atom noumenon measure), variety (classes of R), duration = sup T_h - inf T_h, "
                 "sampling rate (gap count / gap length), aggregation (relations / states), coverage (integral over "
                 "copies), distortion d(f, f~) and mismatch d(I, I_0).");
  metrics_cmd->add_option("model", model_path, "Model JSON file")->required();
  metrics_cmd->add_option("--relation", relation_path, "Equivalence relation JSON for variety");
  metrics_cmd->add_option("--relations", relations_path, "Relation set JSON for aggregation");
  metrics_cmd->add_option("--target", target_path, "Target model JSON for mismatch");
  metrics_cmd->add_option("--gaps", gap_specs, "Interruptions of T_h as start:end (default: maximal gaps)")->delimiter(',');
  metrics_cmd->add_option("--restored", restored_text, "Restored value (JSON) for distortion");
  metrics_cmd->add_option("--truth", truth_text, "True value (JSON) for distortion");
  metrics_cmd->callback([&] {
    action = [&]() -> Outcome {
      const auto model = io::load_model(model_path);
      require_valid(model);
      Json j;
      int status = 0;
      add_metric(j, status, "volume", [&] { return quantity(volume(model), "sigma"); });
      add_metric(j, status, "delay", [&] { return quantity(delay(model), "s"); });
      add_metric(j, status, "scope", [&] { return quantity(scope(model), "sigma"); });
      add_metric(j, status, "granularity", [&] { return quantity(granularity(model), "sigma"); });
      if (!relation_path.empty()) {
        const auto rel = io::equivalence_from_json(io::read_json_file(relation_path));
        add_metric(j, status, "variety", [&] {
          return Json{{"value", variety(model, rel)}, {"unit", "classes"}, {"relation", io::to_json(rel)}};
        });
      }
      add_metric(j, status, "duration", [&] { return quantity(duration(model), "s"); });
      add_metric(j, status, "sampling_rate", [&] {
        if (gap_specs.empty() && model.occurrence.gaps().empty()) {
          return Json{{"value", nullptr}, {"note", "occurrence time has no interruptions; pass --gaps to measure"}};
        }
        std::optional<std::vector<Interval>> gaps;
        if (!gap_specs.empty()) gaps = parse_ranges(gap_specs, "gap");
        const auto rate = sampling_rate(model, gaps);
        return Json{{"value", rate.hz()}, {"unit", "1/s"}, {"gaps", rate.count}, {"gap_length", rate.total.to_string()}};
      });
      if (!relations_path.empty()) {
        const auto rels = io::relations_from_json(io::read_json_file(relations_path));
        add_metric(j, status, "aggregation", [&] {
          return Json{{"value", aggregation(model, rels)}, {"unit", "relations per state"}, {"relations", io::to_json(rels)}};
        });
      }
      add_metric(j, status, "coverage", [&] { return quantity(coverage(model), "sigma"); });
      const auto spec = make_spec(distance, weights);
      if (!restored_text.empty() || !truth_text.empty()) {
        add_metric(j, status, "distortion", [&] {
          const auto restored = io::value_from_json(Json::parse(restored_text));
          const auto truth = io::value_from_json(Json::parse(truth_text));
          return Json{{"value", distortion(restored, truth, spec)}, {"distance", spec_json(spec)}};
        });
      }
      if (!target_path.empty()) {
        const auto target = io::load_model(target_path);
        add_metric(j, status, "mismatch", [&] {
          const auto b = mismatch_breakdown(model, target, spec);
          return Json{{"value", b.total}, {"components", b.components}, {"distance", spec_json(spec)}};
        });
      }
      return {j, status};
    };
  });

  // restore
  std::size_t reflection_index = 0;
  auto* restore_cmd = app.add_subcommand(
      "restore", "Apply the inverse mapping I^-1 to one reflection and print the restored noumenon state.");
  restore_cmd->add_option("model", model_path, "Model JSON file")->required();
  restore_cmd->add_option("--index", reflection_index, "Reflection index")->required();
  restore_cmd->callback([&] {
    action = [&]() -> Outcome {
      const auto model = io::load_model(model_path);
      return {Json{{"reflection_index", reflection_index}, {"state", io::to_json(restore(model, reflection_index))}}, 0};
    };
  });

  // chain
  std::vector<std::string> chain_paths;
  auto* chain_cmd = app.add_subcommand(
      "chain", "Compose a serial transmission chain (c_i = o_i+1, T_mi = T_h(i+1), g_i = f_i+1) into "
               "<o_1, T_h1, f_1, c_n, T_mn, g_n>; prints the composed model. Its delay is the sum of link delays.");
  chain_cmd->add_option("files", chain_paths, "One chain file {\"links\": [...]} or several model files")->required();
  chain_cmd->callback([&] {
    action = [&]() -> Outcome {
      std::vector<InformationModel> links;
      if (chain_paths.size() == 1) {
        const auto j = io::read_json_file(chain_paths.front());
        if (j.contains("links")) {
          links = io::chain_from_json(j);
        } else {
          links.push_back(io::model_from_json(j));
        }
      } else {
        for (const auto& p : chain_paths) links.push_back(io::load_model(p));
      }
      return {io::to_json(compose_chain(links)), 0};
    };
  });

  // classical corollaries
  auto* classical_cmd = app.add_subcommand("classical", "Classical information principles expressed through the metrics");
  classical_cmd->require_subcommand(1);

  std::vector<double> probabilities;
  auto* entropy_cmd = classical_cmd->add_subcommand(
      "entropy", "Minimum restorable volume of random-event information: -sum p_i log2 p_i bits.");
  entropy_cmd->add_option("--p", probabilities, "Probabilities, comma separated")->required()->delimiter(',');
  entropy_cmd->callback([&] {
    action = [&]() -> Outcome {
      return {Json{{"p", probabilities}, {"min_volume", quantity(classical::shannon_min_volume(probabilities), "bit")}}, 0};
    };
  });

  std::vector<std::string> delay_texts;
  auto* chain_delay_cmd = classical_cmd->add_subcommand(
      "chain-delay", "Serial transmission delay: the sum of the delays of all links.");
  chain_delay_cmd->add_option("--delays", delay_texts, "Link delays in seconds, comma separated")->required()->delimiter(',');
  chain_delay_cmd->callback([&] {
    action = [&]() -> Outcome {
      std::vector<Seconds> delays;
      for (const auto& t : delay_texts) delays.push_back(Seconds::parse(t));
      return {Json{{"delays", delay_texts}, {"total_delay", quantity(classical::serial_chain_delay(delays), "s")}}, 0};
    };
  });

  double pt = 0, gt = 0, ae = 0, smin = 0, sigma = 0;
  auto* radar_cmd = classical_cmd->add_subcommand(
      "radar", "Radar range equation R_max^4 = Pt Gt Ae sigma / ((4 pi)^2 Smin): range grows as the fourth root of scope.");
  radar_cmd->add_option("--pt", pt, "Transmit power, W")->required();
  radar_cmd->add_option("--gt", gt, "Antenna gain")->required();
  radar_cmd->add_option("--ae", ae, "Effective aperture, m^2")->required();
  radar_cmd->add_option("--smin", smin, "Minimum detectable signal, W")->required();
  radar_cmd->add_option("--sigma", sigma, "Reflection area (scope), m^2")->required();
  radar_cmd->callback([&] {
    action = [&]() -> Outcome {
      return {Json{{"inputs", Json{{"Pt", pt}, {"Gt", gt}, {"Ae", ae}, {"Smin", smin}, {"sigma", sigma}}},
                   {"R_max", quantity(classical::radar_max_range(pt, gt, ae, smin, sigma), "m")}},
              0};
    };
  });

  double wavelength = 0, aperture = 0;
  auto* rayleigh_cmd = classical_cmd->add_subcommand(
      "rayleigh", "Optical imaging granularity by the Rayleigh criterion: l / a radians.");
  rayleigh_cmd->add_option("--wavelength", wavelength, "Wavelength l, m")->required();
  rayleigh_cmd->add_option("--aperture", aperture, "Photosensitive unit width a, m")->required();
  rayleigh_cmd->callback([&] {
    action = [&]() -> Outcome {
      return {Json{{"wavelength", wavelength}, {"aperture", aperture},
                   {"granularity", quantity(classical::rayleigh_granularity(wavelength, aperture), "rad")}},
              0};
    };
  });

  auto* variety_cmd = classical_cmd->add_subcommand(
      "variety", "Variety invariance: transporting R through a restorable mapping keeps the class count.");
  variety_cmd->add_option("model", model_path, "Model JSON file")->required();
  variety_cmd->add_option("--relation", relation_path, "Equivalence relation JSON")->required();
  variety_cmd->callback([&] {
    action = [&]() -> Outcome {
      const auto model = io::load_model(model_path);
      const auto rel = io::equivalence_from_json(io::read_json_file(relation_path));
      const auto c = classical::variety_invariance_check(model, rel);
      return {Json{{"classes_on_states", c.on_states}, {"classes_on_reflections", c.on_reflections}, {"equal", c.equal}}, 0};
    };
  });

  auto* aggregation_cmd = classical_cmd->add_subcommand(
      "aggregation", "Aggregation invariance: relations transported through a restorable mapping keep the ratio.");
  aggregation_cmd->add_option("model", model_path, "Model JSON file")->required();
  aggregation_cmd->add_option("--relations", relations_path, "Relation set JSON")->required();
  aggregation_cmd->callback([&] {
    action = [&]() -> Outcome {
      const auto model = io::load_model(model_path);
      const auto rels = io::relations_from_json(io::read_json_file(relations_path));
      const auto c = classical::aggregation_invariance_check(model, rels);
      return {Json{{"ratio_on_states", c.on_states}, {"ratio_on_reflections", c.on_reflections}, {"equal", c.equal}}, 0};
    };
  });

  std::vector<std::string> session_specs;
  auto* mtbf_cmd = classical_cmd->add_subcommand(
      "mtbf", "Average duration of continuous monitoring information equals the MTBF of the collection device.");
  mtbf_cmd->add_option("--sessions", session_specs, "Working periods as start:end, comma separated")->required()->delimiter(',');
  mtbf_cmd->callback([&] {
    action = [&]() -> Outcome {
      std::vector<classical::Session> sessions;
      for (const auto& iv : parse_ranges(session_specs, "session")) sessions.push_back({iv.hi, iv.lo});
      return {Json{{"sessions", session_specs}, {"mtbf", quantity(classical::mtbf_duration(sessions), "s")}}, 0};
    };
  });

  double period = 0;
  std::optional<double> rate;
  auto* nyquist_cmd = classical_cmd->add_subcommand(
      "nyquist", "Lowest restorable sampling rate of periodic information: 1 / (2T); restorable iff rate >= 1 / (2T).");
  nyquist_cmd->add_option("--period", period, "Period T, s")->required();
  nyquist_cmd->add_option("--rate", rate, "Sampling rate to test, 1/s");
  nyquist_cmd->callback([&] {
    action = [&]() -> Outcome {
      Json j{{"period", quantity(period, "s")}, {"min_rate", quantity(classical::nyquist_min_rate(period), "1/s")}};
      if (rate) {
        j["rate"] = quantity(*rate, "1/s");
        j["restorable"] = classical::nyquist_restorable(*rate, period);
      }
      return {j, 0};
    };
  });

  std::uint64_t nodes = 0;
  auto* metcalfe_cmd = classical_cmd->add_subcommand(
      "metcalfe", "Network value n^2 equals max scope times max coverage of the information it carries.");
  metcalfe_cmd->add_option("--nodes", nodes, "Node count n")->required();
  metcalfe_cmd->add_option("--model", model_path, "Network model JSON to check scope * coverage");
  metcalfe_cmd->callback([&] {
    action = [&]() -> Outcome {
      Json j{{"nodes", nodes}, {"value", classical::metcalfe_value(nodes)}};
      if (!model_path.empty()) {
        const auto c = classical::metcalfe_check(io::load_model(model_path), nodes);
        j["max_scope"] = c.max_scope;
        j["max_coverage"] = c.max_coverage;
        j["equal"] = c.equal;
      }
      return {j, 0};
    };
  });

  std::string scenario_path;
  auto* kalman_cmd = classical_cmd->add_subcommand(
      "kalman", "Minimum-distortion estimate of a linear Gaussian system by the Kalman recursion; emits x(k|k), "
                "P(k|k) and the gain G(k) per step.");
  kalman_cmd->add_option("scenario", scenario_path, "Scenario JSON with A, B, H, Q, R, x0, P0, U, z")->required();
  kalman_cmd->callback([&] {
    action = [&]() -> Outcome {
      const auto s = io::kalman_scenario_from_json(io::read_json_file(scenario_path));
      return {Json{{"steps", io::to_json(classical::kalman_filter(s.system, s.inputs, s.measurements))}}, 0};
    };
  });

  std::string algorithm = "sequential";
  std::uint64_t n = 0;
  bool general = false;
  auto* asl_cmd = classical_cmd->add_subcommand(
      "asl", "Average search length sum p_i c_i with p_i = 1/n: sequential (n+1)/2, bisection ((n+1)/n) log2(n+1) - 1.");
  asl_cmd->add_option("--algorithm", algorithm, "sequential or bisection")->check(CLI::IsMember({"sequential", "bisection"}));
  asl_cmd->add_option("--n", n, "Number of keys")->required();
  asl_cmd->add_flag("--general", general, "Bisection over any n by walking the middle-rooted tree");
  asl_cmd->callback([&] {
    action = [&]() -> Outcome {
      Json j{{"algorithm", algorithm}, {"n", n}};
      if (algorithm == "sequential") {
        j["asl"] = classical::asl_sequential(n);
      } else if (general) {
        j["asl"] = classical::asl_bisection_general(n);
        j["total_comparisons"] = classical::bisection_total_comparisons(n);
      } else {
        j["asl"] = classical::asl_bisection(n);
      }
      return {j, 0};
    };
  });

  std::string setup_path;
  auto* search_cmd = classical_cmd->add_subcommand(
      "search", "Search candidates for the minimum mismatch to a target; without an exact match every candidate is "
                "compared (n comparisons).");
  search_cmd->add_option("setup", setup_path, "Search setup JSON")->required();
  search_cmd->callback([&] {
    action = [&]() -> Outcome {
      auto setup = io::search_setup_from_json(io::read_json_file(setup_path));
      if (app.count("--threshold") > 0) setup.threshold = threshold;
      const auto r = classical::search_min_mismatch(setup);
      return {Json{{"index", r.index}, {"comparisons", r.comparisons}, {"mismatch", r.mismatch}, {"early_stop", r.early_stop},
                   {"threshold", setup.threshold}, {"distance", spec_json(setup.spec)}},
              0};
    };
  });

  // physics
  auto* physics_cmd = app.add_subcommand("physics", "Information volume bounds from matter, energy and time");
  physics_cmd->require_subcommand(1);

  double energy = 0, time_s = 0;
  auto* qv_cmd = physics_cmd->add_subcommand(
      "quantum-volume", "Qubits a single quantum of mean energy dE carries over time t: floor(4 dE t / h) + 1 "
                        "(exact) and 4 dE t / h (asymptotic); transitions take at least h / (4 dE).");
  qv_cmd->add_option("--energy", energy, "Mean energy dE, J")->required();
  qv_cmd->add_option("--time", time_s, "Reflection duration t, s")->required();
  qv_cmd->callback([&] {
    action = [&]() -> Outcome {
      const auto c = resolve_constants(constants);
      const auto q = physics::quantum_volume(energy, time_s, c);
      return {Json{{"profile", q.profile}, {"exact", quantity(q.exact, "qubit")}, {"asymptotic", quantity(q.asymptotic, "qubit")},
                   {"relative_gap", q.relative_gap()}, {"transition_time", quantity(q.transition_time, "s")}},
              0};
    };
  });

  double mass = 0, radiation = 0;
  std::optional<double> quanta;
  std::string regime_name = "large-t";
  auto* cv_cmd = physics_cmd->add_subcommand(
      "carrier-volume", "Information volume of a carrier with mass m and radiation energy E_r over time t: "
                        "4 (m C^2 + E_r) t / h qubits, or N qubits for N quanta when t ~ 0.");
  cv_cmd->add_option("--mass", mass, "Mass m, kg");
  cv_cmd->add_option("--radiation-energy", radiation, "Radiation energy E_r, J");
  cv_cmd->add_option("--quanta", quanta, "Quantum count N");
  cv_cmd->add_option("--time", time_s, "Duration t, s");
  cv_cmd->add_option("--regime", regime_name, "large-t, near-zero or auto")->check(CLI::IsMember({"large-t", "near-zero", "auto"}));
  cv_cmd->callback([&] {
    action = [&]() -> Outcome {
      const auto c = resolve_constants(constants);
      physics::CarrierSpec spec{.mass_kg = mass, .radiation_energy_j = radiation, .quantum_count = quanta, .duration_s = time_s};
      const auto regime = regime_name == "large-t" ? physics::Regime::LargeT
                          : regime_name == "near-zero" ? physics::Regime::NearZero
                                                       : physics::Regime::Auto;
      const auto v = physics::carrier_volume(spec, c, regime);
      return {Json{{"profile", v.profile}, {"regime", v.regime == physics::Regime::LargeT ? "large-t" : "near-zero"},
                   {"energy", quantity(v.energy_j, "J")}, {"volume", quantity(v.qubits, "qubit")}},
              0};
    };
  });

  auto* rate_cmd = physics_cmd->add_subcommand(
      "unit-mass-rate", "Qubits one kilogram carries per second: 4 C^2 / h.");
  rate_cmd->callback([&] {
    action = [&]() -> Outcome {
      const auto r = physics::unit_mass_rate(resolve_constants(constants));
      return {Json{{"profile", r.profile}, {"value", quantity(r.value, "qubit/(kg s)")}, {"quoted", r.quoted},
                   {"relative_deviation", r.relative_deviation}, {"note", r.note}},
              0};
    };
  });

  double temperature = 0;
  auto* bit_cmd = physics_cmd->add_subcommand(
      "bit-mass", "Minimum bit mass k_b T ln2 / C^2 and the bound C^2 / (k_b T ln2) bits per kilogram "
                  "(classical equilibrium memory only).");
  bit_cmd->add_option("--temperature", temperature, "Temperature T, K")->required();
  bit_cmd->callback([&] {
    action = [&]() -> Outcome {
      const auto c = resolve_constants(constants);
      return {Json{{"profile", c.profile},
                   {"temperature", quantity(temperature, "K")},
                   {"min_bit_mass", quantity(physics::min_bit_mass(temperature, c), "kg")},
                   {"bits_per_kg", quantity(physics::bits_per_kg(temperature, c), "bit/kg")},
                   {"silicon_baseline", quantity(physics::device_bits_per_kg(1.6e-3, 1e12), "bit/kg")},
                   {"applicability", "classical equilibrium memory only; not for quantum carriers"}},
              0};
    };
  });

  double radius_ly = physics::kDefaultUniverseRadiusLy;
  double age_s = physics::kDefaultUniverseAgeS;
  std::string universe_scenario;
  auto* universe_cmd = physics_cmd->add_subcommand(
      "universe", "Flat-universe information budget: rho_c = 3 H0^2 / (8 pi G), V = 4/3 pi L^3, m = rho_c V, "
                  "I = 4 m C^2 t / h.");
  universe_cmd->add_option("--radius-ly", radius_ly, "Radius of the observable universe, light-years");
  universe_cmd->add_option("--age", age_s, "Age, s");
  universe_cmd->add_option("--scenario", universe_scenario, "JSON file with radius_ly and age_s");
  universe_cmd->callback([&] {
    action = [&]() -> Outcome {
      double r = radius_ly;
      double a = age_s;
      if (!universe_scenario.empty()) {
        const auto j = io::read_json_file(universe_scenario);
        r = j.value("radius_ly", r);
        a = j.value("age_s", a);
      }
      return {universe_json(physics::universe_info(resolve_constants(constants), r, a)), 0};
    };
  });

  auto* demo_cmd = app.add_subcommand("demo", "Run the built-in penguin picture and universe scenarios end to end");
  demo_cmd->callback([&] {
    action = [&]() -> Outcome {
      auto penguin = penguin_demo();
      Json universe = universe_json(physics::universe_info(resolve_constants(constants)));
      Json j{{"penguin", penguin.report}, {"universe", universe}};
      j["summary"] = "penguin: valid, restorable, volume 8388608 bit; universe: " + universe["summary"].get<std::string>();
      return {j, penguin.status};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    const Outcome outcome = action();
    const std::string text = format == "text" ? render_text(outcome.report) : outcome.report.dump(2) + "\n";
    if (output.empty()) {
      out << text;
    } else {
      std::ofstream file(output);
      if (!file) {
        err << "error: cannot write '" << output << "'\n";
        return 2;
      }
      file << text;
    }
    return outcome.status;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::Parse ? 2 : 1;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace oit::cli
