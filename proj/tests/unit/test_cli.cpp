#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oitkit/core.hpp"
#include "oitkit/io.hpp"
#include "oitkit/metrics.hpp"

using namespace oit;
using io::Json;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "oitkit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

const std::string fixtures = OITKIT_FIXTURES_DIR;

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "oitkit-cli-tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("validate the penguin picture") {
  const auto r = run({"validate", fixtures + "/penguin.json"});
  CHECK(r.status == 0);
  CHECK(Json::parse(r.out)["summary"] == "valid, restorable");
  const auto text = run({"--format", "text", "validate", fixtures + "/penguin.json"});
  CHECK(text.out.ends_with("valid, restorable\n"));
}

TEST_CASE("invalid model exits with a domain error") {
  auto j = Json::parse(cli::penguin_model_json());
  j["carriers"] = Json::array();
  j["measures"]["carriers"] = Json::object();
  const auto path = scratch("no-carriers.json");
  write(path, j.dump());
  const auto r = run({"validate", path.string()});
  CHECK(r.status == 1);
  const auto report = Json::parse(r.out);
  CHECK(report["summary"] == "invalid");
  CHECK(r.out.find("empty-carriers") != std::string::npos);

  const auto m = run({"metrics", path.string()});
  CHECK(m.status == 1);
  CHECK(m.err.find("empty-carriers") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"bogus"}).status == 2);
  CHECK(run({}).status == 2);
  CHECK(run({"validate"}).status == 2);
  CHECK(run({"validate", "/nonexistent.json"}).status == 2);
  CHECK(run({"--format", "xml", "validate", fixtures + "/penguin.json"}).status == 2);
  CHECK(run({"classical", "entropy", "--p", "a,b"}).status == 2);
  const auto path = scratch("broken.json");
  write(path, "{not json");
  CHECK(run({"validate", path.string()}).status == 2);
}

TEST_CASE("domain errors exit with 1") {
  CHECK(run({"classical", "entropy", "--p", "0.5,0.6"}).status == 1);
  CHECK(run({"classical", "asl", "--algorithm", "bisection", "--n", "6"}).status == 1);
  CHECK(run({"restore", fixtures + "/penguin.json", "--index", "4"}).status == 1);
}

TEST_CASE("penguin fixture equals the built-in model") {
  CHECK(io::load_model(fixtures + "/penguin.json") == io::model_from_json(Json::parse(cli::penguin_model_json())));
}

TEST_CASE("metrics report") {
  const auto r = run({"metrics", fixtures + "/penguin.json"});
  CHECK(r.status == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["volume"]["value"] == 8388608.0);
  CHECK(j["delay"]["value"] == "2599.99");
  CHECK(j["duration"]["value"] == "0.01");
  CHECK(j["sampling_rate"]["value"].is_null());

  const auto gaps = run({"metrics", fixtures + "/penguin.json", "--gaps", "1000.002:1000.004"});
  CHECK(gaps.status == 1);

  const auto d = run({"metrics", fixtures + "/penguin.json", "--restored", "[1, 3]", "--truth", "[1, 2]"});
  CHECK(Json::parse(d.out)["distortion"]["value"] == 1.0);
}

TEST_CASE("mismatch against a target") {
  auto j = Json::parse(cli::penguin_model_json());
  j["reflection"]["intervals"][0][1] = "3602";
  const auto path = scratch("later.json");
  write(path, j.dump());
  const auto r = run({"metrics", fixtures + "/penguin.json", "--target", path.string()});
  CHECK(Json::parse(r.out)["mismatch"]["value"] == 2.0);
  const auto w = run({"--weights", "0,0,0,0,0.5,0", "metrics", fixtures + "/penguin.json", "--target", path.string()});
  CHECK(Json::parse(w.out)["mismatch"]["value"] == 1.0);
}

TEST_CASE("restore") {
  const auto r = run({"restore", fixtures + "/penguin.json", "--index", "0"});
  CHECK(r.status == 0);
  CHECK(Json::parse(r.out)["state"]["subjects"].size() == 3);
}

TEST_CASE("chain output re-validates and reloads") {
  const auto out_path = scratch("composed.json");
  const auto r = run({"--output", out_path.string(), "chain", fixtures + "/chain3.json"});
  REQUIRE(r.status == 0);
  const auto composed = io::load_model(out_path);
  CHECK(validate(composed).valid());
  CHECK(delay(composed) == Seconds::parse("6"));
  CHECK(io::to_json(composed) == io::read_json_file(out_path));
  const auto v = run({"validate", out_path.string()});
  CHECK(v.status == 0);
  const auto m = run({"metrics", out_path.string()});
  CHECK(Json::parse(m.out)["delay"]["value"] == "6");
}

TEST_CASE("reports are deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"metrics", fixtures + "/penguin.json"},
           {"chain", fixtures + "/chain3.json"},
           {"classical", "kalman", fixtures + "/kalman_scalar.json"},
           {"physics", "universe"},
           {"demo"}}) {
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("classical subcommands") {
  CHECK(Json::parse(run({"classical", "entropy", "--p", "0.5,0.25,0.25"}).out)["min_volume"]["value"] == 1.5);
  CHECK(Json::parse(run({"classical", "chain-delay", "--delays", "1,2,3"}).out)["total_delay"]["value"] == "6");
  CHECK(Json::parse(run({"classical", "asl", "--algorithm", "sequential", "--n", "7"}).out)["asl"] == 4.0);
  CHECK(Json::parse(run({"classical", "metcalfe", "--nodes", "4", "--model", fixtures + "/network4.json"}).out)["equal"] ==
        true);
  const auto k = Json::parse(run({"classical", "kalman", fixtures + "/kalman_scalar.json"}).out);
  CHECK(k.dump().find("1.333333333333") != std::string::npos);
  CHECK(run({"classical", "nyquist", "--period", "0.5", "--rate", "1"}).status == 0);
  CHECK(run({"classical", "radar", "--pt", "1e6", "--gt", "1e3", "--ae", "1", "--smin", "1e-13", "--sigma", "1"}).status == 0);
  CHECK(run({"classical", "rayleigh", "--wavelength", "500e-9", "--aperture", "5e-3"}).status == 0);
  CHECK(run({"classical", "mtbf", "--sessions", "0:10,0:30"}).status == 0);
}

TEST_CASE("physics subcommands") {
  const auto u = run({"--format", "text", "physics", "universe", "--constants", "paper"});
  CHECK(u.status == 0);
  CHECK(u.out.ends_with("I ≈ 6.2e122 qubit\n"));
  const auto rate = Json::parse(run({"physics", "unit-mass-rate"}).out);
  CHECK(rate.dump().find("deviation") != std::string::npos);
  CHECK(run({"physics", "bit-mass", "--temperature", "300"}).status == 0);
  CHECK(run({"physics", "quantum-volume", "--energy", "1e-20", "--time", "1e-10"}).status == 0);
  CHECK(run({"physics", "carrier-volume", "--quanta", "1e30", "--regime", "near-zero"}).status == 0);
  CHECK(run({"physics", "carrier-volume", "--mass", "1", "--regime", "near-zero"}).status == 1);
  CHECK(run({"--constants", "codata", "physics", "universe"}).status == 0);
  CHECK(run({"--constants", "/nonexistent.json", "physics", "universe"}).status == 2);
  CHECK(run({"physics", "universe", "--scenario", fixtures + "/universe.json"}).status == 0);
}

TEST_CASE("demo runs both scenarios") {
  const auto r = run({"demo"});
  CHECK(r.status == 0);
  const auto j = Json::parse(r.out);
  CHECK(j.contains("penguin"));
  CHECK(j.contains("universe"));
}

TEST_CASE("every subcommand has help") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"validate"}, {"metrics"}, {"restore"}, {"chain"}, {"demo"},
           {"classical", "entropy"}, {"classical", "kalman"}, {"classical", "asl"}, {"classical", "search"},
           {"physics", "universe"}, {"physics", "quantum-volume"}, {"physics", "carrier-volume"}}) {
    auto with_help = args;
    with_help.push_back("--help");
    const auto r = run(with_help);
    CHECK(r.status == 0);
    CHECK(r.out.size() > 40);
  }
}

TEST_CASE("number formatting and text rendering") {
  CHECK(cli::format_sig(6.196e122, 2) == "6.2e122");
  CHECK(cli::format_sig(7.857e-27, 2) == "7.9e-27");
  CHECK(cli::format_sig(3.0, 2) == "3.0");
  const auto text = cli::render_text(Json::parse(R"({"summary": "done", "a": {"b": 1}, "c": [1, 2]})"));
  CHECK(text == "a.b: 1\nc: [1,2]\ndone\n");
}
