#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

namespace oit::cli {

// Runs one oitkit command line. Returns the process exit status:
// 0 success, 1 domain error (invalid model, missing measure, ...), 2 usage or
// parse error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Text rendering of a JSON report: one "path: value" line per leaf. A
// top-level "summary" string is printed bare as the last line.
std::string render_text(const nlohmann::ordered_json& report);

// Shortest-looking scientific form with the given significant digits,
// e.g. format_sig(6.196e122, 2) == "6.2e122".
std::string format_sig(double value, int digits);

// The built-in penguin picture model (same content as fixtures/penguin.json).
std::string penguin_model_json();

}  // namespace oit::cli
