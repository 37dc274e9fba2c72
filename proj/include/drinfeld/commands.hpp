#pragma once

// CLI command implementations. Every command returns a JSON report; the
// text form is rendered from it.

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "drinfeld/drinfeld.hpp"
#include "drinfeld/laurent.hpp"

namespace drinfeld {

enum class ExitCode : int { Pass = 0, VerificationFailed = 1, InputError = 2, NumericError = 3 };

struct RunConfig {
  std::string command;
  std::string curve_path;
  /// Used instead of curve_path when set.
  std::optional<CurveSpec> curve;
  int prec = 40;
  std::uint64_t seed = 1;
  std::string out = "text";
  std::string ideal;
  std::string modulus;
  std::string suite = "all";
  /// Degrees summed beyond the certified truncation degree.
  int extra_degrees = 0;
  bool timing = false;
};

struct CommandResult {
  ExitCode exit_code = ExitCode::Pass;
  nlohmann::json report;
};

/// Runs the command; errors become reports with an "error" entry and the
/// matching exit code.
CommandResult run_command(const RunConfig& cfg);

std::string render_text(const nlohmann::json& report);

/// {start, prec, coeffs}; coefficients of F_q with q prime as integers,
/// otherwise as base-p digit tuples (lowest first).
nlohmann::json series_json(const LaurentSeries& s);
nlohmann::json twisted_json(const TwistedSeries& f, const DrinfeldModule* weights = nullptr);

const char* command_names();

}  // namespace drinfeld
