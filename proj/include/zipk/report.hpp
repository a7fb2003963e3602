#pragma once

// Versioned JSON reports for the command-line jobs, and their text rendering.

#include <string>
#include <string_view>

#include "zipk/checks.hpp"
#include "zipk/error.hpp"
#include "zipk/job.hpp"
#include "zipk/pipeline.hpp"

namespace zipk {

inline constexpr int kReportSchema = 1;

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitResource = 4;

std::string to_string(ValidationError::Kind kind);

/// Commands: validate, k0, k0-torus, hecke-check, demo-counterexample.
/// Validation and resource failures are recorded in an "error" section
/// after whatever was computed; ParseError propagates.
Json run_job(std::string_view command, const JobSpec& job);

/// 0, or the exit code matching the report's error section.
int exit_code(const Json& report);

/// Indented plain-text view of a report; a function of the JSON alone.
std::string render_text(const Json& report);

// Sections, exposed for tests.
Json group_json(const RootDatum& rd);
Json module_json(const RingPtr& ring, const QuotientModule& module, std::uint32_t bound);
Json kunneth_json(const KunnethReport& r);
Json theta_json(const ThetaReport& r);
Json hecke_json(const HeckeReport& r);
Json steinberg_json(const SteinbergReport& r);
Json counterexample_json(const CounterexampleReport& r);

}  // namespace zipk
