#pragma once

// Job descriptions: a JSON or TOML file plus command-line overrides.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "zipk/lattice.hpp"
#include "zipk/rootdata.hpp"

namespace zipk {

using Json = nlohmann::ordered_json;

inline const std::vector<std::string> kCheckNames = {"kunneth", "theta", "hecke", "steinberg",
                                                     "counterexample"};

struct JobSpec {
  std::optional<std::string> preset;
  std::optional<RootDatum> explicit_group;
  std::optional<Weight> mu;
  long p = 2;
  std::optional<std::vector<std::string>> checks;  // k0 defaults to kunneth
  std::optional<long> window;
  std::optional<std::string> output;
  std::string format = "json";
  std::uint32_t max_degree = 60;
  std::optional<std::vector<std::vector<std::int64_t>>> twist;
  Integer module = 2;  // M = Z/module for the counterexample, 0 for Z
};

/// Fields of a job object; unknown keys and ill-typed values throw ParseError.
void apply_job_json(JobSpec& job, const Json& j);
Json toml_to_json(std::string_view text);
/// Reads a .toml file as TOML and anything else as JSON.
JobSpec load_job_file(const std::string& path);

/// Comma-separated integers, e.g. "1,0,-2".
std::vector<std::int64_t> parse_int_list(std::string_view text);
/// Rows separated by ';', entries by ',', e.g. "0,1;1,0".
std::vector<std::vector<std::int64_t>> parse_int_matrix(std::string_view text);
/// "Z" or "Z/n".
Integer parse_module(std::string_view text);
std::vector<std::string> parse_checks(std::string_view text);

/// The preset or explicit root datum with the twist attached; checks the
/// cocharacter length. Root-datum axioms are checked separately.
RootDatum resolve_group(const JobSpec& job);

}  // namespace zipk
