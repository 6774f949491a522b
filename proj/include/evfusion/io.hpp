#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "evfusion/mass_function.hpp"
#include "evfusion/scenario.hpp"

namespace evfusion::io {

// Mass-function text format (UTF-8 JSON):
//
//   {"frame": ["A", "B"],
//    "masses": [{"set": ["A"], "mass": 0.6}, {"set": ["A", "B"], "mass": 0.4}],
//    "open_world": false}
//
// An empty "set" denotes ∅ and is accepted only with "open_world": true.
// "open_world" may be omitted (closed world). Masses are written in the
// shortest form that round-trips exactly.

/// Throws ParseError with the line/column or the JSON path of the bad field.
MassFunction parse_mass_function(std::string_view text);
MassFunction read_mass_function(const std::filesystem::path& path);

std::string dump_mass_function(const MassFunction& m);
void write_mass_function(const std::filesystem::path& path, const MassFunction& m);

/// Scenario configuration as a JSON object keyed by ScenarioConfig field
/// names. Missing keys keep their defaults; "emitters_per_target" is a
/// [min, max] pair, "rule" a rule name, "similar_target" may be null.
ScenarioConfig parse_scenario_config(std::string_view text);
ScenarioConfig read_scenario_config(const std::filesystem::path& path);
std::string dump_scenario_config(const ScenarioConfig& config);

/// Sidecar describing a trajectory file: full config, RNG algorithm, and
/// `failed_at` when the rule stopped early.
std::string scenario_metadata(const ScenarioRun& run);

}  // namespace evfusion::io
