#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "evfusion/focal_set.hpp"
#include "evfusion/frame.hpp"
#include "evfusion/mass_function.hpp"
#include "evfusion/rng.hpp"
#include "evfusion/rules.hpp"

namespace evfusion {

using EmitterId = std::size_t;

/// Parameters of the synthetic ESM target-identification experiment.
/// Defaults: 135 targets, truth at index 47 with a look-alike at 48,
/// false-alarm rate 0.3, 25 reports, report bba {A: 0.8, Θ: 0.2}.
/// Indices are 0-based.
struct ScenarioConfig {
  std::size_t n_targets = 135;
  std::size_t n_emitters = 60;
  std::size_t min_emitters_per_target = 2;
  std::size_t max_emitters_per_target = 4;
  std::size_t truth_index = 47;
  std::optional<std::size_t> similar_target = 48;
  double pfa = 0.3;
  std::size_t n_reports = 25;
  double report_mass = 0.8;
  RuleId rule = RuleId::PCR;
  std::uint64_t seed = 1;
};

/// Throws InfeasibleConfig describing the first problem found.
void check_config(const ScenarioConfig& config);

/// Platform data base reduced to the emitter feature.
///
/// Invariants after `build_pdb`:
///  - every target owns at least one emitter;
///  - `owners[e]` is exactly the set of targets listing emitter e;
///  - the similar target (if any) owns the truth's emitters minus one;
///  - every other target shares at most one emitter with the truth;
///  - `x_emitters` (the truth's) and `y_emitters` are both non-empty.
struct PlatformDatabase {
  Frame frame;
  std::vector<std::vector<EmitterId>> target_emitters;
  std::vector<FocalSet> owners;
  /// Emitters of the observed target.
  std::vector<EmitterId> x_emitters;
  /// Emitters of targets sharing an emitter with the truth, minus X.
  std::vector<EmitterId> y_emitters;
};

PlatformDatabase build_pdb(const ScenarioConfig& config, Rng& rng);

struct Report {
  EmitterId emitter;
  /// Every target owning the reported emitter.
  FocalSet targets;
  bool false_alarm;
};

/// With probability 1 - pfa the emitter is uniform over X, else over Y.
Report gen_report(const PlatformDatabase& pdb, const ScenarioConfig& config, Rng& rng);

/// {report_set: report_mass, Θ: 1 - report_mass}. Throws InvalidArgument on
/// an empty report set or report_mass outside (0, 1].
MassFunction report_bba(const FocalSet& report_set, const Frame& frame, double report_mass);

struct TrajectoryRecord {
  std::size_t step;
  EmitterId reported_emitter;
  std::size_t report_set_size;
  /// Conflict between the fused state and the new report, before fusion.
  double conflict_k12;
  double betp_truth;
  std::optional<double> betp_similar;
  std::size_t decided_index;
  bool tie;
};

struct ScenarioRun {
  ScenarioConfig config;
  std::vector<TrajectoryRecord> records;
  MassFunction final_state;
  /// 1-based step at which the rule could not be applied (Dempster, k12 = 1).
  std::optional<std::size_t> failed_at;
  std::string failure;
};

/// Sequential fusion: state starts vacuous and each report bba is fused in
/// arrival order. The random stream is consumed by the PDB and the reports
/// only, so every rule sees the same reports for a given seed.
/// Throws InvalidArgument for the Smets rule (open-world states cannot be
/// pignistified) and InfeasibleConfig for a bad configuration.
ScenarioRun run_scenario(const ScenarioConfig& config);

/// CSV header used by `trajectory_csv`.
inline constexpr const char* kTrajectoryHeader =
    "step,rule,emitter,set_size,k12,betp_truth,betp_similar,decided,tie";

std::string trajectory_csv(const ScenarioRun& run);

}  // namespace evfusion
