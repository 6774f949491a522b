#include "evfusion/scenario.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <set>
#include <sstream>

#include "evfusion/combination.hpp"
#include "evfusion/decision.hpp"
#include "evfusion/errors.hpp"
#include "evfusion/format.hpp"

namespace evfusion {

namespace {

std::vector<EmitterId> draw_distinct(std::size_t pool, std::size_t k, Rng& rng) {
  std::vector<EmitterId> all(pool);
  std::iota(all.begin(), all.end(), EmitterId{0});
  for (std::size_t i = 0; i < k; ++i) std::swap(all[i], all[i + rng.below(pool - i)]);
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

bool owns(const std::vector<EmitterId>& emitters, EmitterId e) {
  return std::binary_search(emitters.begin(), emitters.end(), e);
}

// Uniform pick from the emitters outside both `a` and `b`; nullopt if none.
std::optional<EmitterId> pick_outside(std::size_t pool, const std::vector<EmitterId>& a,
                                      const std::vector<EmitterId>& b, Rng& rng) {
  std::vector<EmitterId> free;
  for (EmitterId e = 0; e < pool; ++e) {
    if (!owns(a, e) && !owns(b, e)) free.push_back(e);
  }
  if (free.empty()) return std::nullopt;
  return free[rng.below(free.size())];
}

std::vector<EmitterId> compute_y(const std::vector<std::vector<EmitterId>>& targets,
                                 std::size_t truth) {
  const auto& x = targets[truth];
  std::set<EmitterId> y;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    if (t == truth) continue;
    const bool shares = std::any_of(targets[t].begin(), targets[t].end(),
                                    [&](EmitterId e) { return owns(x, e); });
    if (!shares) continue;
    for (const EmitterId e : targets[t]) {
      if (!owns(x, e)) y.insert(e);
    }
  }
  return {y.begin(), y.end()};
}

std::vector<std::string> target_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("t" + std::to_string(i));
  return labels;
}

}  // namespace

void check_config(const ScenarioConfig& c) {
  auto fail = [](const std::string& msg) { throw InfeasibleConfig(msg); };
  if (c.n_targets < 2) fail("n_targets must be at least 2");
  if (c.truth_index >= c.n_targets) fail("truth_index must be below n_targets");
  if (c.similar_target) {
    if (*c.similar_target >= c.n_targets) fail("similar_target must be below n_targets");
    if (*c.similar_target == c.truth_index) fail("similar_target must differ from truth_index");
    if (c.n_targets < 3) fail("a similar target needs n_targets >= 3");
  }
  if (c.min_emitters_per_target < 1) fail("emitters per target must be at least 1");
  if (c.min_emitters_per_target > c.max_emitters_per_target) {
    fail("emitters_per_target range is empty");
  }
  if (c.max_emitters_per_target < 2) fail("the truth needs at least 2 emitters");
  if (c.n_emitters < c.max_emitters_per_target) {
    fail("n_emitters is smaller than emitters per target");
  }
  if (c.n_emitters <= 2) fail("n_emitters must exceed 2 so that Y can be non-empty");
  if (!(c.pfa >= 0.0 && c.pfa <= 1.0)) fail("pfa must lie in [0, 1]");
  if (!(c.report_mass > 0.0 && c.report_mass <= 1.0)) fail("report_mass must lie in (0, 1]");
  if (c.rule == RuleId::Smets) fail("the smets rule yields open-world states; not supported here");
}

PlatformDatabase build_pdb(const ScenarioConfig& config, Rng& rng) {
  check_config(config);
  const std::size_t n = config.n_targets;
  const std::size_t pool = config.n_emitters;
  const std::size_t truth = config.truth_index;
  const std::size_t span = config.max_emitters_per_target - config.min_emitters_per_target + 1;

  std::vector<std::vector<EmitterId>> targets(n);
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t k = config.min_emitters_per_target + rng.below(span);
    if (t == truth) k = std::max<std::size_t>(k, 2);
    targets[t] = draw_distinct(pool, k, rng);
  }
  const std::vector<EmitterId>& x = targets[truth];

  if (config.similar_target) {
    std::vector<EmitterId> similar = x;
    similar.erase(similar.begin() + static_cast<std::ptrdiff_t>(rng.below(similar.size())));
    targets[*config.similar_target] = std::move(similar);
  }

  // Only the similar target shares more than one emitter with the truth.
  // Surplus shared emitters are swapped for emitters outside X.
  for (std::size_t t = 0; t < n; ++t) {
    if (t == truth || t == config.similar_target) continue;
    auto& mine = targets[t];
    std::vector<EmitterId> shared;
    std::set_intersection(mine.begin(), mine.end(), x.begin(), x.end(), std::back_inserter(shared));
    while (shared.size() > 1) {
      const auto drop = shared.begin() + static_cast<std::ptrdiff_t>(rng.below(shared.size()));
      mine.erase(std::find(mine.begin(), mine.end(), *drop));
      shared.erase(drop);
      if (const auto extra = pick_outside(pool, mine, x, rng)) {
        mine.insert(std::upper_bound(mine.begin(), mine.end(), *extra), *extra);
      }
    }
  }

  std::vector<EmitterId> y = compute_y(targets, truth);
  if (y.empty()) {
    // Turn one unrelated target into a look-alike sharing a single truth emitter.
    std::vector<std::size_t> candidates;
    for (std::size_t t = 0; t < n; ++t) {
      if (t != truth && t != config.similar_target) candidates.push_back(t);
    }
    const auto outside = pick_outside(pool, x, {}, rng);
    if (candidates.empty() || !outside) {
      throw InfeasibleConfig("cannot build a non-empty set Y of look-alike emitters");
    }
    const std::size_t t = candidates[rng.below(candidates.size())];
    targets[t] = {x[rng.below(x.size())], *outside};
    std::sort(targets[t].begin(), targets[t].end());
    y = compute_y(targets, truth);
  }

  PlatformDatabase pdb{Frame(target_labels(n)), targets, {}, targets[truth], std::move(y)};
  pdb.owners.assign(pool, FocalSet(n));
  for (std::size_t t = 0; t < n; ++t) {
    for (const EmitterId e : pdb.target_emitters[t]) pdb.owners[e].set(t);
  }
  return pdb;
}

Report gen_report(const PlatformDatabase& pdb, const ScenarioConfig& config, Rng& rng) {
  const bool false_alarm = rng.bernoulli(config.pfa);
  const auto& source = false_alarm ? pdb.y_emitters : pdb.x_emitters;
  const EmitterId e = source[rng.below(source.size())];
  return {e, pdb.owners[e], false_alarm};
}

MassFunction report_bba(const FocalSet& report_set, const Frame& frame, double report_mass) {
  if (report_set.none()) throw InvalidArgument("report set is empty");
  if (!(report_mass > 0.0 && report_mass <= 1.0)) {
    throw InvalidArgument("report mass must lie in (0, 1]");
  }
  return MassFunction(frame, {{report_set, report_mass}, {frame.full(), 1.0 - report_mass}});
}

ScenarioRun run_scenario(const ScenarioConfig& config) {
  if (config.rule == RuleId::Smets) {
    throw InvalidArgument("scenario runs need a closed-world rule; smets is open-world");
  }
  Rng rng(config.seed);
  const PlatformDatabase pdb = build_pdb(config, rng);
  ScenarioRun run{config, {}, vacuous(pdb.frame), std::nullopt, {}};
  run.records.reserve(config.n_reports);

  for (std::size_t step = 1; step <= config.n_reports; ++step) {
    const Report report = gen_report(pdb, config, rng);
    const MassFunction evidence = report_bba(report.targets, pdb.frame, config.report_mass);
    const double k12 = conflict(run.final_state, evidence).total;
    try {
      run.final_state = combine(config.rule, run.final_state, evidence);
    } catch (const TotalConflict& e) {
      run.failed_at = step;
      run.failure = e.what();
      break;
    }
    const PignisticDistribution p = betp(run.final_state);
    const Decision d = decide(p);
    TrajectoryRecord rec{step,
                         report.emitter,
                         report.targets.count(),
                         k12,
                         p.probs[config.truth_index],
                         std::nullopt,
                         d.index,
                         d.tie};
    if (config.similar_target) rec.betp_similar = p.probs[*config.similar_target];
    run.records.push_back(rec);
  }
  return run;
}

std::string trajectory_csv(const ScenarioRun& run) {
  std::ostringstream os;
  os << kTrajectoryHeader << '\n';
  const std::string_view rule = rule_name(run.config.rule);
  for (const auto& r : run.records) {
    os << r.step << ',' << rule << ',' << r.reported_emitter << ',' << r.report_set_size << ','
       << format_double(r.conflict_k12) << ',' << format_double(r.betp_truth) << ','
       << (r.betp_similar ? format_double(*r.betp_similar) : std::string()) << ','
       << r.decided_index << ',' << (r.tie ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace evfusion
