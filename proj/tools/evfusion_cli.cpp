// evfusion command-line front end.
//
// Exit codes: 0 ok, 1 usage, 2 unreadable/invalid input or infeasible
// config, 3 frame mismatch, 4 total conflict under Dempster, 5 output
// could not be written. Data goes to stdout, diagnostics to stderr.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "evfusion/combination.hpp"
#include "evfusion/decision.hpp"
#include "evfusion/errors.hpp"
#include "evfusion/format.hpp"
#include "evfusion/io.hpp"
#include "evfusion/rules.hpp"
#include "evfusion/scenario.hpp"

namespace fs = std::filesystem;
using namespace evfusion;

namespace {

enum Exit : int {
  kOk = 0,
  kUsage = 1,
  kBadInput = 2,
  kFrameMismatch = 3,
  kTotalConflict = 4,
  kWriteFailed = 5,
};

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error("cannot write " + path.string());
}

int run_combine(const std::string& rule_text, const std::string& in1, const std::string& in2,
                const std::string& out) {
  const auto rule = parse_rule(rule_text);
  if (!rule) {
    std::cerr << "error: unknown rule '" << rule_text << "' (see `evfusion rules`)\n";
    return kUsage;
  }
  const MassFunction m1 = io::read_mass_function(in1);
  const MassFunction m2 = io::read_mass_function(in2);
  const MassFunction fused = combine(*rule, m1, m2);
  if (out.empty() || out == "-") {
    std::cout << io::dump_mass_function(fused);
  } else {
    io::write_mass_function(out, fused);
  }
  return kOk;
}

int run_conflict(const std::string& in1, const std::string& in2) {
  const MassFunction m1 = io::read_mass_function(in1);
  const MassFunction m2 = io::read_mass_function(in2);
  const ConflictDecomposition dec = conflict(m1, m2);
  std::cout << format_double(dec.total) << '\n';
  for (const auto& p : dec.pairs) {
    std::cout << m1.frame().format(p.x) << ',' << m1.frame().format(p.y) << ','
              << format_double(p.product) << '\n';
  }
  return kOk;
}

int run_betp(const std::string& in, bool decision_only) {
  const MassFunction m = io::read_mass_function(in);
  const PignisticDistribution p = betp(m);
  if (decision_only) {
    const Decision d = decide(p);
    std::cout << m.frame().label(d.index) << ',' << format_double(d.probability) << ','
              << (d.tie ? "true" : "false") << '\n';
    return kOk;
  }
  std::cout << "hypothesis,betp\n";
  for (std::size_t i = 0; i < p.probs.size(); ++i) {
    std::cout << m.frame().label(i) << ',' << format_double(p.probs[i]) << '\n';
  }
  return kOk;
}

struct ScenarioArgs {
  std::string config;
  std::string out;
  std::string rules;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> targets;
  std::optional<std::size_t> reports;
  std::optional<double> pfa;
};

int run_scenario_cmd(const ScenarioArgs& args) {
  ScenarioConfig base = args.config.empty() ? ScenarioConfig{} : io::read_scenario_config(args.config);
  if (args.seed) base.seed = *args.seed;
  if (args.targets) base.n_targets = *args.targets;
  if (args.reports) base.n_reports = *args.reports;
  if (args.pfa) base.pfa = *args.pfa;

  std::vector<RuleId> rules;
  if (args.rules.empty()) {
    rules.push_back(base.rule);
  } else {
    for (const auto& name : split_csv(args.rules)) {
      const auto r = parse_rule(name);
      if (!r) {
        std::cerr << "error: unknown rule '" << name << "'\n";
        return kUsage;
      }
      rules.push_back(*r);
    }
  }
  for (const RuleId r : rules) {
    ScenarioConfig c = base;
    c.rule = r;
    check_config(c);
  }

  fs::create_directories(args.out);
  for (const RuleId r : rules) {
    ScenarioConfig c = base;
    c.rule = r;
    const ScenarioRun run = run_scenario(c);
    const std::string stem = std::string(rule_name(r)) + "_seed" + std::to_string(c.seed);
    write_text(fs::path(args.out) / (stem + ".csv"), trajectory_csv(run));
    write_text(fs::path(args.out) / (stem + ".json"), io::scenario_metadata(run));
    if (run.failed_at) {
      std::cerr << rule_name(r) << ": stopped at step " << *run.failed_at << ": " << run.failure
                << '\n';
    }
  }
  return kOk;
}

int run_rules() {
  for (const RuleId r : all_rules()) std::cout << rule_name(r) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Belief-function combination rules, pignistic decisions, and ESM scenario runs"};
  app.require_subcommand(1, 1);

  std::string rule, in1, in2, out;
  auto* combine_cmd = app.add_subcommand("combine", "Fuse two mass-function files");
  combine_cmd->add_option("--rule", rule, "Rule name")->required();
  combine_cmd->add_option("bba1", in1)->required();
  combine_cmd->add_option("bba2", in2)->required();
  combine_cmd->add_option("-o,--output", out, "Output file (stdout if omitted)");

  std::string c1, c2;
  auto* conflict_cmd = app.add_subcommand("conflict", "Print k12 and its disjoint focal pairs");
  conflict_cmd->add_option("bba1", c1)->required();
  conflict_cmd->add_option("bba2", c2)->required();

  std::string b_in;
  bool decision_only = false;
  auto* betp_cmd = app.add_subcommand("betp", "Pignistic probability of a mass-function file");
  betp_cmd->add_option("bba", b_in)->required();
  betp_cmd->add_flag("--decide", decision_only, "Print only the max-BetP hypothesis");

  ScenarioArgs sargs;
  auto* scenario_cmd = app.add_subcommand("scenario", "Run the ESM identification scenario");
  scenario_cmd->add_option("--config", sargs.config, "Scenario config file");
  scenario_cmd->add_option("--out", sargs.out, "Output directory")->required();
  scenario_cmd->add_option("--rules", sargs.rules, "Comma-separated rule names");
  scenario_cmd->add_option("--seed", sargs.seed, "Override the RNG seed");
  scenario_cmd->add_option("--targets", sargs.targets, "Override n_targets");
  scenario_cmd->add_option("--reports", sargs.reports, "Override n_reports");
  scenario_cmd->add_option("--pfa", sargs.pfa, "Override the false-alarm probability");

  auto* rules_cmd = app.add_subcommand("rules", "List rule names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*combine_cmd) return run_combine(rule, in1, in2, out);
    if (*conflict_cmd) return run_conflict(c1, c2);
    if (*betp_cmd) return run_betp(b_in, decision_only);
    if (*scenario_cmd) return run_scenario_cmd(sargs);
    if (*rules_cmd) return run_rules();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kBadInput;
  } catch (const FrameMismatch& e) {
    std::cerr << "frame mismatch: " << e.what() << '\n';
    return kFrameMismatch;
  } catch (const TotalConflict& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kTotalConflict;
  } catch (const InvalidMass& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kBadInput;
  } catch (const InfeasibleConfig& e) {
    std::cerr << "infeasible scenario config: " << e.what() << '\n';
    return kBadInput;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kBadInput;
  } catch (const Degenerate& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kWriteFailed;
  }
  return kUsage;
}
