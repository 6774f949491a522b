#include <doctest.h>

#include <random>
#include <string>

#include "evfusion/combination.hpp"
#include "evfusion/errors.hpp"
#include "evfusion/format.hpp"
#include "evfusion/io.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace evfusion;

namespace {

std::string parse_error(std::string_view text) {
  try {
    io::parse_mass_function(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "accepted";
}

}  // namespace

TEST_CASE("format_double is shortest round-trip") {
  CHECK(format_double(0.8) == "0.8");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.1 + 0.2) == "0.30000000000000004");
  CHECK(std::stod(format_double(0.42 / 0.82)) == 0.42 / 0.82);
}

TEST_CASE("mass function text format") {
  const auto [m1, m2] = fixtures::example2();
  const std::string text = io::dump_mass_function(m2);
  CHECK(text.find("\"frame\"") != std::string::npos);
  CHECK(text.find("open_world") == std::string::npos);
  CHECK(max_abs_difference(io::parse_mass_function(text), m2) == 0.0);

  const MassFunction open = conjunctive(m1, m2);
  const MassFunction back = io::parse_mass_function(io::dump_mass_function(open));
  CHECK(back.open_world());
  CHECK(back.mass(open.frame().empty_set()) == open.mass(open.frame().empty_set()));

  const MassFunction minimal = io::parse_mass_function(
      R"({"frame": ["x", "y"], "masses": [{"set": ["y", "x"], "mass": 1}]})");
  CHECK(minimal.mass(minimal.frame().full()) == 1.0);
}

TEST_CASE("property: serialisation round-trips exactly") {
  std::mt19937_64 gen(6);
  for (int trial = 0; trial < 1000; ++trial) {
    const Frame f = oracle::letters(1 + trial % 5);
    const MassFunction m = trial % 2 ? oracle::random_dense_bba(f, gen) : oracle::random_sparse_bba(f, gen);
    const MassFunction back = io::parse_mass_function(io::dump_mass_function(m));
    CHECK(back.frame() == m.frame());
    CHECK(back.entries() == m.entries());
  }
}

TEST_CASE("parse errors name the location") {
  CHECK(parse_error("{\"frame\": [\"A\"],\n \"masses\": [,]}").rfind("line 2", 0) == 0);
  CHECK(parse_error(R"({"frame": ["A", "B"], "masses": [{"set": ["A"], "mass": 0.5}, {"set": ["C"], "mass": 0.5}]})")
            .rfind("masses[1].set[0]:", 0) == 0);
  CHECK(parse_error(R"({"frame": ["A", "B"], "masses": [{"set": [], "mass": 1}]})").rfind("masses[0].set:", 0) ==
        0);
  CHECK(parse_error(R"({"frame": ["A", "B"], "masses": [{"set": ["A"], "mass": "x"}]})")
            .rfind("masses[0].mass:", 0) == 0);
  CHECK(parse_error(R"({"frame": ["A", "B"], "masses": [{"set": ["A"], "mass": 0.5}, {"set": ["A"], "mass": 0.5}]})")
            .rfind("masses[1].set:", 0) == 0);
  CHECK(parse_error(R"({"frame": ["A", "A"], "masses": []})") != "accepted");
  CHECK(parse_error(R"({"masses": []})") != "accepted");
  CHECK(parse_error("[1]") != "accepted");
  CHECK_THROWS_AS(io::read_mass_function("/nonexistent/bba.json"), ParseError);
}

TEST_CASE("scenario config text format") {
  ScenarioConfig c;
  c.n_targets = 20;
  c.similar_target.reset();
  c.rule = RuleId::SACR;
  c.seed = 18446744073709551615ull;
  c.pfa = 0.1 + 0.2;
  const ScenarioConfig back = io::parse_scenario_config(io::dump_scenario_config(c));
  CHECK(back.n_targets == 20);
  CHECK_FALSE(back.similar_target.has_value());
  CHECK(back.rule == RuleId::SACR);
  CHECK(back.seed == c.seed);
  CHECK(back.pfa == c.pfa);
  CHECK(io::dump_scenario_config(back) == io::dump_scenario_config(c));

  const ScenarioConfig partial = io::parse_scenario_config(R"({"n_reports": 5, "emitters_per_target": 3})");
  CHECK(partial.n_reports == 5);
  CHECK(partial.min_emitters_per_target == 3);
  CHECK(partial.max_emitters_per_target == 3);
  CHECK(partial.n_targets == ScenarioConfig{}.n_targets);

  CHECK_THROWS_AS(io::parse_scenario_config(R"({"bogus": 1})"), ParseError);
  CHECK_THROWS_AS(io::parse_scenario_config(R"({"rule": "murphy"})"), ParseError);
  CHECK_THROWS_AS(io::parse_scenario_config(R"({"pfa": "high"})"), ParseError);
}

TEST_CASE("scenario metadata") {
  ScenarioConfig c;
  c.n_targets = 20;
  c.n_emitters = 20;
  c.truth_index = 7;
  c.similar_target = 8;
  c.n_reports = 3;
  const std::string meta = io::scenario_metadata(run_scenario(c));
  CHECK(meta.find("mt19937_64") != std::string::npos);
  CHECK(meta.find("\"steps_completed\": 3") != std::string::npos);
  CHECK(meta.find("\"n_targets\": 20") != std::string::npos);
}
