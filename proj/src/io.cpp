#include "evfusion/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "evfusion/errors.hpp"

namespace evfusion::io {

namespace {

using Json = nlohmann::ordered_json;

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError("malformed JSON", line_column(text, at));
  }
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file", path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("write failed for " + path.string());
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field '") + key + "'", where);
  return *it;
}

std::size_t as_index(const Json& v, const std::string& where) {
  if (!v.is_number_unsigned()) throw ParseError("expected a non-negative integer", where);
  return v.get<std::size_t>();
}

double as_number(const Json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError("expected a number", where);
  return v.get<double>();
}

}  // namespace

MassFunction parse_mass_function(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("expected a JSON object", "$");

  const Json& labels_json = field(doc, "frame", "$");
  if (!labels_json.is_array()) throw ParseError("expected an array of labels", "frame");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < labels_json.size(); ++i) {
    if (!labels_json[i].is_string()) {
      throw ParseError("expected a string", "frame[" + std::to_string(i) + "]");
    }
    labels.push_back(labels_json[i].get<std::string>());
  }
  std::optional<Frame> frame;
  try {
    frame.emplace(std::move(labels));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), "frame");
  }

  World world = World::Closed;
  if (const auto it = doc.find("open_world"); it != doc.end()) {
    if (!it->is_boolean()) throw ParseError("expected true or false", "open_world");
    if (it->get<bool>()) world = World::Open;
  }

  const Json& masses = field(doc, "masses", "$");
  if (!masses.is_array()) throw ParseError("expected an array", "masses");
  MassFunction::Entries entries;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    const std::string where = "masses[" + std::to_string(i) + "]";
    const Json& entry = masses[i];
    if (!entry.is_object()) throw ParseError("expected an object", where);
    const Json& set_json = field(entry, "set", where);
    if (!set_json.is_array()) throw ParseError("expected an array of labels", where + ".set");
    FocalSet set(frame->size());
    for (std::size_t j = 0; j < set_json.size(); ++j) {
      const std::string at = where + ".set[" + std::to_string(j) + "]";
      if (!set_json[j].is_string()) throw ParseError("expected a string", at);
      const auto idx = frame->index_of(set_json[j].get<std::string>());
      if (!idx) throw ParseError("label '" + set_json[j].get<std::string>() + "' not in frame", at);
      set.set(*idx);
    }
    if (set.none() && world == World::Closed) {
      throw ParseError("empty set requires \"open_world\": true", where + ".set");
    }
    const double mass = as_number(field(entry, "mass", where), where + ".mass");
    if (!entries.emplace(set, mass).second) {
      throw ParseError("set " + frame->format(set) + " listed twice", where + ".set");
    }
  }
  return MassFunction(*frame, std::move(entries), world);
}

MassFunction read_mass_function(const std::filesystem::path& path) {
  const std::string text = slurp(path);
  try {
    return parse_mass_function(text);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), path.string());
  }
}

std::string dump_mass_function(const MassFunction& m) {
  Json doc;
  doc["frame"] = Json::array();
  for (const auto& l : m.frame().labels()) doc["frame"].push_back(l);
  doc["masses"] = Json::array();
  for (const auto& [set, mass] : m) {
    Json labels = Json::array();
    set.for_each_member([&](std::size_t i) { labels.push_back(m.frame().label(i)); });
    doc["masses"].push_back({{"set", std::move(labels)}, {"mass", mass}});
  }
  if (m.open_world()) doc["open_world"] = true;
  return doc.dump(2) + "\n";
}

void write_mass_function(const std::filesystem::path& path, const MassFunction& m) {
  spit(path, dump_mass_function(m));
}

ScenarioConfig parse_scenario_config(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("expected a JSON object", "$");
  ScenarioConfig c;
  for (const auto& [key, value] : doc.items()) {
    if (key == "n_targets") {
      c.n_targets = as_index(value, key);
    } else if (key == "n_emitters") {
      c.n_emitters = as_index(value, key);
    } else if (key == "emitters_per_target") {
      if (value.is_array() && value.size() == 2) {
        c.min_emitters_per_target = as_index(value[0], key + "[0]");
        c.max_emitters_per_target = as_index(value[1], key + "[1]");
      } else {
        const std::size_t k = as_index(value, key);
        c.min_emitters_per_target = c.max_emitters_per_target = k;
      }
    } else if (key == "truth_index") {
      c.truth_index = as_index(value, key);
    } else if (key == "similar_target") {
      if (value.is_null()) {
        c.similar_target.reset();
      } else {
        c.similar_target = as_index(value, key);
      }
    } else if (key == "pfa") {
      c.pfa = as_number(value, key);
    } else if (key == "n_reports") {
      c.n_reports = as_index(value, key);
    } else if (key == "report_mass") {
      c.report_mass = as_number(value, key);
    } else if (key == "rule") {
      if (!value.is_string()) throw ParseError("expected a rule name", key);
      const auto rule = parse_rule(value.get<std::string>());
      if (!rule) throw ParseError("unknown rule '" + value.get<std::string>() + "'", key);
      c.rule = *rule;
    } else if (key == "seed") {
      if (!value.is_number_unsigned()) throw ParseError("expected an unsigned integer", key);
      c.seed = value.get<std::uint64_t>();
    } else {
      throw ParseError("unknown configuration key", key);
    }
  }
  return c;
}

ScenarioConfig read_scenario_config(const std::filesystem::path& path) {
  const std::string text = slurp(path);
  try {
    return parse_scenario_config(text);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), path.string());
  }
}

namespace {

Json config_json(const ScenarioConfig& c) {
  Json doc;
  doc["n_targets"] = c.n_targets;
  doc["n_emitters"] = c.n_emitters;
  doc["emitters_per_target"] = {c.min_emitters_per_target, c.max_emitters_per_target};
  doc["truth_index"] = c.truth_index;
  doc["similar_target"] = c.similar_target ? Json(*c.similar_target) : Json(nullptr);
  doc["pfa"] = c.pfa;
  doc["n_reports"] = c.n_reports;
  doc["report_mass"] = c.report_mass;
  doc["rule"] = std::string(rule_name(c.rule));
  doc["seed"] = c.seed;
  return doc;
}

}  // namespace

std::string dump_scenario_config(const ScenarioConfig& config) {
  return config_json(config).dump(2) + "\n";
}

std::string scenario_metadata(const ScenarioRun& run) {
  Json doc;
  doc["config"] = config_json(run.config);
  doc["rng"] = std::string(Rng::kAlgorithm);
  doc["steps_completed"] = run.records.size();
  doc["failed_at"] = run.failed_at ? Json(*run.failed_at) : Json(nullptr);
  if (run.failed_at) doc["failure"] = run.failure;
  return doc.dump(2) + "\n";
}

}  // namespace evfusion::io
