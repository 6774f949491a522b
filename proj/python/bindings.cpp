#include <pybind11/pybind11.h>
#include <pybind11/functional.h>
#include <pybind11/stl.h>

#include "evfusion/combination.hpp"
#include "evfusion/decision.hpp"
#include "evfusion/errors.hpp"
#include "evfusion/io.hpp"
#include "evfusion/rules.hpp"
#include "evfusion/scenario.hpp"

namespace py = pybind11;
using namespace evfusion;

namespace {

// A set key may be a single label or any iterable of labels.
FocalSet to_set(const Frame& frame, const py::handle& key) {
  std::vector<std::string> labels;
  if (py::isinstance<py::str>(key)) {
    labels.push_back(key.cast<std::string>());
  } else {
    for (const auto& item : py::iter(key)) labels.push_back(item.cast<std::string>());
  }
  return frame.subset(labels);
}

py::object to_labels(const Frame& frame, const FocalSet& s) {
  py::set out;
  s.for_each_member([&](std::size_t i) { out.add(py::str(frame.label(i))); });
  return py::reinterpret_steal<py::object>(PyFrozenSet_New(out.ptr()));
}

MassFunction make_mass(const std::vector<std::string>& labels, const py::dict& masses,
                       bool open_world) {
  Frame frame(labels);
  std::vector<std::pair<FocalSet, double>> entries;
  for (const auto& [key, value] : masses) entries.emplace_back(to_set(frame, key), value.cast<double>());
  return MassFunction(frame, entries, open_world ? World::Open : World::Closed);
}

py::dict masses_of(const MassFunction& m) {
  py::dict out;
  for (const auto& [set, mass] : m) out[to_labels(m.frame(), set)] = mass;
  return out;
}

RuleId rule_from(const std::string& name) {
  const auto r = parse_rule(name);
  if (!r) throw InvalidArgument("unknown rule '" + name + "'");
  return *r;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Belief-function combination rules and the ESM identification scenario";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<FrameMismatch>(m, "FrameMismatch", base.ptr());
  py::register_exception<InvalidMass>(m, "InvalidMass", base.ptr());
  py::register_exception<TotalConflict>(m, "TotalConflict", base.ptr());
  py::register_exception<Degenerate>(m, "Degenerate", base.ptr());
  py::register_exception<InvalidBeta>(m, "InvalidBeta", base.ptr());
  py::register_exception<InfeasibleConfig>(m, "InfeasibleConfig", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<MassFunction>(m, "MassFunction")
      .def(py::init(&make_mass), py::arg("frame"), py::arg("masses"),
           py::arg("open_world") = false)
      .def_property_readonly("frame",
                             [](const MassFunction& self) {
                               return std::vector<std::string>(self.frame().labels().begin(),
                                                               self.frame().labels().end());
                             })
      .def_property_readonly("open_world", &MassFunction::open_world)
      .def("masses", &masses_of)
      .def("mass",
           [](const MassFunction& self, const py::object& key) {
             return self.mass(to_set(self.frame(), key));
           })
      .def("total", &MassFunction::total)
      .def("validate",
           [](const MassFunction& self) {
             std::vector<std::string> out;
             for (const auto& v : validate(self).violations) out.push_back(v.detail);
             return out;
           })
      .def("to_json", &io::dump_mass_function)
      .def_static("from_json", &io::parse_mass_function)
      .def("__len__", &MassFunction::size)
      .def("__repr__", [](const MassFunction& self) { return "MassFunction(" + to_string(self) + ")"; });

  m.def("vacuous", [](const std::vector<std::string>& labels) { return vacuous(Frame(labels)); });
  m.def("conjunctive", &conjunctive);
  m.def("disjunctive", &disjunctive);
  m.def("conflict", [](const MassFunction& a, const MassFunction& b) {
    const ConflictDecomposition d = conflict(a, b);
    py::list pairs;
    for (const auto& p : d.pairs) {
      pairs.append(py::make_tuple(to_labels(a.frame(), p.x), to_labels(a.frame(), p.y), p.product));
    }
    return py::make_tuple(d.total, pairs);
  });

  m.def("rules", [] {
    std::vector<std::string> out;
    for (const RuleId r : all_rules()) out.emplace_back(rule_name(r));
    return out;
  });
  m.def("combine", [](const std::string& rule, const MassFunction& a, const MassFunction& b) {
    return combine(rule_from(rule), a, b);
  });
  m.def("dempster", &dempster);
  m.def("smets", &smets);
  m.def("yager", &yager);
  m.def("dubois_prade", &dubois_prade);
  m.def("dsmh", &dsmh);
  m.def(
      "inagaki_generic",
      [](const MassFunction& a, const MassFunction& b, const py::dict& weights) {
        MassFunction::Entries w;
        for (const auto& [key, value] : weights) w[to_set(a.frame(), key)] += value.cast<double>();
        return inagaki_generic(a, b, WeightAssignment(a.frame(), std::move(w)));
      },
      py::arg("m1"), py::arg("m2"), py::arg("weights"));
  m.def("inagaki_extreme", &inagaki_extreme);
  m.def("sacr", &sacr);
  m.def("pcr", &pcr);
  m.def("acr_generic", &acr_generic, py::arg("m1"), py::arg("m2"), py::arg("beta"));
  m.def("sacr_coefficients", [](double k) {
    const AcrCoefficients c = sacr_coefficients(k);
    return py::make_tuple(c.alpha, c.beta);
  });

  m.def("betp", [](const MassFunction& mf) {
    const PignisticDistribution p = betp(mf);
    py::dict out;
    for (std::size_t i = 0; i < p.probs.size(); ++i) out[py::str(mf.frame().label(i))] = p.probs[i];
    return out;
  });
  m.def("decide", [](const MassFunction& mf) {
    const Decision d = decide(betp(mf));
    return py::make_tuple(mf.frame().label(d.index), d.probability, d.tie);
  });

  py::class_<ScenarioConfig>(m, "ScenarioConfig")
      .def(py::init<>())
      .def_readwrite("n_targets", &ScenarioConfig::n_targets)
      .def_readwrite("n_emitters", &ScenarioConfig::n_emitters)
      .def_readwrite("min_emitters_per_target", &ScenarioConfig::min_emitters_per_target)
      .def_readwrite("max_emitters_per_target", &ScenarioConfig::max_emitters_per_target)
      .def_readwrite("truth_index", &ScenarioConfig::truth_index)
      .def_readwrite("similar_target", &ScenarioConfig::similar_target)
      .def_readwrite("pfa", &ScenarioConfig::pfa)
      .def_readwrite("n_reports", &ScenarioConfig::n_reports)
      .def_readwrite("report_mass", &ScenarioConfig::report_mass)
      .def_readwrite("seed", &ScenarioConfig::seed)
      .def_property(
          "rule", [](const ScenarioConfig& c) { return std::string(rule_name(c.rule)); },
          [](ScenarioConfig& c, const std::string& name) { c.rule = rule_from(name); })
      .def("to_json", &io::dump_scenario_config)
      .def_static("from_json", &io::parse_scenario_config);

  py::class_<TrajectoryRecord>(m, "TrajectoryRecord")
      .def_readonly("step", &TrajectoryRecord::step)
      .def_readonly("reported_emitter", &TrajectoryRecord::reported_emitter)
      .def_readonly("report_set_size", &TrajectoryRecord::report_set_size)
      .def_readonly("conflict_k12", &TrajectoryRecord::conflict_k12)
      .def_readonly("betp_truth", &TrajectoryRecord::betp_truth)
      .def_readonly("betp_similar", &TrajectoryRecord::betp_similar)
      .def_readonly("decided_index", &TrajectoryRecord::decided_index)
      .def_readonly("tie", &TrajectoryRecord::tie);

  py::class_<ScenarioRun>(m, "ScenarioRun")
      .def_readonly("records", &ScenarioRun::records)
      .def_readonly("final_state", &ScenarioRun::final_state)
      .def_readonly("failed_at", &ScenarioRun::failed_at)
      .def("csv", &trajectory_csv)
      .def("metadata", &io::scenario_metadata);

  m.def("run_scenario", &run_scenario);
}
