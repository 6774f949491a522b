#include "evfusion/mass_function.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "evfusion/errors.hpp"
#include "evfusion/format.hpp"

namespace evfusion {

namespace {

void check_set_width(const Frame& frame, const FocalSet& s) {
  if (s.width() != frame.size()) {
    throw InvalidArgument("focal set width " + std::to_string(s.width()) +
                          " does not match frame size " + std::to_string(frame.size()));
  }
}

}  // namespace

MassFunction::MassFunction(Frame frame, std::span<const std::pair<FocalSet, double>> entries,
                           World world)
    : frame_(std::move(frame)), world_(world) {
  for (const auto& [set, m] : entries) {
    check_set_width(frame_, set);
    entries_[set] += m;
  }
  std::erase_if(entries_, [](const auto& e) { return e.second == 0.0; });
}

MassFunction::MassFunction(Frame frame, Entries entries, World world)
    : frame_(std::move(frame)), entries_(std::move(entries)), world_(world) {
  for (const auto& [set, m] : entries_) check_set_width(frame_, set);
  std::erase_if(entries_, [](const auto& e) { return e.second == 0.0; });
}

double MassFunction::mass(const FocalSet& s) const {
  const auto it = entries_.find(s);
  return it == entries_.end() ? 0.0 : it->second;
}

double MassFunction::total() const {
  double sum = 0.0;
  for (const auto& [set, m] : entries_) sum += m;
  return sum;
}

std::string ValidationReport::to_string() const {
  if (ok()) return "ok";
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.detail;
  }
  return out;
}

ValidationReport validate(const MassFunction& m) {
  ValidationReport report;
  const Frame& frame = m.frame();
  for (const auto& [set, mass] : m) {
    if (!(mass >= 0.0)) {
      report.violations.push_back({Violation::Kind::NegativeMass, mass,
                                   "negative mass " + format_double(mass) + " on " +
                                       frame.format(set)});
    } else if (mass > 1.0 + kMassTolerance) {
      report.violations.push_back({Violation::Kind::MassAboveOne, mass,
                                   "mass " + format_double(mass) + " above 1 on " +
                                       frame.format(set)});
    }
    if (set.none() && !m.open_world()) {
      report.violations.push_back({Violation::Kind::EmptySetInClosedWorld, mass,
                                   "closed-world mass on empty set: " + format_double(mass)});
    }
  }
  const double sum = m.total();
  if (!(std::abs(sum - 1.0) <= kMassTolerance)) {
    report.violations.push_back(
        {Violation::Kind::SumNotOne, sum, "masses sum to " + format_double(sum)});
  }
  return report;
}

MassFunction vacuous(const Frame& frame) {
  return MassFunction(frame, {{frame.full(), 1.0}});
}

double max_abs_difference(const MassFunction& m1, const MassFunction& m2) {
  if (!(m1.frame() == m2.frame())) throw FrameMismatch("mass functions on different frames");
  double worst = 0.0;
  for (const auto& [set, mass] : m1) worst = std::max(worst, std::abs(mass - m2.mass(set)));
  for (const auto& [set, mass] : m2) worst = std::max(worst, std::abs(mass - m1.mass(set)));
  return worst;
}

std::string to_string(const MassFunction& m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [set, mass] : m) {
    if (!first) os << ", ";
    first = false;
    os << m.frame().format(set) << ": " << format_double(mass);
  }
  os << '}';
  return os.str();
}

}  // namespace evfusion
