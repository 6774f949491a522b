#include "evfusion/rules.hpp"

#include <array>
#include <cmath>
#include <string>

#include "evfusion/errors.hpp"
#include "evfusion/format.hpp"

namespace evfusion {

namespace {

constexpr double kAlgebraTolerance = 1e-12;

constexpr std::array<RuleId, 8> kRules = {RuleId::Dempster,    RuleId::Smets, RuleId::Yager,
                                          RuleId::DuboisPrade, RuleId::DSmH,  RuleId::Inagaki,
                                          RuleId::SACR,        RuleId::PCR};

// Conjunctive masses on non-empty sets, as a closed-world entry map.
MassFunction::Entries non_empty_part(const MassFunction& m) {
  MassFunction::Entries out;
  for (const auto& [set, mass] : m) {
    if (!set.none()) out.emplace(set, mass);
  }
  return out;
}

}  // namespace

std::string_view rule_name(RuleId rule) {
  switch (rule) {
    case RuleId::Dempster: return "dempster";
    case RuleId::Smets: return "smets";
    case RuleId::Yager: return "yager";
    case RuleId::DuboisPrade: return "dubois-prade";
    case RuleId::DSmH: return "dsmh";
    case RuleId::Inagaki: return "inagaki";
    case RuleId::SACR: return "sacr";
    case RuleId::PCR: return "pcr";
  }
  return "unknown";
}

std::optional<RuleId> parse_rule(std::string_view name) {
  for (const RuleId r : kRules) {
    if (rule_name(r) == name) return r;
  }
  return std::nullopt;
}

std::span<const RuleId> all_rules() { return kRules; }

MassFunction combine(RuleId rule, const MassFunction& m1, const MassFunction& m2) {
  switch (rule) {
    case RuleId::Dempster: return dempster(m1, m2);
    case RuleId::Smets: return smets(m1, m2);
    case RuleId::Yager: return yager(m1, m2);
    case RuleId::DuboisPrade: return dubois_prade(m1, m2);
    case RuleId::DSmH: return dsmh(m1, m2);
    case RuleId::Inagaki: return inagaki_extreme(m1, m2);
    case RuleId::SACR: return sacr(m1, m2);
    case RuleId::PCR: return pcr(m1, m2);
  }
  throw InvalidArgument("unknown rule id");
}

MassFunction dempster(const MassFunction& m1, const MassFunction& m2) {
  const MassFunction conj = conjunctive(m1, m2);
  const double k = conj.mass(m1.frame().empty_set());
  const double norm = 1.0 - k;
  if (norm <= kAlgebraTolerance) {
    throw TotalConflict("dempster: total conflict (k12 = " + format_double(k) +
                            "); the rule cannot be used when k12 = 1",
                        k);
  }
  MassFunction::Entries out = non_empty_part(conj);
  // Equal to 1 - k for valid inputs, but free of the cancellation in 1 - k
  // when the conflict is close to 1.
  double kept = 0.0;
  for (const auto& [set, mass] : out) kept += mass;
  for (auto& [set, mass] : out) mass /= kept;
  return MassFunction(m1.frame(), std::move(out));
}

MassFunction smets(const MassFunction& m1, const MassFunction& m2) { return conjunctive(m1, m2); }

MassFunction yager(const MassFunction& m1, const MassFunction& m2) {
  const MassFunction conj = conjunctive(m1, m2);
  const Frame& frame = m1.frame();
  MassFunction::Entries out = non_empty_part(conj);
  out[frame.full()] += conj.mass(frame.empty_set());
  return MassFunction(frame, std::move(out));
}

MassFunction dubois_prade(const MassFunction& m1, const MassFunction& m2) {
  require_combinable(m1, m2);
  MassFunction::Entries out;
  for (const auto& [x, a] : m1) {
    for (const auto& [y, b] : m2) {
      FocalSet meet = x & y;
      if (meet.none()) {
        out[x | y] += a * b;
      } else {
        out[std::move(meet)] += a * b;
      }
    }
  }
  return MassFunction(m1.frame(), std::move(out));
}

MassFunction dsmh(const MassFunction& m1, const MassFunction& m2) { return dubois_prade(m1, m2); }

WeightAssignment::WeightAssignment(Frame frame, MassFunction::Entries weights)
    : frame_(std::move(frame)), weights_(std::move(weights)) {
  double sum = 0.0;
  for (const auto& [set, w] : weights_) {
    if (set.width() != frame_.size()) throw InvalidArgument("weight set width mismatch");
    if (set.none()) throw InvalidArgument("weights are defined on non-empty sets only");
    if (!(w >= -kMassTolerance && w <= 1.0 + kMassTolerance)) {
      throw InvalidArgument("weight " + format_double(w) + " on " + frame_.format(set) +
                            " outside [0, 1]");
    }
    sum += w;
  }
  if (!(std::abs(sum - 1.0) <= kMassTolerance)) {
    throw InvalidArgument("weights sum to " + format_double(sum) + ", expected 1");
  }
  std::erase_if(weights_, [](const auto& e) { return e.second == 0.0; });
}

double WeightAssignment::weight(const FocalSet& s) const {
  const auto it = weights_.find(s);
  return it == weights_.end() ? 0.0 : it->second;
}

MassFunction inagaki_generic(const MassFunction& m1, const MassFunction& m2,
                             const WeightAssignment& w) {
  if (!(w.frame() == m1.frame())) throw FrameMismatch("weights built on a different frame");
  const MassFunction conj = conjunctive(m1, m2);
  const double k = conj.mass(m1.frame().empty_set());
  MassFunction::Entries out = non_empty_part(conj);
  for (const auto& [set, weight] : w.weights()) out[set] += weight * k;
  return MassFunction(m1.frame(), std::move(out));
}

MassFunction inagaki_extreme(const MassFunction& m1, const MassFunction& m2) {
  const MassFunction conj = conjunctive(m1, m2);
  const Frame& frame = m1.frame();
  const double k = conj.mass(frame.empty_set());
  MassFunction::Entries out = non_empty_part(conj);
  if (k == 0.0) return MassFunction(frame, std::move(out));

  double receivers = 0.0;
  for (const auto& [set, mass] : out) {
    if (!set.is_full()) receivers += mass;
  }
  if (receivers == 0.0) {
    throw Degenerate("inagaki: no focal element other than the frame can receive the conflict");
  }
  const double scale = 1.0 + k / receivers;
  for (auto& [set, mass] : out) {
    if (!set.is_full()) mass *= scale;
  }
  return MassFunction(frame, std::move(out));
}

AcrCoefficients acr_coefficients(const BetaFunction& beta, double k) {
  if (const double b0 = beta(0.0); !(std::abs(b0 - 1.0) <= kAlgebraTolerance)) {
    throw InvalidBeta("beta(0) must be 1, got " + format_double(b0));
  }
  if (const double b1 = beta(1.0); !(std::abs(b1) <= kAlgebraTolerance)) {
    throw InvalidBeta("beta(1) must be 0, got " + format_double(b1));
  }
  const double b = beta(k);
  if (!(b >= 0.0 && b <= 1.0)) {
    throw InvalidBeta("beta(" + format_double(k) + ") = " + format_double(b) +
                      " is outside [0, 1]");
  }
  return {1.0 - (1.0 - k) * b, b, k};
}

double sacr_beta(double k) { return (1.0 - k) / (1.0 - k + k * k); }

AcrCoefficients sacr_coefficients(double k) {
  const double denom = 1.0 - k + k * k;
  return {k / denom, (1.0 - k) / denom, k};
}

MassFunction acr_generic(const MassFunction& m1, const MassFunction& m2,
                         const BetaFunction& beta) {
  const MassFunction conj = conjunctive(m1, m2);
  const MassFunction disj = disjunctive(m1, m2);
  const Frame& frame = m1.frame();
  const AcrCoefficients c = acr_coefficients(beta, conj.mass(frame.empty_set()));

  MassFunction::Entries out;
  for (const auto& [set, mass] : disj) out[set] += c.alpha * mass;
  for (const auto& [set, mass] : conj) {
    if (!set.none()) out[set] += c.beta * mass;
  }
  return MassFunction(frame, std::move(out));
}

MassFunction sacr(const MassFunction& m1, const MassFunction& m2) {
  return acr_generic(m1, m2, sacr_beta);
}

std::vector<PcrShare> pcr_redistribution(const MassFunction& m1, const MassFunction& m2) {
  const ConflictDecomposition dec = conflict(m1, m2);
  std::vector<PcrShare> shares;
  shares.reserve(dec.pairs.size());
  for (const auto& pair : dec.pairs) {
    const double a = m1.mass(pair.x);
    const double b = m2.mass(pair.y);
    const double denom = a + b;
    // Masses are non-negative, so the denominator only vanishes with both
    // numerator factors; such fractions are dropped.
    if (denom == 0.0) continue;
    shares.push_back({pair.x, pair.y, pair.product, a * pair.product / denom,
                      b * pair.product / denom});
  }
  return shares;
}

MassFunction pcr(const MassFunction& m1, const MassFunction& m2) {
  const MassFunction conj = conjunctive(m1, m2);
  MassFunction::Entries out = non_empty_part(conj);
  for (const auto& s : pcr_redistribution(m1, m2)) {
    out[s.x] += s.to_x;
    out[s.y] += s.to_y;
  }
  return MassFunction(m1.frame(), std::move(out));
}

std::map<FocalSet, double, CanonicalOrder> acr_inagaki_weights(const MassFunction& m1,
                                                              const MassFunction& m2,
                                                              const BetaFunction& beta) {
  const MassFunction conj = conjunctive(m1, m2);
  const MassFunction disj = disjunctive(m1, m2);
  const double k = conj.mass(m1.frame().empty_set());
  if (k == 0.0) {
    throw Degenerate("ACR weights are undefined without conflict (the rule is conjunctive)");
  }
  const AcrCoefficients c = acr_coefficients(beta, k);

  std::map<FocalSet, double, CanonicalOrder> w;
  for (const auto& [set, mass] : disj) w.emplace(set, 0.0);
  for (const auto& [set, mass] : conj) {
    if (!set.none()) w.emplace(set, 0.0);
  }
  for (auto& [set, weight] : w) {
    const double dis = disj.mass(set);
    const double con = conj.mass(set);
    weight = (1.0 - c.beta) / k * (dis - con) + c.beta * dis;
  }
  return w;
}

}  // namespace evfusion
