#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "evfusion/combination.hpp"
#include "evfusion/focal_set.hpp"
#include "evfusion/mass_function.hpp"

namespace evfusion {

/// Two-source combination rules with a stable CLI/file name each.
///
/// DSmH is kept as its own id but, on the power set of a Shafer frame, it
/// performs exactly the Dubois & Prade computation. `Inagaki` is the
/// ratio-preserving extremal member of Inagaki's family.
enum class RuleId { Dempster, Smets, Yager, DuboisPrade, DSmH, Inagaki, SACR, PCR };

std::string_view rule_name(RuleId rule);
std::optional<RuleId> parse_rule(std::string_view name);
std::span<const RuleId> all_rules();

/// Dispatches to the rule functions below.
MassFunction combine(RuleId rule, const MassFunction& m1, const MassFunction& m2);

/// Normalised conjunctive rule. Throws TotalConflict when 1 - k12 <= 1e-12.
MassFunction dempster(const MassFunction& m1, const MassFunction& m2);

/// Conjunctive rule keeping k12 on ∅ (open world).
MassFunction smets(const MassFunction& m1, const MassFunction& m2);

/// Conflict goes to total ignorance Θ.
MassFunction yager(const MassFunction& m1, const MassFunction& m2);

/// Each conflicting product m1(X)m2(Y) goes to X ∪ Y.
MassFunction dubois_prade(const MassFunction& m1, const MassFunction& m2);

/// Same result as dubois_prade on a Shafer frame.
MassFunction dsmh(const MassFunction& m1, const MassFunction& m2);

/// Normalised weights over non-empty focal sets, used to spread k12.
class WeightAssignment {
 public:
  /// Throws InvalidArgument when a weight is outside [0, 1], a set is empty
  /// or of the wrong width, or the weights do not sum to 1 within 1e-9.
  WeightAssignment(Frame frame, MassFunction::Entries weights);

  const Frame& frame() const noexcept { return frame_; }
  const MassFunction::Entries& weights() const noexcept { return weights_; }
  double weight(const FocalSet& s) const;

 private:
  Frame frame_;
  MassFunction::Entries weights_;
};

/// m(A) = m∧(A) + w(A) k12 for every non-empty A.
MassFunction inagaki_generic(const MassFunction& m1, const MassFunction& m2,
                             const WeightAssignment& w);

/// Inagaki rule keeping the ratio between any two masses other than Θ fixed:
/// conflict is shared among non-Θ sets in proportion to their conjunctive
/// mass and m(Θ) = m∧(Θ). Throws Degenerate if no non-Θ set has conjunctive
/// mass while k12 > 0.
MassFunction inagaki_extreme(const MassFunction& m1, const MassFunction& m2);

/// β(k12) for an adaptive combination rule. Must be deterministic.
using BetaFunction = std::function<double(double)>;

/// Mixing coefficients of an adaptive rule evaluated at one conflict value.
struct AcrCoefficients {
  double alpha;
  double beta;
  double conflict;
};

/// β evaluated at `k`, α from α = 1 - (1 - k) β. Throws InvalidBeta when
/// β(0) != 1 or β(1) != 0 (within 1e-12) or β(k) is outside [0, 1].
AcrCoefficients acr_coefficients(const BetaFunction& beta, double k);

/// The symmetric pair: α0 = k / (1 - k + k²), β0 = (1 - k) / (1 - k + k²).
AcrCoefficients sacr_coefficients(double k);
double sacr_beta(double k);

/// α(k12) m∨(A) + β(k12) m∧(A) for every non-empty A.
MassFunction acr_generic(const MassFunction& m1, const MassFunction& m2,
                         const BetaFunction& beta);

MassFunction sacr(const MassFunction& m1, const MassFunction& m2);

/// Share of one conflicting product m1(x)m2(y) returned to x and to y in
/// proportion to m1(x) and m2(y).
struct PcrShare {
  FocalSet x;
  FocalSet y;
  double product;
  double to_x;
  double to_y;
};

/// Per-pair redistribution that PCR adds on top of the conjunctive masses,
/// one entry per pair of `conflict(m1, m2)`, in the same order.
std::vector<PcrShare> pcr_redistribution(const MassFunction& m1, const MassFunction& m2);

/// Proportional conflict redistribution for two sources.
MassFunction pcr(const MassFunction& m1, const MassFunction& m2);

/// Inagaki weights equivalent to an adaptive rule. Entries may be negative.
/// m∧(A) + w(A) k12 reproduces acr_generic. Throws Degenerate when k12 == 0.
std::map<FocalSet, double, CanonicalOrder> acr_inagaki_weights(const MassFunction& m1,
                                                              const MassFunction& m2,
                                                              const BetaFunction& beta);

}  // namespace evfusion
