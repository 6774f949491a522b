#include "evfusion/decision.hpp"

#include <cmath>

#include "evfusion/errors.hpp"

namespace evfusion {

namespace {
constexpr double kTieTolerance = 1e-12;
}

PignisticDistribution betp(const MassFunction& m) {
  if (m.open_world()) {
    throw InvalidMass("pignistic transform needs a closed-world bba");
  }
  PignisticDistribution p{m.frame(), std::vector<double>(m.frame().size(), 0.0)};
  for (const auto& [set, mass] : m) {
    const std::size_t n = set.count();
    if (n == 0) throw InvalidMass("closed-world bba carries mass on the empty set");
    const double share = mass / static_cast<double>(n);
    set.for_each_member([&](std::size_t i) { p.probs[i] += share; });
  }
  return p;
}

Decision decide(const PignisticDistribution& p) {
  if (p.probs.empty()) throw InvalidArgument("empty pignistic distribution");
  std::size_t best = 0;
  for (std::size_t i = 1; i < p.probs.size(); ++i) {
    if (p.probs[i] > p.probs[best]) best = i;
  }
  // Lowest index within tolerance of the maximum.
  const double top = p.probs[best];
  std::size_t first = best;
  std::size_t near = 0;
  for (std::size_t i = 0; i < p.probs.size(); ++i) {
    if (std::abs(p.probs[i] - top) <= kTieTolerance) {
      if (near == 0) first = i;
      ++near;
    }
  }
  return {first, p.probs[first], near > 1};
}

}  // namespace evfusion
