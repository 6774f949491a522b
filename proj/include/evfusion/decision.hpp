#pragma once

#include <cstddef>
#include <vector>

#include "evfusion/frame.hpp"
#include "evfusion/mass_function.hpp"

namespace evfusion {

/// Probability over the singletons of a frame, indexed like the frame.
struct PignisticDistribution {
  Frame frame;
  std::vector<double> probs;
};

/// BetP(θ) = Σ_{A ∋ θ} m(A) / |A|. Throws InvalidMass for open-world input.
PignisticDistribution betp(const MassFunction& m);

struct Decision {
  std::size_t index;
  double probability;
  /// Another entry lies within 1e-12 of the maximum.
  bool tie;
};

/// Maximum-BetP choice; ties go to the lowest frame index.
Decision decide(const PignisticDistribution& p);

}  // namespace evfusion
