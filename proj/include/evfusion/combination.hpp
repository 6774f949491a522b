#pragma once

#include <vector>

#include "evfusion/focal_set.hpp"
#include "evfusion/mass_function.hpp"

namespace evfusion {

/// One conflicting product: x focal in the first source, y in the second,
/// x ∩ y = ∅ and product = m1(x) * m2(y) > 0.
struct ConflictPair {
  FocalSet x;
  FocalSet y;
  double product;
};

/// Degree of conflict k12 and the disjoint focal pairs that produce it.
struct ConflictDecomposition {
  double total = 0.0;
  std::vector<ConflictPair> pairs;
};

/// Throws FrameMismatch if the frames differ and InvalidMass unless both
/// inputs are valid closed-world bbas.
void require_combinable(const MassFunction& m1, const MassFunction& m2);

/// Unnormalised conjunctive combination. The result is open-world: the mass
/// it places on ∅ is k12.
MassFunction conjunctive(const MassFunction& m1, const MassFunction& m2);

MassFunction disjunctive(const MassFunction& m1, const MassFunction& m2);

/// `total` is bit-identical to conjunctive(m1, m2).mass(∅): both sum the
/// same products in the same order.
ConflictDecomposition conflict(const MassFunction& m1, const MassFunction& m2);

}  // namespace evfusion
