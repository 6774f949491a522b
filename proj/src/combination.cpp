#include "evfusion/combination.hpp"

#include "evfusion/errors.hpp"

namespace evfusion {

void require_combinable(const MassFunction& m1, const MassFunction& m2) {
  if (!(m1.frame() == m2.frame())) {
    throw FrameMismatch("cannot combine mass functions on different frames");
  }
  for (const MassFunction* m : {&m1, &m2}) {
    if (m->open_world()) throw InvalidMass("rule inputs must be closed-world bbas");
    if (const auto report = validate(*m); !report.ok()) {
      throw InvalidMass("invalid bba: " + report.to_string());
    }
  }
}

MassFunction conjunctive(const MassFunction& m1, const MassFunction& m2) {
  require_combinable(m1, m2);
  MassFunction::Entries out;
  for (const auto& [x, a] : m1) {
    for (const auto& [y, b] : m2) out[x & y] += a * b;
  }
  return MassFunction(m1.frame(), std::move(out), World::Open);
}

MassFunction disjunctive(const MassFunction& m1, const MassFunction& m2) {
  require_combinable(m1, m2);
  MassFunction::Entries out;
  for (const auto& [x, a] : m1) {
    for (const auto& [y, b] : m2) out[x | y] += a * b;
  }
  return MassFunction(m1.frame(), std::move(out), World::Closed);
}

ConflictDecomposition conflict(const MassFunction& m1, const MassFunction& m2) {
  require_combinable(m1, m2);
  ConflictDecomposition result;
  for (const auto& [x, a] : m1) {
    for (const auto& [y, b] : m2) {
      if (x.intersects(y)) continue;
      const double p = a * b;
      result.total += p;
      if (p > 0.0) result.pairs.push_back({x, y, p});
    }
  }
  return result;
}

}  // namespace evfusion
