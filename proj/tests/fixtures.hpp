#pragma once

// The two-source examples used throughout the tests: three two-hypothesis
// cases and Zadeh's three-hypothesis case.

#include <utility>

#include "evfusion/mass_function.hpp"

namespace fixtures {

using evfusion::Frame;
using evfusion::MassFunction;

inline Frame ab() { return Frame({"A", "B"}); }
inline Frame abc() { return Frame({"A", "B", "C"}); }

inline MassFunction bba(const Frame& f, double a, double b, double ab_mass) {
  return MassFunction(f, {{f.subset({"A"}), a}, {f.subset({"B"}), b}, {f.full(), ab_mass}});
}

struct Pair {
  MassFunction m1;
  MassFunction m2;
};

inline Pair example1() {
  const Frame f = ab();
  return {bba(f, 0.6, 0.0, 0.4), bba(f, 0.0, 0.3, 0.7)};
}

inline Pair example2() {
  const Frame f = ab();
  return {bba(f, 0.6, 0.0, 0.4), bba(f, 0.2, 0.3, 0.5)};
}

inline Pair example3() {
  const Frame f = ab();
  return {bba(f, 0.6, 0.3, 0.1), bba(f, 0.2, 0.3, 0.5)};
}

inline Pair zadeh() {
  const Frame f = abc();
  return {MassFunction(f, {{f.subset({"A"}), 0.9}, {f.subset({"C"}), 0.1}}),
          MassFunction(f, {{f.subset({"B"}), 0.9}, {f.subset({"C"}), 0.1}})};
}

}  // namespace fixtures
