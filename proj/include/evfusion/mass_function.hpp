#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "evfusion/focal_set.hpp"
#include "evfusion/frame.hpp"

namespace evfusion {

/// Absolute tolerance for bba validity and golden comparisons.
inline constexpr double kMassTolerance = 1e-9;

/// Closed world forbids mass on the empty set; open world (Smets, raw
/// conjunctive output) allows it.
enum class World { Closed, Open };

/// Basic belief assignment: sparse map from focal sets to masses.
///
/// Only non-zero masses are stored, so reading an absent set yields 0 and
/// two mass functions compare entrywise on their stored sets. Construction
/// does not enforce normalisation; `validate` reports on that, and every
/// combination rule checks its inputs before use.
class MassFunction {
 public:
  using Entries = std::map<FocalSet, double, CanonicalOrder>;

  /// Repeated sets are summed. Throws InvalidArgument if a set's width
  /// differs from the frame size.
  MassFunction(Frame frame, std::span<const std::pair<FocalSet, double>> entries,
               World world = World::Closed);
  MassFunction(Frame frame, Entries entries, World world = World::Closed);

  const Frame& frame() const noexcept { return frame_; }
  World world() const noexcept { return world_; }
  bool open_world() const noexcept { return world_ == World::Open; }

  double mass(const FocalSet& s) const;
  const Entries& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  Entries::const_iterator begin() const noexcept { return entries_.begin(); }
  Entries::const_iterator end() const noexcept { return entries_.end(); }

  double total() const;

 private:
  Frame frame_;
  Entries entries_;
  World world_;
};

struct Violation {
  enum class Kind { NegativeMass, MassAboveOne, SumNotOne, EmptySetInClosedWorld };
  Kind kind;
  double observed;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  explicit operator bool() const noexcept { return ok(); }
  std::string to_string() const;
};

/// Checks every bba invariant at `kMassTolerance`. Never throws.
ValidationReport validate(const MassFunction& m);

/// All mass on the full frame: total ignorance.
MassFunction vacuous(const Frame& frame);

/// Largest |m1(A) - m2(A)| over the union of focal sets. Frames must match.
double max_abs_difference(const MassFunction& m1, const MassFunction& m2);

std::string to_string(const MassFunction& m);

}  // namespace evfusion
