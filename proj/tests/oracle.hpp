#pragma once

// Test-only reference implementations. Mass functions are dense arrays of
// size 2^n indexed by an integer bitmask; combinations are literal double
// loops over every pair of subsets. Nothing here touches FocalSet algebra or
// the library's combination code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "evfusion/mass_function.hpp"

namespace oracle {

using Dense = std::vector<double>;

inline std::uint32_t mask_of(const evfusion::FocalSet& s) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < s.width(); ++i) {
    if (s.test(i)) mask |= 1U << i;
  }
  return mask;
}

inline evfusion::FocalSet set_of(std::uint32_t mask, std::size_t n) {
  evfusion::FocalSet s(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (mask & (1U << i)) s.set(i);
  }
  return s;
}

inline Dense dense(const evfusion::MassFunction& m) {
  Dense d(std::size_t{1} << m.frame().size(), 0.0);
  for (const auto& [set, mass] : m) d[mask_of(set)] = mass;
  return d;
}

inline Dense conjunctive(const Dense& a, const Dense& b) {
  Dense out(a.size(), 0.0);
  for (std::uint32_t x = 0; x < a.size(); ++x) {
    for (std::uint32_t y = 0; y < b.size(); ++y) out[x & y] += a[x] * b[y];
  }
  return out;
}

inline Dense disjunctive(const Dense& a, const Dense& b) {
  Dense out(a.size(), 0.0);
  for (std::uint32_t x = 0; x < a.size(); ++x) {
    for (std::uint32_t y = 0; y < b.size(); ++y) out[x | y] += a[x] * b[y];
  }
  return out;
}

// PCR for two sources written term by term: for every non-empty X, add
// m1(X)^2 m2(Y) / (m1(X) + m2(Y)) + m2(X)^2 m1(Y) / (m2(X) + m1(Y)) over all
// Y != X with X ∩ Y = ∅, dropping zero-denominator fractions.
inline Dense pcr(const Dense& m1, const Dense& m2) {
  Dense out = conjunctive(m1, m2);
  out[0] = 0.0;
  for (std::uint32_t x = 1; x < m1.size(); ++x) {
    for (std::uint32_t y = 1; y < m1.size(); ++y) {
      if (y == x || (x & y) != 0) continue;
      if (m1[x] + m2[y] != 0.0) out[x] += m1[x] * m1[x] * m2[y] / (m1[x] + m2[y]);
      if (m2[x] + m1[y] != 0.0) out[x] += m2[x] * m2[x] * m1[y] / (m2[x] + m1[y]);
    }
  }
  return out;
}

// Dense random bba over all non-empty subsets (every subset focal).
inline evfusion::MassFunction random_dense_bba(const evfusion::Frame& frame, std::mt19937_64& gen) {
  const std::uint32_t size = 1U << frame.size();
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<double> w(size, 0.0);
  double total = 0.0;
  for (std::uint32_t x = 1; x < size; ++x) total += (w[x] = u(gen));
  std::vector<std::pair<evfusion::FocalSet, double>> entries;
  for (std::uint32_t x = 1; x < size; ++x) entries.emplace_back(set_of(x, frame.size()), w[x] / total);
  return evfusion::MassFunction(frame, entries);
}

// Sparse random bba: 1..max_focal distinct non-empty focal sets.
inline evfusion::MassFunction random_sparse_bba(const evfusion::Frame& frame, std::mt19937_64& gen,
                                                std::size_t max_focal = 4) {
  const std::uint32_t size = 1U << frame.size();
  std::uniform_int_distribution<std::uint32_t> pick(1, size - 1);
  std::uniform_int_distribution<std::size_t> count(1, max_focal);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  const std::size_t k = count(gen);
  std::vector<std::uint32_t> masks;
  while (masks.size() < k && masks.size() + 1 < size) {
    const std::uint32_t x = pick(gen);
    if (std::find(masks.begin(), masks.end(), x) == masks.end()) masks.push_back(x);
  }
  std::vector<double> w;
  double total = 0.0;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    w.push_back(u(gen));
    total += w.back();
  }
  std::vector<std::pair<evfusion::FocalSet, double>> entries;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    entries.emplace_back(set_of(masks[i], frame.size()), w[i] / total);
  }
  return evfusion::MassFunction(frame, entries);
}

inline evfusion::Frame letters(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('A' + i)));
  return evfusion::Frame(labels);
}

inline double max_diff(const Dense& a, const evfusion::MassFunction& m) {
  const Dense b = dense(m);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace oracle
