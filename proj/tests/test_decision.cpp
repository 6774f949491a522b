#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "evfusion/combination.hpp"
#include "evfusion/decision.hpp"
#include "evfusion/errors.hpp"
#include "evfusion/rules.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace evfusion;

TEST_CASE("betp splits each focal mass evenly") {
  const Frame f = fixtures::ab();
  const MassFunction m(f, {{f.subset({"A"}), 0.5}, {f.full(), 0.5}});
  const PignisticDistribution p = betp(m);
  REQUIRE(p.probs.size() == 2);
  CHECK(std::abs(p.probs[0] - 0.75) <= 1e-12);
  CHECK(std::abs(p.probs[1] - 0.25) <= 1e-12);

  const Frame g = oracle::letters(5);
  for (const double q : betp(vacuous(g)).probs) CHECK(std::abs(q - 0.2) <= 1e-12);

  const auto [z1, z2] = fixtures::zadeh();
  const PignisticDistribution pz = betp(dempster(z1, z2));
  CHECK(std::abs(pz.probs[2] - 1.0) <= 1e-12);
  CHECK(decide(pz).index == 2);
  CHECK_FALSE(decide(pz).tie);
}

TEST_CASE("betp rejects open-world input") {
  const auto [m1, m2] = fixtures::example1();
  CHECK_THROWS_AS(betp(smets(m1, m2)), InvalidMass);
}

TEST_CASE("decide: lowest index wins a tie") {
  const Frame f = oracle::letters(4);
  const Decision uniform = decide(betp(vacuous(f)));
  CHECK(uniform.index == 0);
  CHECK(uniform.tie);
  CHECK(std::abs(uniform.probability - 0.25) <= 1e-12);

  const MassFunction m(f, {{f.subset({"C"}), 0.4}, {f.full(), 0.6}});
  const Decision d = decide(betp(m));
  CHECK(d.index == 2);
  CHECK_FALSE(d.tie);
  CHECK(std::abs(d.probability - 0.55) <= 1e-12);

  const MassFunction near(f, {{f.subset({"B"}), 0.5}, {f.subset({"D"}), 0.5 - 1e-13}, {f.full(), 1e-13}});
  CHECK(decide(betp(near)).index == 1);
  CHECK(decide(betp(near)).tie);
}

TEST_CASE("property: betp is a probability and linear in the bba") {
  std::mt19937_64 gen(404);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const Frame f = oracle::letters(1 + trial % 5);
    const MassFunction a = oracle::random_sparse_bba(f, gen);
    const MassFunction b = oracle::random_sparse_bba(f, gen);
    const PignisticDistribution pa = betp(a);
    const PignisticDistribution pb = betp(b);
    CHECK(std::abs(std::accumulate(pa.probs.begin(), pa.probs.end(), 0.0) - 1.0) <= 1e-9);
    for (const double q : pa.probs) CHECK(q >= 0.0);

    const double lambda = unit(gen);
    MassFunction::Entries mix;
    for (const auto& [set, mass] : a) mix[set] += lambda * mass;
    for (const auto& [set, mass] : b) mix[set] += (1.0 - lambda) * mass;
    const PignisticDistribution pm = betp(MassFunction(f, mix));
    for (std::size_t i = 0; i < f.size(); ++i) {
      CHECK(std::abs(pm.probs[i] - (lambda * pa.probs[i] + (1.0 - lambda) * pb.probs[i])) <= 1e-12);
    }
  }
}

TEST_CASE("property: a clear maximum survives tiny noise") {
  std::mt19937_64 gen(17);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Frame f = oracle::letters(2 + trial % 4);
    const MassFunction m = oracle::random_sparse_bba(f, gen);
    const PignisticDistribution p = betp(m);
    const Decision d = decide(p);
    double runner_up = 0.0;
    for (std::size_t i = 0; i < p.probs.size(); ++i) {
      if (i != d.index) runner_up = std::max(runner_up, p.probs[i]);
    }
    if (d.probability - runner_up < 1e-6) continue;
    ++checked;
    PignisticDistribution noisy = p;
    std::uniform_real_distribution<double> eps(-1e-8, 1e-8);
    for (double& q : noisy.probs) q += eps(gen);
    CHECK(decide(noisy).index == d.index);
  }
  CHECK(checked > 500);
}
