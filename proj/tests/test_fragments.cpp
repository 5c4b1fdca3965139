#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "paclogic/fragments.hpp"
#include "paclogic/parser.hpp"
#include "paclogic/scenarios.hpp"
#include "paclogic/stats.hpp"
#include "oracle.hpp"

using namespace paclogic;

namespace {

Example smokers_upsilon() {
  return parse_example(
      "domain: alice bob eve\n"
      "fr(alice,bob).\n"
      "sm(alice).\n"
      "sm(eve).\n");
}

TEST(Restrict, SmokersTwoSubset) {
  Example ex = smokers_upsilon();
  Fragment f = restrict_example(ex, {"alice", "eve"});
  EXPECT_EQ(f.example.domain(), (std::vector<std::string>{"alice", "eve"}));
  EXPECT_EQ(f.example.atom_count(), 2u);  // sm(alice), sm(eve); fr(alice,bob) dropped
  EXPECT_TRUE(f.example.holds(Atom{"sm", {"alice"}}));
  EXPECT_TRUE(f.example.holds(Atom{"sm", {"eve"}}));
  EXPECT_EQ(f.subset, (std::vector<std::string>{"alice", "eve"}));
}

TEST(Restrict, FullDomainIsIdentity) {
  Example ex = smokers_upsilon();
  Fragment f = restrict_example(ex, ex.domain());
  EXPECT_EQ(f.example, ex);
}

TEST(Restrict, ChainGapHasNoAtoms) {
  Example chain = gen_rare_chain(5);
  Fragment f = restrict_example(chain, {"c2", "c4"});
  EXPECT_EQ(f.example.atom_count(), 0u);
  EXPECT_EQ(f.example.domain_size(), 2u);
}

TEST(Restrict, OutsideDomainRejected) {
  Example ex = smokers_upsilon();
  EXPECT_THROW(restrict_example(ex, {"carol"}), std::invalid_argument);
}

TEST(QExact, PaperValues) {
  Example ex = smokers_upsilon();
  EXPECT_EQ(q_exact(ex, 1, parse_theory("forall X: sm(X)")).value, Rational(2, 3));
  EXPECT_EQ(q_exact(ex, 2, parse_theory("forall X: sm(X)")).value, Rational(1, 3));
  EXPECT_EQ(q_exact(ex, 2, parse_theory("exists X, Y: fr(X,Y)")).value, Rational(1, 3));
}

TEST(QExact, RareCliqueDeskScale) {
  Example clique = gen_rare_clique(100);
  Rational q = q_exact(clique, 2, rare_clique_rule()).value;
  EXPECT_EQ(q, Rational(1, 1) - Rational(99, 4950));
  EXPECT_EQ(q, rare_clique_exact_q(100, 2));
}

TEST(QExact, MatchesNaiveEnumerationOnRandomInstances) {
  SplitMix64 rng(101);
  for (int i = 0; i < 150; ++i) {
    auto inst = oracle::random_instance(rng.next(), 5, 3);
    for (std::uint32_t k = 0; k <= std::min<std::uint32_t>(4, inst.example.domain_size());
         ++k) {
      Rational fast = q_exact(inst.example, k, inst.theory).value;
      Rational naive = oracle::naive_q(inst.example, k, inst.theory);
      ASSERT_EQ(fast, naive) << "k=" << k << " theory:\n"
                             << print_theory(inst.theory) << print_example(inst.example);
    }
  }
}

TEST(QExact, FullDomainEqualsTruth) {
  SplitMix64 rng(55);
  for (int i = 0; i < 60; ++i) {
    auto inst = oracle::random_instance(rng.next(), 4, 2);
    Rational q = q_exact(inst.example, inst.example.domain_size(), inst.theory).value;
    bool truth = evaluate(inst.example, inst.theory);
    ASSERT_EQ(q, Rational(truth ? 1 : 0, 1));
  }
}

TEST(QExact, ConjunctionNeverGains) {
  SplitMix64 rng(77);
  for (int i = 0; i < 80; ++i) {
    auto inst = oracle::random_instance(rng.next(), 5, 2);
    if (inst.theory.formulas.size() < 2) continue;
    std::uint32_t k = std::min<std::uint32_t>(2, inst.example.domain_size());
    Rational whole = q_exact(inst.example, k, inst.theory).value;
    for (const Formula& f : inst.theory.formulas) {
      Theory single;
      single.formulas.push_back(f);
      ASSERT_LE(whole, q_exact(inst.example, k, single).value);
    }
  }
}

TEST(QExact, ErrorsAndBudget) {
  Example ex = smokers_upsilon();
  EXPECT_THROW(q_exact(ex, 4, parse_theory("forall X: sm(X)")), std::invalid_argument);
  EXPECT_THROW(q_exact(ex, 1, parse_theory("sm(alice)")), std::invalid_argument);
  // a budget of one evaluation cannot cover an all-active 3-constant example
  EXPECT_THROW(q_exact(ex, 2, parse_theory("forall X: sm(X)"), 1), std::runtime_error);
}

TEST(QExact, KZeroUsesEmptyFragment) {
  Example ex = smokers_upsilon();
  EXPECT_EQ(q_exact(ex, 0, parse_theory("forall X: sm(X)")).value, Rational(1, 1));
  EXPECT_EQ(q_exact(ex, 0, parse_theory("exists X: sm(X)")).value, Rational(0, 1));
}

TEST(QMonteCarlo, ConvergesToExact) {
  Example ex = smokers_upsilon();
  Theory alpha = parse_theory("forall X: sm(X)");
  ProbabilityEstimate est = q_monte_carlo(ex, 2, alpha, 30000, 12345);
  EXPECT_EQ(est.mode, ProbabilityEstimate::Mode::kMonteCarlo);
  EXPECT_NEAR(est.value.to_double(), 1.0 / 3.0, 0.02);
}

TEST(QMonteCarlo, AlwaysSatisfiedIsExactlyOne) {
  Example ex = smokers_upsilon();
  Theory taut = parse_theory("forall X: sm(X) | !sm(X)");
  ProbabilityEstimate est = q_monte_carlo(ex, 2, taut, 100, 9);
  EXPECT_EQ(est.value, Rational(1, 1));
}

TEST(QMonteCarlo, FullDomainSubsetMatchesEvaluate) {
  Example ex = smokers_upsilon();
  Theory alpha = parse_theory("forall X: sm(X)");
  ProbabilityEstimate est = q_monte_carlo(ex, 3, alpha, 50, 1);
  EXPECT_EQ(est.value, Rational(0, 1));  // the full example has a non-smoker
}

TEST(QMonteCarlo, DeterministicGivenSeed) {
  Example clique = gen_rare_clique(50);
  auto a = q_monte_carlo(clique, 2, rare_clique_rule(), 5000, 42);
  auto b = q_monte_carlo(clique, 2, rare_clique_rule(), 5000, 42);
  EXPECT_EQ(a.value, b.value);
}

// Hoeffding check on the estimator itself: the seeded MC estimate stays
// within the 99% radius of the exact value in at least ~99% of runs.
TEST(QMonteCarlo, HoeffdingRadius) {
  Example clique = gen_rare_clique(40);
  Theory rule = rare_clique_rule();
  double exact = q_exact(clique, 2, rule).value.to_double();
  const std::uint64_t trials = 2000;
  const double radius = std::sqrt(std::log(2.0 / 0.01) / (2.0 * trials));
  int violations = 0;
  const int runs = 200;
  for (int r = 0; r < runs; ++r) {
    double est = q_monte_carlo(clique, 2, rule, trials, 1000 + r).value.to_double();
    if (std::fabs(est - exact) > radius) ++violations;
  }
  EXPECT_LE(violations, 6) << "expected about 1% violations of the 99% radius";
}

// Uniformity of subset sampling: per-constant frequencies at k=1 pass a
// chi-square goodness-of-fit test at significance 0.001.
TEST(Sampling, SingletonUniformity) {
  const std::uint32_t m = 10;
  SplitMix64 rng(2718);
  SubsetSampler sampler(m);
  std::vector<std::uint64_t> counts(m, 0);
  std::vector<std::uint32_t> out;
  for (int i = 0; i < 20000; ++i) {
    sampler.sample_sorted(rng, 1, out);
    ++counts[out[0]];
  }
  std::vector<double> probs(m, 1.0 / m);
  auto res = chi_square_gof(counts, probs);
  EXPECT_GE(res.p_value, 0.001) << "stat=" << res.statistic;
}

TEST(Sampling, PairUniformity) {
  SplitMix64 rng(999);
  SubsetSampler sampler(6);
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> counts;
  std::vector<std::uint32_t> out;
  for (int i = 0; i < 30000; ++i) {
    sampler.sample_sorted(rng, 2, out);
    ++counts[{out[0], out[1]}];
  }
  ASSERT_EQ(counts.size(), 15u);
  std::vector<std::uint64_t> flat;
  for (auto& [key, v] : counts) flat.push_back(v);
  std::vector<double> probs(15, 1.0 / 15.0);
  auto res = chi_square_gof(flat, probs);
  EXPECT_GE(res.p_value, 0.001) << "stat=" << res.statistic;
}

TEST(Scenario, GeneratedChainReparses) {
  Example chain = gen_rare_chain(5);
  Example back = parse_example(print_example(chain));
  EXPECT_EQ(chain, back);
  EXPECT_TRUE(back.holds(Atom{"rare", {"c1"}}));
  EXPECT_TRUE(back.holds(Atom{"e", {"c4", "c5"}}));
  EXPECT_EQ(back.atom_count(), 5u);
}

}  // namespace
