#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "paclogic/harness.hpp"
#include "paclogic/parser.hpp"
#include "paclogic/report.hpp"
#include "paclogic/scenarios.hpp"
#include "paclogic/stats.hpp"
#include "oracle.hpp"

using namespace paclogic;

namespace {

TEST(Scenarios, RareCliqueShape) {
  Example ex = gen_rare_clique(10);
  EXPECT_EQ(ex.domain_size(), 10u);
  EXPECT_EQ(ex.atom_count(), 1u);
  EXPECT_TRUE(ex.holds(Atom{"rare", {"c1"}}));
}

TEST(Scenarios, RareChainSmallest) {
  Example ex = gen_rare_chain(2);
  EXPECT_EQ(ex.atom_count(), 2u);
  EXPECT_TRUE(ex.holds(Atom{"rare", {"c1"}}));
  EXPECT_TRUE(ex.holds(Atom{"e", {"c1", "c2"}}));
  EXPECT_THROW(gen_rare_chain(1), std::invalid_argument);
}

TEST(Scenarios, ChainClosedFormMatchesEnumeration) {
  Example chain = gen_rare_chain(100);
  EXPECT_EQ(q_exact(chain, 2, rare_chain_rule()).value, Rational(1, 1) - Rational(1, 4950));
  EXPECT_EQ(rare_chain_exact_q(100, 2), Rational(4949, 4950));
  // k = 3 closed form: C(98,1) falsifying subsets
  EXPECT_EQ(q_exact(chain, 3, rare_chain_rule()).value, rare_chain_exact_q(100, 3));
}

TEST(Scenarios, CliqueClosedFormMatchesEnumeration) {
  Example clique = gen_rare_clique(60);
  for (std::uint32_t k = 1; k <= 3; ++k)
    EXPECT_EQ(q_exact(clique, k, rare_clique_rule()).value, rare_clique_exact_q(60, k));
  EXPECT_EQ(q_exact(clique, 2, exists_rare_formula()).value, rare_clique_exists_q(60, 2));
}

TEST(Scenarios, SmokersCounts) {
  Example ex = gen_smokers(20, 30, 5, 99);
  EXPECT_EQ(ex.domain_size(), 20u);
  EXPECT_EQ(ex.atom_count(), 35u);
  EXPECT_TRUE(ex.holds(Atom{"sm", {"p1"}}));
  EXPECT_FALSE(ex.holds(Atom{"sm", {"p6"}}));
  EXPECT_EQ(ex, gen_smokers(20, 30, 5, 99));  // deterministic
  for (const Atom& a : ex.atoms_as_strings()) {
    if (a.pred == "fr") {
      EXPECT_NE(a.args[0], a.args[1]);  // no self-friendship
    }
  }
}

TEST(Scenarios, RandomDensityRange) {
  Example empty = gen_random(15, {Predicate{"r", 2}}, 0.0, 5);
  EXPECT_EQ(empty.atom_count(), 0u);
  EXPECT_EQ(empty.vocabulary().size(), 1u);  // vocabulary survives zero density
  Example full = gen_random(15, {Predicate{"r", 2}}, 1.0, 5);
  EXPECT_EQ(full.atom_count(), 225u);
  Example half = gen_random(30, {Predicate{"r", 2}}, 0.5, 5);
  EXPECT_GT(half.atom_count(), 350u);
  EXPECT_LT(half.atom_count(), 550u);
  EXPECT_EQ(half, gen_random(30, {Predicate{"r", 2}}, 0.5, 5));
}

TEST(Sampling, LearningInstanceDeterministicAndSized) {
  Example aleph = gen_rare_chain(50);
  LearningInstance a = sample_learning_instance(aleph, 20, 10, 7);
  LearningInstance b = sample_learning_instance(aleph, 20, 10, 7);
  EXPECT_EQ(a.training.example, b.training.example);
  EXPECT_EQ(a.test.example, b.test.example);
  EXPECT_EQ(a.training.example.domain_size(), 20u);
  EXPECT_EQ(a.test.example.domain_size(), 10u);
  LearningInstance c = sample_learning_instance(aleph, 20, 10, 8);
  EXPECT_NE(a.training.example, c.training.example);
}

TEST(Sampling, FullSizeSampleIsWholeExample) {
  Example aleph = gen_rare_chain(12);
  LearningInstance li = sample_learning_instance(aleph, 12, 12, 3);
  EXPECT_EQ(li.training.example, aleph);
  EXPECT_EQ(li.test.example, aleph);
}

TEST(Sampling, TrainingQMatchesMembershipClosedForm) {
  // on the rare clique, the sampled training Q is 1 when c1 is missed and
  // 1 - (n-1)/C(n,2) when c1 is drawn
  Example aleph = gen_rare_clique(10000);
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    LearningInstance li = sample_learning_instance(aleph, 200, 50, seed);
    EXPECT_EQ(li.training.example.domain_size(), 200u);
    EXPECT_EQ(li.test.example.domain_size(), 50u);
    Rational q = q_exact(li.training.example, 2, rare_clique_rule()).value;
    if (li.training.example.has_constant("c1"))
      EXPECT_EQ(q, Rational(1, 1) - Rational(199, 19900));
    else
      EXPECT_EQ(q, Rational(1, 1));
  }
}

// Per-trial error counts on the rare clique have a closed form: u-1 wrong
// literals when c1 lands in the test domain, none otherwise; all within the
// worst-case bound computed from the exact test accuracy.
TEST(PacExperiment, CliqueErrorCountsMatchBruteForce) {
  Example aleph = gen_rare_clique(500);
  HypothesisClass H({rare_clique_rule()});
  PacConfig cfg;
  cfg.k = 2;
  cfg.target = Predicate{"rare", 1};
  cfg.n = 100;
  cfg.u = 50;
  cfg.masker = Masker::positive_only({"rare"});
  cfg.outer_trials = 40;
  cfg.inner_trials = 1;
  cfg.seed = 123;
  auto res = run_pac_experiment(aleph, H, cfg);
  int hits = 0;
  for (const TrialRecord& r : res.trials) {
    std::vector<std::string> gamma_dom = replay_test_domain(aleph, cfg, r.outer, r.inner);
    bool c1_in_test =
        std::find(gamma_dom.begin(), gamma_dom.end(), "c1") != gamma_dom.end();
    EXPECT_EQ(r.f_k[0], c1_in_test ? cfg.u - 1 : 0u);
    if (c1_in_test) ++hits;
    double bound = bounds::worst_case_k(r.q_test[0].to_double(), cfg.u, cfg.k, 1);
    EXPECT_LE(static_cast<double>(r.f_k[0]), bound + 1e-9);
  }
  EXPECT_GT(hits, 0);  // seeds chosen so at least one trial exercises errors
}

TEST(SelectBestTheory, ArgmaxAndTies) {
  Example clique = gen_rare_clique(30);
  // training example without c1: the rule is perfect
  std::vector<std::string> no_c1;
  for (const std::string& c : clique.domain())
    if (c != "c1") no_c1.push_back(c);
  Example ups = restrict_example(clique, no_c1).example;

  HypothesisClass single({rare_clique_rule()});
  auto [idx1, q1] = select_best_theory(single, ups, 2);
  EXPECT_EQ(idx1, 0u);
  EXPECT_EQ(q1, Rational(1, 1));

  HypothesisClass pair({parse_theory("forall X, Y: rare(X) -> rare(Y)"),
                        parse_theory("forall X, Y: rare(X) -> !rare(Y)")});
  auto [idx2, q2] = select_best_theory(pair, ups, 2);
  EXPECT_EQ(idx2, 0u);  // both perfect on an example without rare atoms: tie
  EXPECT_EQ(q2, Rational(1, 1));

  // with c1 present, the never-rare theory strictly beats the always-rare one
  HypothesisClass pair2(
      {parse_theory("forall X: rare(X)"), parse_theory("forall X: !rare(X)")});
  auto [idx3, q3] = select_best_theory(pair2, clique, 2);
  EXPECT_EQ(idx3, 1u);
  EXPECT_EQ(q3, Rational(1, 1) - Rational(29, 435));
}

TEST(Lemma3, ShapesAndDeterminism) {
  auto x = lemma3_sample_X(6, 4, 2, 11);
  ASSERT_EQ(x.size(), 2u);  // floor(4/2)
  for (auto& s : x) {
    EXPECT_EQ(s.size(), 2u);
    EXPECT_LT(s[0], s[1]);
    EXPECT_LT(s[1], 6u);
  }
  EXPECT_EQ(lemma3_sample_X(6, 4, 2, 11), lemma3_sample_X(6, 4, 2, 11));
  auto y = lemma3_sample_Y(6, 4, 2, 11);
  ASSERT_EQ(y.size(), 2u);
  for (auto& s : y) EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(lemma3_sample_Y(6, 4, 2, 11), lemma3_sample_Y(6, 4, 2, 11));
}

TEST(Lemma3, DegenerateFullDomain) {
  // k = n = |domain|: both processes must produce the full set every time
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto x = lemma3_sample_X(4, 4, 4, seed);
    auto y = lemma3_sample_Y(4, 4, 4, seed);
    ASSERT_EQ(x.size(), 1u);
    ASSERT_EQ(y.size(), 1u);
    EXPECT_EQ(x[0], (std::vector<std::uint32_t>{0, 1, 2, 3}));
    EXPECT_EQ(y[0], (std::vector<std::uint32_t>{0, 1, 2, 3}));
  }
}

// quick distributional smoke check; the full chi-square protocol runs in the
// acceptance suite
TEST(Lemma3, MarginalUniformitySmoke) {
  const std::uint32_t N = 6, n = 4, k = 2;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> cx, cy;
  for (std::uint64_t t = 0; t < 20000; ++t) {
    for (auto& s : lemma3_sample_X(N, n, k, derive_seed(100, t))) ++cx[{s[0], s[1]}];
    for (auto& s : lemma3_sample_Y(N, n, k, derive_seed(200, t))) ++cy[{s[0], s[1]}];
  }
  ASSERT_EQ(cx.size(), 15u);
  ASSERT_EQ(cy.size(), 15u);
  std::vector<std::uint64_t> fx, fy;
  for (auto& [key, v] : cx) fx.push_back(v);
  for (auto& [key, v] : cy) fy.push_back(v);
  std::vector<double> probs(15, 1.0 / 15.0);
  EXPECT_GE(chi_square_gof(fx, probs).p_value, 0.001);
  EXPECT_GE(chi_square_gof(fy, probs).p_value, 0.001);
  EXPECT_GE(chi_square_two_sample(fx, fy).p_value, 0.001);
}

TEST(Concentration, BoundsRespectedOnSmallRun) {
  Example aleph = gen_rare_chain(300);
  auto rep = validate_concentration(aleph, rare_chain_rule(), 2, 60, std::nullopt,
                                    {0.02, 0.05, 0.1, 0.2}, 600, 17, 2);
  ASSERT_EQ(rep.rows.size(), 4u);
  for (const auto& r : rep.rows) {
    double se = binomial_stderr(r.emp_two, rep.trials);
    EXPECT_LE(r.emp_two, r.bound_two + 3 * se + 1e-12);
    EXPECT_LE(r.emp_upper, r.bound_one + 3 * binomial_stderr(r.emp_upper, rep.trials) + 1e-12);
    EXPECT_GE(r.emp_two, std::max(r.emp_upper, r.emp_lower) - 1e-12);
  }
  EXPECT_EQ(rep.a_global, rare_chain_exact_q(300, 2));
}

TEST(Concentration, DeterministicAcrossThreadCounts) {
  Example aleph = gen_rare_chain(100);
  auto a = validate_concentration(aleph, rare_chain_rule(), 2, 30, std::nullopt, {0.05, 0.1},
                                  300, 5, 1);
  auto b = validate_concentration(aleph, rare_chain_rule(), 2, 30, std::nullopt, {0.05, 0.1},
                                  300, 5, 2);
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].emp_two, b.rows[i].emp_two);
    EXPECT_EQ(a.rows[i].emp_upper, b.rows[i].emp_upper);
  }
  EXPECT_EQ(a.emp_zero, b.emp_zero);
}

TEST(Concentration, UnitEpsilonIsTrivial) {
  Example aleph = gen_rare_chain(120);
  auto rep = validate_concentration(aleph, rare_chain_rule(), 2, 40, std::nullopt, {1.0},
                                    200, 3, 1);
  ASSERT_EQ(rep.rows.size(), 1u);
  EXPECT_EQ(rep.rows[0].emp_two, 0.0);  // |deviation| of probabilities never reaches 1
  EXPECT_NEAR(rep.rows[0].bound_two, 2.0 * std::exp(-2.0 * 20.0), 1e-12);
}

TEST(Concentration, CsvIsDeterministic) {
  Example aleph = gen_rare_chain(80);
  auto rep = validate_concentration(aleph, rare_chain_rule(), 2, 30, std::nullopt,
                                    {0.05, 0.1}, 100, 9, 2);
  std::string csv = concentration_csv(rep);
  EXPECT_EQ(csv, concentration_csv(rep));
  EXPECT_NE(csv.find("eps,emp_upper"), std::string::npos);
  // header comment + column row + 2 eps rows + realizable block
  EXPECT_GE(std::count(csv.begin(), csv.end(), '\n'), 5);
}

TEST(Concentration, TwoSampleMode) {
  Example aleph = gen_rare_chain(200);
  auto rep = validate_concentration(aleph, rare_chain_rule(), 2, 60, 40, {0.05, 0.1}, 400,
                                    23, 2);
  EXPECT_TRUE(rep.two_sample);
  EXPECT_TRUE(rep.realizable_rows.empty());
  for (const auto& r : rep.rows) {
    EXPECT_LE(r.emp_two, r.bound_two + 3 * binomial_stderr(r.emp_two, rep.trials) + 1e-12);
    EXPECT_EQ(r.bound_two, bounds::tail_two_sample(60, 40, 2, r.eps, true));
  }
}

TEST(PacExperiment, IdentityMaskPerfectTheoryNeverErrs) {
  // all constants rare: the rule has Q = 1 on every sample, and with the
  // identity mask every trial's error set is empty
  std::vector<Atom> atoms;
  std::vector<std::string> names;
  for (int i = 1; i <= 30; ++i) {
    names.push_back("c" + std::to_string(i));
    atoms.push_back(Atom{"rare", {names.back()}});
  }
  Example aleph(names, atoms, {Predicate{"rare", 1}});
  HypothesisClass H({rare_clique_rule()});
  PacConfig cfg;
  cfg.k = 2;
  cfg.target = Predicate{"rare", 1};
  cfg.n = 20;
  cfg.u = 8;
  cfg.masker = Masker::identity();
  cfg.outer_trials = 10;
  cfg.inner_trials = 2;
  cfg.seed = 31;
  auto res = run_pac_experiment(aleph, H, cfg);
  for (const TrialRecord& r : res.trials) {
    EXPECT_EQ(r.q_train[0], Rational(1, 1));
    EXPECT_EQ(r.f_k[0], 0u);
  }
  EXPECT_EQ(res.thm9_violation_rate, 0.0);
  EXPECT_EQ(res.thm7_violation_rate, 0.0);
}

TEST(PacExperiment, DeterministicAcrossThreadCounts) {
  Example aleph = gen_rare_clique(500);
  HypothesisClass H({rare_clique_rule(), parse_theory("forall X: !rare(X)")});
  PacConfig cfg;
  cfg.k = 2;
  cfg.target = Predicate{"rare", 1};
  cfg.n = 100;
  cfg.u = 12;
  cfg.gamma = Rational(1, 10);
  cfg.masker = Masker::positive_only({"rare"});
  cfg.outer_trials = 12;
  cfg.inner_trials = 2;
  cfg.seed = 77;
  cfg.threads = 1;
  auto a = run_pac_experiment(aleph, H, cfg);
  cfg.threads = 2;
  auto b = run_pac_experiment(aleph, H, cfg);
  EXPECT_EQ(trials_csv(a), trials_csv(b));
  EXPECT_EQ(outers_csv(a), outers_csv(b));
}

TEST(PacExperiment, RecordsCarryPerTheoryData) {
  Example aleph = gen_rare_clique(300);
  HypothesisClass H({rare_clique_rule(), parse_theory("forall X: rare(X)")});
  PacConfig cfg;
  cfg.k = 2;
  cfg.target = Predicate{"rare", 1};
  cfg.n = 60;
  cfg.u = 10;
  cfg.gamma = Rational(1, 5);
  cfg.masker = Masker::positive_only({"rare"});
  cfg.outer_trials = 4;
  cfg.inner_trials = 3;
  cfg.seed = 5;
  auto res = run_pac_experiment(aleph, H, cfg);
  ASSERT_EQ(res.trials.size(), 12u);
  ASSERT_EQ(res.outers.size(), 4u);
  for (const TrialRecord& r : res.trials) {
    ASSERT_EQ(r.q_train.size(), 2u);
    ASSERT_EQ(r.f_k.size(), 2u);
    ASSERT_EQ(r.f_vote.size(), 2u);
    EXPECT_EQ(r.selected, 0u);  // the always-rare theory scores 0
    EXPECT_LE(r.f_vote[0], r.f_k[0] + 0u);
  }
  for (const OuterRecord& o : res.outers) {
    // theory 1 has training error, so no realizable bound for it
    EXPECT_TRUE(std::isnan(o.bound_thm7[1]));
    double mean = 0;
    for (const TrialRecord& r : res.trials)
      if (r.outer == o.outer) mean += static_cast<double>(r.f_k[0]);
    mean /= 3.0;
    EXPECT_NEAR(o.mean_f_k[0], mean, 1e-12);
  }
}

TEST(EliminateConstants, PaperExample) {
  Theory t = parse_theory("forall X: fr(alice,X) -> !sm(X)");
  Example ex = parse_example(
      "domain: alice bob carol dave eve\n"
      "fr(alice,bob).\nfr(alice,carol).\nfr(dave,eve).\nsm(bob).\nsm(dave).\n");
  auto res = eliminate_constants(t, ex);
  ASSERT_EQ(res.theory.formulas.size(), 1u);
  EXPECT_TRUE(res.theory.constant_free());
  EXPECT_EQ(print_formula(res.theory.formulas[0]), "forall X: fr__1_alice(X) -> !sm(X)");
  // auxiliary facts: exactly the friends of alice
  EXPECT_TRUE(res.example.holds(Atom{"fr__1_alice", {"bob"}}));
  EXPECT_TRUE(res.example.holds(Atom{"fr__1_alice", {"carol"}}));
  EXPECT_FALSE(res.example.holds(Atom{"fr__1_alice", {"eve"}}));
  // original atoms survive
  EXPECT_TRUE(res.example.holds(Atom{"fr", {"alice", "bob"}}));
}

TEST(EliminateConstants, ConstantFreeInputUnchanged) {
  Theory t = smokers_rule();
  Example ex = parse_example("domain: a b\nfr(a,b).\n");
  auto res = eliminate_constants(t, ex);
  EXPECT_EQ(res.theory, t);
  EXPECT_EQ(res.example, ex);
}

TEST(EliminateConstants, NameCollisionRejected) {
  Theory t = parse_theory("forall X: fr(alice,X) -> sm(X)");
  Example ex = parse_example("domain: alice bob\nfr(alice,bob).\nfr__1_alice(bob).\n");
  EXPECT_THROW(eliminate_constants(t, ex), std::invalid_argument);
}

TEST(EliminateConstants, AllConstantAtomBecomesNullary) {
  Theory t = parse_theory("forall X: fr(alice,bob) -> sm(X)");
  Example ex = parse_example("domain: alice bob\nfr(alice,bob).\n");
  auto res = eliminate_constants(t, ex);
  EXPECT_EQ(print_formula(res.theory.formulas[0]), "forall X: fr__1_alice_2_bob -> sm(X)");
  EXPECT_TRUE(res.example.holds(Atom{"fr__1_alice_2_bob", {}}));
}

// Fragment semantics: on subsets containing the eliminated constants the
// rewrite is truth-preserving; on subsets missing them the auxiliary facts
// survive restriction while the original atoms do not, so the rewritten rule
// can see strictly more (this is the known caveat, demonstrated below).
TEST(EliminateConstants, FragmentSemantics) {
  Theory original = parse_theory("forall X: fr(alice,X) -> !sm(X)");
  Example ex = parse_example(
      "domain: alice bob carol dave eve\n"
      "fr(alice,bob).\nfr(alice,carol).\nsm(bob).\nsm(eve).\n");
  auto res = eliminate_constants(original, ex);
  for (std::size_t size = 0; size <= 5; ++size) {
    oracle::for_each_subset_of_size(
        ex.domain(), size, [&](const std::vector<std::string>& s) {
          bool rewritten_truth =
              evaluate(restrict_example(res.example, s).example, res.theory);
          if (std::find(s.begin(), s.end(), "alice") != s.end()) {
            bool original_truth = evaluate(restrict_example(ex, s).example, original);
            ASSERT_EQ(original_truth, rewritten_truth);
          }
        });
  }
  // caveat witness: once alice leaves the fragment the original rule is not
  // even evaluable (its constant is gone), while the rewritten rule is, and
  // the surviving auxiliary fact falsifies it
  std::vector<std::string> bob{"bob"};
  EXPECT_THROW(evaluate(restrict_example(ex, bob).example, original), std::invalid_argument);
  EXPECT_FALSE(evaluate(restrict_example(res.example, bob).example, res.theory));
}

TEST(Reports, CsvDeterministicAndShaped) {
  Example aleph = gen_rare_clique(100);
  HypothesisClass H({rare_clique_rule()});
  PacConfig cfg;
  cfg.k = 2;
  cfg.target = Predicate{"rare", 1};
  cfg.n = 30;
  cfg.u = 8;
  cfg.gamma = Rational(1, 4);
  cfg.masker = Masker::positive_only({"rare"});
  cfg.outer_trials = 3;
  cfg.inner_trials = 2;
  cfg.seed = 1;
  auto res = run_pac_experiment(aleph, H, cfg);
  std::string csv = trials_csv(res);
  EXPECT_EQ(csv, trials_csv(run_pac_experiment(aleph, H, cfg)));
  // header + 6 rows
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 8);
  EXPECT_NE(csv.find("q_train_0"), std::string::npos);
  EXPECT_NE(csv.find("f_vote_0"), std::string::npos);
}

TEST(Reports, FormatDoubleShortRoundTrip) {
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(1.0 / 3.0), "0.3333333333333333");
  EXPECT_EQ(format_double(2706.5), "2706.5");
}

}  // namespace
