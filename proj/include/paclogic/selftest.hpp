#ifndef PACLOGIC_SELFTEST_HPP
#define PACLOGIC_SELFTEST_HPP

#include <cmath>
#include <string>
#include <vector>

#include "paclogic/bounds.hpp"
#include "paclogic/fragments.hpp"
#include "paclogic/masking.hpp"
#include "paclogic/parser.hpp"
#include "paclogic/reasoner.hpp"
#include "paclogic/scenarios.hpp"

namespace paclogic {

struct SelfTestCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The textbook micro-example suite: every small closed-form quantity the
/// library should reproduce bit-exactly, runnable from the CLI as a quick
/// install check. Deterministic output.
inline std::vector<SelfTestCheck> run_selftest() {
  std::vector<SelfTestCheck> checks;
  auto add = [&](const std::string& name, bool ok, const std::string& detail) {
    checks.push_back({name, ok, detail});
  };

  // smokers example: three friends, two smokers
  Example upsilon = parse_example(
      "domain: alice bob eve\n"
      "fr(alice,bob).\n"
      "sm(alice).\n"
      "sm(eve).\n");
  Theory all_smoke = parse_theory("forall X: sm(X)");
  Theory some_friends = parse_theory("exists X, Y: fr(X,Y)");

  {
    Rational q = q_exact(upsilon, 1, all_smoke).value;
    add("Q(k=1, forall X: sm(X)) = 2/3", q == Rational(2, 3), q.str());
  }
  {
    Rational q = q_exact(upsilon, 2, all_smoke).value;
    add("Q(k=2, forall X: sm(X)) = 1/3", q == Rational(1, 3), q.str());
  }
  {
    Rational q = q_exact(upsilon, 2, some_friends).value;
    add("Q(k=2, exists X,Y: fr(X,Y)) = 1/3", q == Rational(1, 3), q.str());
  }

  // bounded entailment: one known smoker with one friend
  Example ups2 = parse_example("domain: alice bob eve\nfr(alice,bob).\nsm(alice).\n");
  MaskedExample mask2 = apply_mask(Masker::positive_only({"fr", "sm"}), ups2);
  Theory rule = smokers_rule();
  Literal sm_bob{Atom{"sm", {"bob"}}, true};
  {
    auto r = k_entails(mask2, rule, 2, sm_bob);
    add("sm(bob) is 2-entailed", r.entailed,
        r.entailed ? "witness {" + r.witness[0] + "," + r.witness[1] + "}" : "no witness");
  }
  {
    auto r = k_entails(mask2, rule, 1, sm_bob);
    add("sm(bob) is not 1-entailed", !r.entailed, r.entailed ? "unexpected witness" : "ok");
  }

  // voting entailment with two smoker friends
  {
    Example ups3 = parse_example(
        "domain: alice bob eve\n"
        "fr(alice,bob).\nfr(eve,bob).\nsm(alice).\nsm(eve).\n");
    MaskedExample mask3 = apply_mask(Masker::positive_only({"fr", "sm"}), ups3);
    InferenceEngine engine(mask3, rule);
    std::uint64_t votes = engine.vote_count(2, sm_bob);
    EntailmentResult res =
        engine.voting_entailed_literals(2, Rational(2, 3), Predicate{"sm", 1});
    bool ok = votes == 2 && res.threshold == Rational(2, 1) && res.contains(sm_bob);
    add("sm(bob) voting-entailed at k=2, gamma=2/3 (threshold exactly 2)", ok,
        "votes=" + std::to_string(votes) + " threshold=" + res.threshold.str());
  }

  // rare-clique at two scales
  {
    Rational q = q_exact(gen_rare_clique(1000000), 2, rare_clique_rule()).value;
    bool ok = q == Rational(499999, 500000) && q == rare_clique_exact_q(1000000, 2);
    add("rare-clique 10^6: Q = 0.999998 exactly", ok, q.str());
  }
  {
    Example clique = gen_rare_clique(100);
    Rational q = q_exact(clique, 2, rare_clique_rule()).value;
    bool q_ok = q == Rational(1, 1) - Rational(99, 4950);
    MaskedExample mask = apply_mask(Masker::positive_only({"rare"}), clique);
    auto wrong =
        false_entailed(clique, mask, rare_clique_rule(), 2, std::nullopt, Predicate{"rare", 1});
    double bound = bounds::worst_case_k(q.to_double(), 100, 2, 1);
    bool ok = q_ok && wrong.size() == 99 && static_cast<double>(wrong.size()) <= bound;
    add("rare-clique 100: 99 wrong literals within worst-case bound 400", ok,
        "|F|=" + std::to_string(wrong.size()) + " bound=" + std::to_string(bound));
  }
  {
    Example chain = gen_rare_chain(5);
    MaskedExample mask = apply_mask(Masker::positive_only({"rare", "e"}), chain);
    auto wrong =
        false_entailed(chain, mask, rare_chain_rule(), 2, std::nullopt, Predicate{"rare", 1});
    add("rare-chain 5: exactly k-1 = 1 wrong literal", wrong.size() == 1,
        "|F|=" + std::to_string(wrong.size()));
  }

  // parser round-trip on the smokers rule
  {
    Theory t = parse_theory("forall X, Y: fr(X,Y) & sm(X) -> sm(Y)");
    Theory back = parse_theory(print_theory(t));
    add("parse/print round-trip (smokers rule)", t == back, print_theory(t));
  }

  return checks;
}

}  // namespace paclogic

#endif  // PACLOGIC_SELFTEST_HPP
