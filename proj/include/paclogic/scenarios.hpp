#ifndef PACLOGIC_SCENARIOS_HPP
#define PACLOGIC_SCENARIOS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "paclogic/example.hpp"
#include "paclogic/parser.hpp"
#include "paclogic/rational.hpp"
#include "paclogic/rng.hpp"

namespace paclogic {

/// Benchmark structure generators. Constants are named c1..cn (p1..pn for the
/// smokers domain); vocabularies are attached explicitly so maskers can see
/// predicates even when no atom of theirs is present.

inline std::vector<std::string> numbered_constants(std::uint64_t n, const std::string& prefix) {
  std::vector<std::string> cs;
  cs.reserve(n);
  for (std::uint64_t i = 1; i <= n; ++i) cs.push_back(prefix + std::to_string(i));
  return cs;
}

/// One rare object in an otherwise featureless domain: atoms {rare(c1)}.
inline Example gen_rare_clique(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("gen_rare_clique: need n >= 2");
  std::vector<Atom> atoms{Atom{"rare", {"c1"}}};
  return Example(numbered_constants(n, "c"), atoms, {Predicate{"rare", 1}});
}

/// A rare object at the head of an e/2 chain:
/// {rare(c1), e(c1,c2), ..., e(c_{n-1},c_n)}.
inline Example gen_rare_chain(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("gen_rare_chain: need n >= 2");
  std::vector<Atom> atoms{Atom{"rare", {"c1"}}};
  for (std::uint64_t i = 1; i < n; ++i)
    atoms.push_back(Atom{"e", {"c" + std::to_string(i), "c" + std::to_string(i + 1)}});
  return Example(numbered_constants(n, "c"), atoms,
                 {Predicate{"rare", 1}, Predicate{"e", 2}});
}

/// Smokers domain: `smokers` of the `people` constants smoke (the first ones),
/// and `friendships` ordered fr/2 pairs are drawn uniformly without
/// replacement among distinct pairs.
inline Example gen_smokers(std::uint64_t people, std::uint64_t friendships,
                           std::uint64_t smokers, std::uint64_t seed) {
  if (people < 2) throw std::invalid_argument("gen_smokers: need people >= 2");
  if (smokers > people) throw std::invalid_argument("gen_smokers: smokers > people");
  const std::uint64_t max_pairs = people * (people - 1);
  if (max_pairs > UINT32_MAX)
    throw std::invalid_argument("gen_smokers: domain too large for pair sampling");
  if (friendships > max_pairs)
    throw std::invalid_argument("gen_smokers: friendships exceed distinct ordered pairs");
  std::vector<std::string> names = numbered_constants(people, "p");
  std::vector<Atom> atoms;
  for (std::uint64_t i = 0; i < smokers; ++i) atoms.push_back(Atom{"sm", {names[i]}});
  SplitMix64 rng(seed);
  SubsetSampler sampler(static_cast<std::uint32_t>(max_pairs));
  std::vector<std::uint32_t> picked;
  sampler.sample_sorted(rng, static_cast<std::uint32_t>(friendships), picked);
  for (std::uint32_t code : picked) {
    std::uint64_t i = code / (people - 1);
    std::uint64_t j = code % (people - 1);
    if (j >= i) ++j;  // skip the diagonal
    atoms.push_back(Atom{"fr", {names[i], names[j]}});
  }
  return Example(std::move(names), atoms, {Predicate{"sm", 1}, Predicate{"fr", 2}});
}

/// Random structure: every ground atom of the vocabulary present
/// independently with probability `density`.
inline Example gen_random(std::uint64_t n, const std::vector<Predicate>& vocab, double density,
                          std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("gen_random: need n >= 2");
  if (density < 0.0 || density > 1.0)
    throw std::invalid_argument("gen_random: density outside [0,1]");
  std::vector<std::string> names = numbered_constants(n, "c");
  std::vector<Atom> atoms;
  SplitMix64 rng(seed);
  for (const Predicate& p : vocab) {
    if (p.arity > kMaxArity) throw std::invalid_argument("gen_random: arity too large");
    std::vector<std::uint64_t> tuple(p.arity, 0);
    for (;;) {
      if (rng.unit() < density) {
        Atom a;
        a.pred = p.name;
        for (std::uint32_t i = 0; i < p.arity; ++i) a.args.push_back(names[tuple[i]]);
        atoms.push_back(std::move(a));
      }
      std::uint32_t pos = p.arity;
      while (pos > 0) {
        if (++tuple[pos - 1] < n) break;
        tuple[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
    }
  }
  return Example(std::move(names), atoms, vocab);
}

// -- canonical rules and closed-form probabilities ---------------------------

inline Theory rare_clique_rule() { return parse_theory("forall X, Y: rare(X) -> rare(Y)"); }
inline Theory rare_chain_rule() {
  return parse_theory("forall X, Y: rare(X) & e(X,Y) -> rare(Y)");
}
inline Theory smokers_rule() {
  return parse_theory("forall X, Y: fr(X,Y) & sm(X) -> sm(Y)");
}

/// Q of the rare-clique rule on gen_rare_clique(n) at fragment size k: the
/// falsifying size-k subsets are exactly those containing c1 plus a second
/// constant, so for k >= 2 the count is C(n-1, k-1).
inline Rational rare_clique_exact_q(std::uint64_t n, std::uint32_t k) {
  if (k > n) throw std::invalid_argument("rare_clique_exact_q: k > n");
  if (k < 2) return Rational(1, 1);
  return Rational(1, 1) - Rational(binomial(n - 1, k - 1), binomial(n, k));
}

/// Q of the chain rule on gen_rare_chain(n): a size-k subset falsifies iff it
/// contains both c1 and c2 (the only rare atom plus its outgoing edge), so
/// the count is C(n-2, k-2).
inline Rational rare_chain_exact_q(std::uint64_t n, std::uint32_t k) {
  if (k > n) throw std::invalid_argument("rare_chain_exact_q: k > n");
  if (k < 2) return Rational(1, 1);
  return Rational(1, 1) - Rational(binomial(n - 2, k - 2), binomial(n, k));
}

/// Q of `exists X: rare(X)` on gen_rare_clique(n): the fraction of size-k
/// subsets containing c1, i.e. C(n-1,k-1)/C(n,k) = k/n. Used as a closed-form
/// global probability for realizable-tail validation.
inline Rational rare_clique_exists_q(std::uint64_t n, std::uint32_t k) {
  if (k > n || k == 0) throw std::invalid_argument("rare_clique_exists_q: bad k");
  return Rational(binomial(n - 1, k - 1), binomial(n, k));
}

inline Theory exists_rare_formula() { return parse_theory("exists X: rare(X)"); }

}  // namespace paclogic

#endif  // PACLOGIC_SCENARIOS_HPP
