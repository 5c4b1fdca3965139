#ifndef PACLOGIC_FRAGMENTS_HPP
#define PACLOGIC_FRAGMENTS_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "paclogic/example.hpp"
#include "paclogic/logic.hpp"
#include "paclogic/model_check.hpp"
#include "paclogic/rational.hpp"
#include "paclogic/rng.hpp"

namespace paclogic {

struct ProbabilityEstimate {
  enum class Mode { kExact, kMonteCarlo };

  Rational value;              // reduced ratio
  std::int64_t satisfying = 0;  // raw numerator: satisfying subsets (or MC hits)
  std::int64_t total = 0;       // raw denominator: C(|domain|, k) (or MC trials)
  Mode mode = Mode::kExact;
  std::uint64_t trials = 0;  // MC only
  std::uint32_t k = 0;
  std::uint64_t theory_digest = 0;

  double to_double() const { return value.to_double(); }
};

/// FNV-1a of the canonical theory text; stored with estimates so reports can
/// tie a value back to the theory it was computed for.
inline std::uint64_t theory_digest(const Theory& t) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : print_theory(t)) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

/// Default ceiling on the number of fragment evaluations one exact-Q call may
/// perform. Callers see an error rather than an open-ended computation.
inline constexpr std::uint64_t kDefaultQBudget = 10'000'000;

namespace detail {

/// Exact Q over the pool: the fraction of size-k subsets S of `pool` whose
/// induced fragment satisfies the (constant-free) compiled theory.
///
/// Subsets are grouped by their intersection A with the pool's "active"
/// constants (those occurring in some atom lying entirely inside the pool).
/// All subsets sharing A induce isomorphic fragments, so one evaluation per
/// group suffices and the group contributes C(#inactive, k-|A|) subsets.
/// This computes exactly the same count as enumerating all C(|pool|, k)
/// subsets; for dense pools it degrades to that enumeration.
inline Rational q_exact_on_pool(const Example& ex, const CompiledTheory& theory,
                                std::span<const std::uint32_t> pool, std::uint32_t k,
                                std::uint64_t eval_budget) {
  const std::uint64_t n = pool.size();
  if (k > n) throw std::invalid_argument("q_exact: k exceeds domain size");
  const std::int64_t denom = binomial(n, k);

  if (k == 0) {
    // single empty subset; empty-domain semantics decide
    bool sat = theory.eval(ex, std::span<const std::uint32_t>{});
    return Rational(sat ? 1 : 0, 1);
  }

  // active = pool constants incident to an atom fully contained in the pool
  std::vector<bool> in_pool(ex.domain_size(), false);
  for (std::uint32_t c : pool) in_pool[c] = true;
  std::vector<std::uint32_t> active;
  for (std::uint32_t c : pool) {
    bool act = false;
    for (std::uint32_t ai : ex.incident_atoms(c)) {
      const GroundAtom& g = ex.atoms()[ai];
      bool inside = true;
      for (std::uint32_t i = 0; i < g.arity; ++i) inside = inside && in_pool[g.args[i]];
      if (inside) {
        act = true;
        break;
      }
    }
    if (act) active.push_back(c);
  }
  std::vector<std::uint32_t> inactive;
  for (std::uint32_t c : pool)
    if (!std::binary_search(active.begin(), active.end(), c)) inactive.push_back(c);
  const std::uint64_t m0 = inactive.size();

  std::uint64_t evals = 0;
  auto charge = [&]() {
    if (++evals > eval_budget)
      throw std::runtime_error(
          "q_exact: evaluation budget exceeded (" + std::to_string(eval_budget) +
          "); use Monte Carlo estimation instead");
  };

  __int128 count = 0;
  std::vector<std::uint32_t> universe;

  // all-inactive subsets: one isomorphism class
  if (m0 >= k) {
    universe.assign(inactive.begin(), inactive.begin() + k);
    charge();
    if (theory.eval(ex, universe)) count += binomial(m0, k);
  }

  // groups with active part A, |A| = j >= 1, padded by k-j inactive extras
  const std::uint32_t jmax = static_cast<std::uint32_t>(
      std::min<std::uint64_t>(k, active.size()));
  std::vector<std::uint32_t> pick;
  for (std::uint32_t j = 1; j <= jmax; ++j) {
    if (m0 < k - j) continue;
    const std::int64_t pad_ways = binomial(m0, k - j);
    pick.assign(j, 0);
    for (std::uint32_t i = 0; i < j; ++i) pick[i] = i;
    for (;;) {
      universe.clear();
      for (std::uint32_t i = 0; i < j; ++i) universe.push_back(active[pick[i]]);
      universe.insert(universe.end(), inactive.begin(), inactive.begin() + (k - j));
      std::sort(universe.begin(), universe.end());
      charge();
      if (theory.eval(ex, universe)) count += pad_ways;
      // next j-combination of active, lexicographic
      std::int32_t i = static_cast<std::int32_t>(j) - 1;
      while (i >= 0 && pick[i] == active.size() - j + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (std::uint32_t t = i + 1; t < j; ++t) pick[t] = pick[t - 1] + 1;
    }
  }

  if (count > denom) throw std::logic_error("q_exact: internal count overflow");
  return Rational(static_cast<std::int64_t>(count), denom);
}

inline void require_constant_free(const Theory& t) {
  if (!t.constant_free())
    throw std::invalid_argument("q: theory must be constant-free");
}

}  // namespace detail

/// Exact fragment-frequency probability: the fraction of size-k subsets S of
/// the example's domain whose fragment satisfies the whole theory. Returned
/// as an exact rational with denominator C(|domain|, k).
inline ProbabilityEstimate q_exact(const Example& ex, std::uint32_t k, const Theory& theory,
                                   std::uint64_t eval_budget = kDefaultQBudget) {
  detail::require_constant_free(theory);
  for (const Formula& f : theory.formulas) f.check_closed();
  CompiledTheory ct(ex, theory);
  std::vector<std::uint32_t> pool(ex.domain_size());
  for (std::uint32_t i = 0; i < pool.size(); ++i) pool[i] = i;
  ProbabilityEstimate est;
  est.value = detail::q_exact_on_pool(ex, ct, pool, k, eval_budget);
  est.mode = ProbabilityEstimate::Mode::kExact;
  est.k = k;
  est.theory_digest = theory_digest(theory);
  return est;
}

/// Monte Carlo estimator of the same probability: the mean of `trials`
/// independent indicator draws over uniformly sampled size-k subsets.
/// Deterministic given the seed.
inline ProbabilityEstimate q_monte_carlo(const Example& ex, std::uint32_t k,
                                         const Theory& theory, std::uint64_t trials,
                                         std::uint64_t seed) {
  detail::require_constant_free(theory);
  if (trials < 1) throw std::invalid_argument("q_monte_carlo: trials must be >= 1");
  if (k > ex.domain_size())
    throw std::invalid_argument("q_monte_carlo: k exceeds domain size");
  CompiledTheory ct(ex, theory);
  SplitMix64 rng(seed);
  SubsetSampler sampler(ex.domain_size());
  std::vector<std::uint32_t> universe;
  std::int64_t hits = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    sampler.sample_sorted(rng, k, universe);
    if (ct.eval(ex, universe)) ++hits;
  }
  ProbabilityEstimate est;
  est.value = Rational(hits, static_cast<std::int64_t>(trials));
  est.mode = ProbabilityEstimate::Mode::kMonteCarlo;
  est.trials = trials;
  est.k = k;
  est.theory_digest = theory_digest(theory);
  return est;
}

}  // namespace paclogic

#endif  // PACLOGIC_FRAGMENTS_HPP
