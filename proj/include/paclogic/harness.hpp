#ifndef PACLOGIC_HARNESS_HPP
#define PACLOGIC_HARNESS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "paclogic/bounds.hpp"
#include "paclogic/example.hpp"
#include "paclogic/fragments.hpp"
#include "paclogic/masking.hpp"
#include "paclogic/model_check.hpp"
#include "paclogic/rational.hpp"
#include "paclogic/reasoner.hpp"
#include "paclogic/rng.hpp"
#include "paclogic/stats.hpp"

namespace paclogic {

/// A finite hypothesis class of constant-free theories, in a fixed order.
struct HypothesisClass {
  std::vector<Theory> theories;

  explicit HypothesisClass(std::vector<Theory> ts) : theories(std::move(ts)) {
    if (theories.empty()) throw std::invalid_argument("hypothesis class must be nonempty");
    for (const Theory& t : theories)
      if (!t.constant_free())
        throw std::invalid_argument("hypothesis class theories must be constant-free");
  }
  std::size_t size() const { return theories.size(); }
};

namespace detail {

/// Runs fn(t) for t in [0, trials) across `threads` workers. Every trial must
/// derive its randomness from its own index, so the schedule cannot affect
/// results.
template <typename Fn>
void parallel_trials(std::uint64_t trials, unsigned threads, Fn&& fn) {
  if (threads <= 1 || trials < 2) {
    for (std::uint64_t t = 0; t < trials; ++t) fn(t);
    return;
  }
  std::vector<std::thread> pool;
  std::uint64_t chunk = (trials + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    std::uint64_t lo = w * chunk;
    std::uint64_t hi = std::min(trials, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn]() {
      for (std::uint64_t t = lo; t < hi; ++t) fn(t);
    });
  }
  for (std::thread& th : pool) th.join();
}

/// Like parallel_trials, but hands each worker its contiguous [lo, hi) range
/// so it can keep per-worker scratch state across its trials.
template <typename Fn>
void parallel_chunks(std::uint64_t trials, unsigned threads, Fn&& fn) {
  if (threads <= 1 || trials < 2) {
    fn(std::uint64_t{0}, trials);
    return;
  }
  std::vector<std::thread> pool;
  std::uint64_t chunk = (trials + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    std::uint64_t lo = w * chunk;
    std::uint64_t hi = std::min(trials, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn]() { fn(lo, hi); });
  }
  for (std::thread& th : pool) th.join();
}

inline std::uint64_t domain_digest(std::span<const std::uint32_t> ids) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (std::uint32_t id : ids) {
    h ^= id;
    h *= 0x100000001B3ULL;
  }
  return h;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Train/test sampling (the learning setting)

struct LearningInstance {
  Fragment training;  // Upsilon
  Fragment test;      // Gamma
};

/// Uniform size-n and size-u constant subsets, drawn independently (they may
/// overlap; the setting places no disjointness requirement), and the induced
/// fragments of the global example.
inline LearningInstance sample_learning_instance(const Example& aleph, std::uint32_t n,
                                                 std::uint32_t u, std::uint64_t seed) {
  if (n > aleph.domain_size() || u > aleph.domain_size())
    throw std::invalid_argument("sample_learning_instance: size exceeds global domain");
  SubsetSampler sampler(aleph.domain_size());
  std::vector<std::uint32_t> ids;
  SplitMix64 rng_train(derive_seed(seed, 1));
  sampler.sample_sorted(rng_train, n, ids);
  std::vector<std::string> train_names;
  for (std::uint32_t id : ids) train_names.push_back(aleph.constant_name(id));
  SplitMix64 rng_test(derive_seed(seed, 2));
  sampler.sample_sorted(rng_test, u, ids);
  std::vector<std::string> test_names;
  for (std::uint32_t id : ids) test_names.push_back(aleph.constant_name(id));
  LearningInstance li;
  li.training = restrict_example(aleph, train_names, "aleph");
  li.test = restrict_example(aleph, test_names, "aleph");
  return li;
}

/// Argmax of exact training accuracy over the hypothesis class; ties break
/// toward the lowest index.
inline std::pair<std::size_t, Rational> select_best_theory(const HypothesisClass& hypotheses,
                                                           const Example& training,
                                                           std::uint32_t k) {
  std::size_t best = 0;
  Rational best_q(-1, 1);
  for (std::size_t i = 0; i < hypotheses.size(); ++i) {
    Rational q = q_exact(training, k, hypotheses.theories[i]).value;
    if (q > best_q) {
      best_q = q;
      best = i;
    }
  }
  return {best, best_q};
}

// ---------------------------------------------------------------------------
// The two sampling processes of the subset-equivalence lemma

/// Process X: floor(n/k) size-k subsets of the global constants, sampled
/// i.i.d. uniformly.
inline std::vector<std::vector<std::uint32_t>> lemma3_sample_X(std::uint32_t aleph_size,
                                                               std::uint32_t n, std::uint32_t k,
                                                               std::uint64_t seed) {
  if (k == 0 || k > n || n > aleph_size)
    throw std::invalid_argument("lemma3_sample_X: need 0 < k <= n <= |domain|");
  const std::uint64_t count = n / k;
  SplitMix64 rng(seed);
  SubsetSampler sampler(aleph_size);
  std::vector<std::vector<std::uint32_t>> out(count);
  for (auto& subset : out) sampler.sample_sorted(rng, k, subset);
  return out;
}

/// Process Y, implemented literally as the three-step mimicking process:
/// draw a size-n training domain, draw floor(n/k) size-k index subsets of an
/// auxiliary index set of size |domain|, then map the used indices into the
/// training domain through a uniformly random injective function.
inline std::vector<std::vector<std::uint32_t>> lemma3_sample_Y(std::uint32_t aleph_size,
                                                               std::uint32_t n, std::uint32_t k,
                                                               std::uint64_t seed) {
  if (k == 0 || k > n || n > aleph_size)
    throw std::invalid_argument("lemma3_sample_Y: need 0 < k <= n <= |domain|");
  const std::uint64_t count = n / k;
  SplitMix64 rng(seed);

  // step 0: the training domain C_Upsilon
  SubsetSampler domain_sampler(aleph_size);
  std::vector<std::uint32_t> c_upsilon;
  domain_sampler.sample_sorted(rng, n, c_upsilon);

  // step 1: index subsets from I' = {0, .., |domain|-1}
  SubsetSampler index_sampler(aleph_size);
  std::vector<std::vector<std::uint32_t>> index_subsets(count);
  std::vector<std::uint32_t> used;
  for (auto& subset : index_subsets) {
    index_sampler.sample_sorted(rng, k, subset);
    used.insert(used.end(), subset.begin(), subset.end());
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());

  // step 2: uniform injective g : used -> C_Upsilon via a random
  // |used|-permutation of the training domain
  SubsetSampler target_sampler(n);
  std::vector<std::uint32_t> targets;
  target_sampler.sample_sequence(rng, static_cast<std::uint32_t>(used.size()), targets);
  std::map<std::uint32_t, std::uint32_t> g;
  for (std::size_t i = 0; i < used.size(); ++i) g[used[i]] = c_upsilon[targets[i]];

  // step 3: apply g
  std::vector<std::vector<std::uint32_t>> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::uint32_t idx : index_subsets[i]) out[i].push_back(g[idx]);
    std::sort(out[i].begin(), out[i].end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Concentration validation

struct ConcentrationRow {
  double eps = 0.0;
  double emp_upper = 0.0;   // P[dev >= eps]
  double emp_lower = 0.0;   // P[-dev >= eps]
  double emp_two = 0.0;     // P[|dev| >= eps]
  double bound_one = 0.0;   // one-sided bound
  double bound_two = 0.0;   // two-sided bound
};

struct RealizableRow {
  double eps = 0.0;    // admissible: eps <= global probability
  double bound = 0.0;  // exp(-floor(n/k) eps)
};

struct ConcentrationReport {
  bool two_sample = false;
  std::uint64_t trials = 0;
  std::uint32_t n = 0, u = 0, k = 0;
  Rational a_global;  // exact Q on the global example (one-sample mode)
  std::vector<ConcentrationRow> rows;
  double emp_zero = 0.0;  // fraction of trials with zero estimate
  std::vector<RealizableRow> realizable_rows;
};

/// Monte Carlo check of the concentration tails: repeatedly samples training
/// (and optionally test) domains, computes the exact formula probability of
/// each sample, and tabulates empirical tail frequencies against the proven
/// bounds for every epsilon on the grid.
inline ConcentrationReport validate_concentration(const Example& aleph, const Theory& theory,
                                                  std::uint32_t k, std::uint32_t n,
                                                  std::optional<std::uint32_t> u,
                                                  const std::vector<double>& eps_grid,
                                                  std::uint64_t trials, std::uint64_t seed,
                                                  unsigned threads = 1,
                                                  std::uint64_t q_budget = kDefaultQBudget) {
  if (trials == 0) throw std::invalid_argument("validate_concentration: trials must be >= 1");
  detail::require_constant_free(theory);
  CompiledTheory compiled(aleph, theory);

  ConcentrationReport rep;
  rep.two_sample = u.has_value();
  rep.trials = trials;
  rep.n = n;
  rep.u = u.value_or(0);
  rep.k = k;

  std::vector<std::uint32_t> full(aleph.domain_size());
  for (std::uint32_t i = 0; i < full.size(); ++i) full[i] = i;
  rep.a_global = detail::q_exact_on_pool(aleph, compiled, full, k, q_budget);
  const double a_global = rep.a_global.to_double();

  const std::size_t grid = eps_grid.size();
  std::vector<std::uint64_t> cnt_upper(grid, 0), cnt_lower(grid, 0), cnt_two(grid, 0);
  std::uint64_t cnt_zero = 0;

  std::mutex merge_mutex;
  const unsigned nthreads = std::max(1u, threads);
  detail::parallel_chunks(trials, nthreads, [&](std::uint64_t lo, std::uint64_t hi) {
    CompiledTheory local(aleph, theory);
    SubsetSampler sampler(aleph.domain_size());
    std::vector<std::uint32_t> pool;
    std::vector<std::uint64_t> up(grid, 0), low(grid, 0), two(grid, 0);
    std::uint64_t zero = 0;
    for (std::uint64_t t = lo; t < hi; ++t) {
      SplitMix64 rng(derive_seed(seed, t));
      sampler.sample_sorted(rng, n, pool);
      Rational a_train = detail::q_exact_on_pool(aleph, local, pool, k, q_budget);
      double dev;
      if (rep.two_sample) {
        sampler.sample_sorted(rng, *u, pool);
        Rational a_test = detail::q_exact_on_pool(aleph, local, pool, k, q_budget);
        dev = (a_train - a_test).to_double();
      } else {
        dev = a_train.to_double() - a_global;
      }
      for (std::size_t i = 0; i < grid; ++i) {
        const double e = eps_grid[i] - 1e-12;
        if (dev >= e) ++up[i];
        if (-dev >= e) ++low[i];
        if (std::fabs(dev) >= e) ++two[i];
      }
      if (a_train.num() == 0) ++zero;
    }
    std::lock_guard<std::mutex> lock(merge_mutex);
    for (std::size_t i = 0; i < grid; ++i) {
      cnt_upper[i] += up[i];
      cnt_lower[i] += low[i];
      cnt_two[i] += two[i];
    }
    cnt_zero += zero;
  });

  for (std::size_t i = 0; i < grid; ++i) {
    ConcentrationRow row;
    row.eps = eps_grid[i];
    row.emp_upper = static_cast<double>(cnt_upper[i]) / trials;
    row.emp_lower = static_cast<double>(cnt_lower[i]) / trials;
    row.emp_two = static_cast<double>(cnt_two[i]) / trials;
    if (rep.two_sample) {
      row.bound_one = bounds::tail_two_sample(n, *u, k, eps_grid[i], false);
      row.bound_two = bounds::tail_two_sample(n, *u, k, eps_grid[i], true);
    } else {
      row.bound_one = bounds::tail_one_sample(n, k, eps_grid[i], false);
      row.bound_two = bounds::tail_one_sample(n, k, eps_grid[i], true);
    }
    rep.rows.push_back(row);
  }
  rep.emp_zero = static_cast<double>(cnt_zero) / trials;
  if (!rep.two_sample) {
    for (double e : eps_grid)
      if (e <= a_global)
        rep.realizable_rows.push_back({e, bounds::tail_realizable(n, k, e)});
    // always include the tightest admissible point
    if (a_global > 0.0 && a_global <= 1.0)
      rep.realizable_rows.push_back({a_global, bounds::tail_realizable(n, k, a_global)});
  }
  return rep;
}

// ---------------------------------------------------------------------------
// PAC experiment

struct PacConfig {
  std::uint32_t k = 2;
  Predicate target;  // arity a
  std::uint32_t n = 0, u = 0;
  std::optional<Rational> gamma;
  Masker masker = Masker::positive_only({});
  std::uint64_t outer_trials = 1;
  std::uint64_t inner_trials = 1;
  double delta = 0.05;
  std::uint64_t seed = 0;
  bool positive_only_targets = false;
  unsigned threads = 1;
  std::uint64_t q_budget = kDefaultQBudget;
};

struct TrialRecord {
  std::uint64_t outer = 0, inner = 0;
  std::uint64_t seed = 0;
  std::uint64_t ups_digest = 0, gam_digest = 0;
  std::size_t selected = 0;
  std::vector<Rational> q_train;  // per theory
  std::vector<Rational> q_test;   // per theory
  std::vector<std::uint64_t> f_k;
  std::vector<std::uint64_t> f_vote;  // empty unless voting configured
  std::vector<double> bound_thm9;
  std::vector<double> bound_thm10;  // empty unless voting configured
  bool viol_thm9 = false;
  bool viol_thm10 = false;
};

struct OuterRecord {
  std::uint64_t outer = 0;
  std::uint64_t seed = 0;
  std::uint64_t ups_digest = 0;
  std::size_t selected = 0;
  std::vector<Rational> q_train;
  std::vector<double> bound_thm7;  // NaN for theories with training error
  std::vector<double> bound_thm8;
  std::vector<double> mean_f_k;
  bool viol_thm7 = false;
  bool viol_thm8 = false;
};

struct PacExperimentResult {
  PacConfig config;
  std::vector<Rational> q_global;  // per theory on the global example
  std::vector<TrialRecord> trials;
  std::vector<OuterRecord> outers;
  double thm9_violation_rate = 0.0;
  double thm10_violation_rate = 0.0;
  double thm7_violation_rate = 0.0;
  double thm8_violation_rate = 0.0;
};

namespace detail {

inline std::vector<std::uint32_t> pac_training_pool(std::uint32_t aleph_size,
                                                    const PacConfig& cfg, std::uint64_t outer) {
  SubsetSampler sampler(aleph_size);
  SplitMix64 rng(derive_seed(derive_seed(cfg.seed, outer), 0));
  std::vector<std::uint32_t> pool;
  sampler.sample_sorted(rng, cfg.n, pool);
  return pool;
}

inline std::vector<std::uint32_t> pac_test_pool(std::uint32_t aleph_size, const PacConfig& cfg,
                                                std::uint64_t outer, std::uint64_t inner) {
  SubsetSampler sampler(aleph_size);
  SplitMix64 rng(derive_seed(derive_seed(cfg.seed, outer), inner + 1));
  std::vector<std::uint32_t> pool;
  sampler.sample_sorted(rng, cfg.u, pool);
  return pool;
}

}  // namespace detail

/// Reconstructs the training / test constant subsets a given experiment trial
/// drew; records stay light (digests only) and external checks can replay any
/// trial exactly.
inline std::vector<std::string> replay_training_domain(const Example& aleph,
                                                       const PacConfig& cfg,
                                                       std::uint64_t outer) {
  std::vector<std::string> out;
  for (std::uint32_t id : detail::pac_training_pool(aleph.domain_size(), cfg, outer))
    out.push_back(aleph.constant_name(id));
  return out;
}

inline std::vector<std::string> replay_test_domain(const Example& aleph, const PacConfig& cfg,
                                                   std::uint64_t outer, std::uint64_t inner) {
  std::vector<std::string> out;
  for (std::uint32_t id : detail::pac_test_pool(aleph.domain_size(), cfg, outer, inner))
    out.push_back(aleph.constant_name(id));
  return out;
}

/// Runs the full learn-and-predict protocol: per outer trial draw a training
/// domain, compute every theory's exact training accuracy, select the argmax
/// theory, and derive all PAC bounds; per inner trial draw a test domain,
/// mask it, run both inference modes for every theory, and compare error
/// counts against the bounds. The expected-error bounds are checked per outer
/// trial against the inner mean.
inline PacExperimentResult run_pac_experiment(const Example& aleph,
                                              const HypothesisClass& hypotheses,
                                              const PacConfig& config) {
  if (config.n > aleph.domain_size() || config.u > aleph.domain_size())
    throw std::invalid_argument("run_pac_experiment: sample sizes exceed global domain");
  if (config.outer_trials == 0 || config.inner_trials == 0)
    throw std::invalid_argument("run_pac_experiment: trial counts must be >= 1");
  bounds::check_delta(config.delta);
  const std::size_t H = hypotheses.size();
  const std::uint32_t a = config.target.arity;
  const bool voting = config.gamma.has_value();
  const double gamma_d = voting ? config.gamma->to_double() : 0.0;

  PacExperimentResult result;
  result.config = config;

  {
    CompiledTheory probe(aleph, hypotheses.theories[0]);
    std::vector<std::uint32_t> full(aleph.domain_size());
    for (std::uint32_t i = 0; i < full.size(); ++i) full[i] = i;
    for (const Theory& t : hypotheses.theories) {
      CompiledTheory ct(aleph, t);
      result.q_global.push_back(
          detail::q_exact_on_pool(aleph, ct, full, config.k, config.q_budget));
    }
  }

  result.outers.resize(config.outer_trials);
  result.trials.resize(config.outer_trials * config.inner_trials);

  detail::parallel_trials(config.outer_trials, config.threads, [&](std::uint64_t o) {
    // compiled theories are per-thread (they keep a scratch binding buffer)
    std::vector<CompiledTheory> compiled;
    compiled.reserve(H);
    for (const Theory& t : hypotheses.theories) compiled.emplace_back(aleph, t);

    OuterRecord& orec = result.outers[o];
    orec.outer = o;
    orec.seed = derive_seed(config.seed, o);
    std::vector<std::uint32_t> train_pool =
        detail::pac_training_pool(aleph.domain_size(), config, o);
    orec.ups_digest = detail::domain_digest(train_pool);

    orec.q_train.resize(H);
    orec.bound_thm7.assign(H, std::numeric_limits<double>::quiet_NaN());
    orec.bound_thm8.resize(H);
    std::vector<double> bound9(H), bound10(voting ? H : 0);
    for (std::size_t i = 0; i < H; ++i) {
      orec.q_train[i] =
          detail::q_exact_on_pool(aleph, compiled[i], train_pool, config.k, config.q_budget);
      double q = orec.q_train[i].to_double();
      if (orec.q_train[i] == Rational(1, 1))
        orec.bound_thm7[i] = bounds::pac_realizable_expected(config.n, config.u, config.k, a,
                                                             H, config.delta)
                                 .value;
      orec.bound_thm8[i] =
          bounds::pac_expected(q, config.n, config.u, config.k, a, H, config.delta).value;
      bound9[i] = bounds::pac_actual(q, config.n, config.u, config.k, a, H, config.delta).value;
      if (voting)
        bound10[i] = bounds::pac_voting(q, config.n, config.u, config.k, a, gamma_d, H,
                                        config.delta)
                         .value;
    }
    orec.selected = 0;
    for (std::size_t i = 1; i < H; ++i)
      if (orec.q_train[i] > orec.q_train[orec.selected]) orec.selected = i;

    orec.mean_f_k.assign(H, 0.0);
    for (std::uint64_t j = 0; j < config.inner_trials; ++j) {
      TrialRecord& rec = result.trials[o * config.inner_trials + j];
      rec.outer = o;
      rec.inner = j;
      rec.seed = derive_seed(orec.seed, j + 1);
      rec.selected = orec.selected;
      rec.q_train = orec.q_train;
      rec.ups_digest = orec.ups_digest;

      std::vector<std::uint32_t> test_pool =
          detail::pac_test_pool(aleph.domain_size(), config, o, j);
      rec.gam_digest = detail::domain_digest(test_pool);
      std::vector<std::string> test_names;
      test_names.reserve(test_pool.size());
      for (std::uint32_t id : test_pool) test_names.push_back(aleph.constant_name(id));
      Fragment gamma_frag = restrict_example(aleph, test_names, "aleph");
      const Example& gamma_ex = gamma_frag.example;
      MaskedExample mask = apply_mask(config.masker, gamma_ex);

      rec.q_test.resize(H);
      rec.f_k.resize(H);
      if (voting) rec.f_vote.resize(H);
      rec.bound_thm9 = bound9;
      if (voting) rec.bound_thm10 = bound10;
      for (std::size_t i = 0; i < H; ++i) {
        rec.q_test[i] =
            detail::q_exact_on_pool(aleph, compiled[i], test_pool, config.k, config.q_budget);
        InferenceEngine engine(mask, hypotheses.theories[i]);
        EntailmentResult rk = engine.k_entailed_literals(config.k, config.target,
                                                         config.positive_only_targets);
        std::uint64_t wrong_k = 0;
        for (const auto& e : rk.entries)
          if (!gamma_ex.holds(e.literal)) ++wrong_k;
        rec.f_k[i] = wrong_k;
        orec.mean_f_k[i] += static_cast<double>(wrong_k);
        if (wrong_k > bound9[i]) rec.viol_thm9 = true;
        if (voting) {
          EntailmentResult rv = engine.voting_entailed_literals(
              config.k, *config.gamma, config.target, config.positive_only_targets);
          std::uint64_t wrong_v = 0;
          for (const auto& e : rv.entries)
            if (!gamma_ex.holds(e.literal)) ++wrong_v;
          rec.f_vote[i] = wrong_v;
          if (wrong_v > bound10[i]) rec.viol_thm10 = true;
        }
      }
    }
    for (std::size_t i = 0; i < H; ++i) {
      orec.mean_f_k[i] /= static_cast<double>(config.inner_trials);
      if (!std::isnan(orec.bound_thm7[i]) && orec.mean_f_k[i] > orec.bound_thm7[i])
        orec.viol_thm7 = true;
      if (orec.mean_f_k[i] > orec.bound_thm8[i]) orec.viol_thm8 = true;
    }
  });

  std::uint64_t v9 = 0, v10 = 0, v7 = 0, v8 = 0;
  for (const TrialRecord& r : result.trials) {
    if (r.viol_thm9) ++v9;
    if (r.viol_thm10) ++v10;
  }
  for (const OuterRecord& r : result.outers) {
    if (r.viol_thm7) ++v7;
    if (r.viol_thm8) ++v8;
  }
  result.thm9_violation_rate = static_cast<double>(v9) / result.trials.size();
  result.thm10_violation_rate = static_cast<double>(v10) / result.trials.size();
  result.thm7_violation_rate = static_cast<double>(v7) / result.outers.size();
  result.thm8_violation_rate = static_cast<double>(v8) / result.outers.size();
  return result;
}

// ---------------------------------------------------------------------------
// Constant elimination (auxiliary predicates)

struct ConstantEliminationResult {
  Theory theory;     // constant-free rewrite
  Example example;   // parent example augmented with auxiliary facts
};

namespace detail {

struct AuxPattern {
  std::string pred;
  std::uint32_t arity = 0;                       // original arity
  std::vector<std::pair<std::uint32_t, std::string>> fixed;  // (position, constant)
  std::string aux_name;
  std::uint32_t aux_arity = 0;

  friend bool operator<(const AuxPattern& a, const AuxPattern& b) {
    return std::tie(a.pred, a.arity, a.fixed) < std::tie(b.pred, b.arity, b.fixed);
  }
};

inline AuxPattern pattern_of(const Matrix& atom) {
  AuxPattern p;
  p.pred = atom.pred;
  p.arity = static_cast<std::uint32_t>(atom.args.size());
  p.aux_name = atom.pred + "__";
  bool first = true;
  for (std::uint32_t i = 0; i < atom.args.size(); ++i) {
    if (!atom.args[i].is_variable) {
      p.fixed.emplace_back(i, atom.args[i].name);
      if (!first) p.aux_name += "_";
      p.aux_name += std::to_string(i + 1) + "_" + atom.args[i].name;
      first = false;
    } else {
      ++p.aux_arity;
    }
  }
  return p;
}

}  // namespace detail

/// Rewrites a theory with constants into a constant-free theory over
/// auxiliary predicates (one per atom pattern with fixed constant positions),
/// and augments the example with the auxiliary facts the original atoms
/// induce: aux(d...) holds iff the original atom with constants merged back
/// in holds.
inline ConstantEliminationResult eliminate_constants(const Theory& theory, const Example& ex) {
  std::map<detail::AuxPattern, std::string> patterns;

  Theory rewritten;
  for (const Formula& f : theory.formulas) {
    Formula nf;
    nf.prefix = f.prefix;
    // rewrite atoms bottom-up
    auto rewrite = [&](auto&& self, const Matrix& m) -> Matrix {
      if (m.kind != Connective::kAtom) {
        Matrix out;
        out.kind = m.kind;
        for (const Matrix& c : m.children) out.children.push_back(self(self, c));
        return out;
      }
      bool has_const = std::any_of(m.args.begin(), m.args.end(),
                                   [](const Term& t) { return !t.is_variable; });
      if (!has_const) return m;
      detail::AuxPattern p = detail::pattern_of(m);
      patterns.emplace(p, p.aux_name);
      Matrix out;
      out.kind = Connective::kAtom;
      out.pred = p.aux_name;
      for (const Term& t : m.args)
        if (t.is_variable) out.args.push_back(t);
      return out;
    };
    nf.matrix = rewrite(rewrite, f.matrix);
    rewritten.push_unique(std::move(nf));
  }

  // reject auxiliary names colliding with the existing vocabulary
  for (const auto& [p, name] : patterns) {
    for (const Predicate& v : ex.vocabulary())
      if (v.name == name)
        throw std::invalid_argument("eliminate_constants: auxiliary predicate '" + name +
                                    "' collides with the example vocabulary");
    for (const Formula& f : theory.formulas)
      for (const Predicate& q : f.predicates())
        if (q.name == name)
          throw std::invalid_argument("eliminate_constants: auxiliary predicate '" + name +
                                      "' collides with a theory predicate");
  }

  std::vector<Atom> atoms = ex.atoms_as_strings();
  std::vector<Predicate> vocab = ex.vocabulary();
  const auto& dom = ex.domain();
  for (const auto& [p, name] : patterns) {
    vocab.push_back(Predicate{name, p.aux_arity});
    // every tuple over the domain at the variable positions
    std::vector<std::uint32_t> tuple(p.aux_arity, 0);
    if (dom.empty() && p.aux_arity > 0) continue;
    for (;;) {
      Atom original;
      original.pred = p.pred;
      original.args.assign(p.arity, "");
      for (const auto& [pos, c] : p.fixed) original.args[pos] = c;
      std::uint32_t vi = 0;
      Atom aux;
      aux.pred = name;
      for (std::uint32_t i = 0; i < p.arity; ++i) {
        if (original.args[i].empty()) {
          original.args[i] = dom[tuple[vi]];
          aux.args.push_back(dom[tuple[vi]]);
          ++vi;
        }
      }
      if (ex.holds(original)) atoms.push_back(aux);
      std::uint32_t pos = p.aux_arity;
      while (pos > 0) {
        if (++tuple[pos - 1] < dom.size()) break;
        tuple[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
    }
  }

  ConstantEliminationResult out;
  out.theory = std::move(rewritten);
  out.example = Example(dom, atoms, vocab);
  return out;
}

}  // namespace paclogic

#endif  // PACLOGIC_HARNESS_HPP
