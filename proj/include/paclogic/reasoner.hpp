#ifndef PACLOGIC_REASONER_HPP
#define PACLOGIC_REASONER_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "paclogic/example.hpp"
#include "paclogic/logic.hpp"
#include "paclogic/masking.hpp"
#include "paclogic/rational.hpp"
#include "paclogic/sat.hpp"

namespace paclogic {

/// d^e with overflow detection.
inline std::int64_t checked_pow_i64(std::int64_t base, std::uint32_t exp) {
  __int128 r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    r *= base;
    if (r > INT64_MAX) throw std::overflow_error("pow: result exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(r);
}

struct EntailmentResult {
  enum class Mode { kKEntailment, kVoting };

  Predicate target;
  Mode mode = Mode::kKEntailment;
  std::uint32_t k = 0;
  Rational gamma;      // voting only
  Rational threshold;  // voting only: max{1, gamma * |C|^(k-a)}

  struct Entry {
    Literal literal;
    std::vector<std::string> witness;  // k-entailment: one witness subset
    std::uint64_t votes = 0;           // voting: number of voting fragments
  };
  std::vector<Entry> entries;  // sorted by literal

  bool contains(const Literal& l) const {
    return std::any_of(entries.begin(), entries.end(),
                       [&](const Entry& e) { return e.literal == l; });
  }
  std::vector<Literal> literals() const {
    std::vector<Literal> out;
    out.reserve(entries.size());
    for (const Entry& e : entries) out.push_back(e.literal);
    return out;
  }
};

/// Ground consistency, entailment, k-entailment and voting entailment for one
/// (masked example, theory) pair.
///
/// Consistency and entailment are evaluated over the finite universe at hand:
/// a fragment base is consistent iff some truth assignment to the ground
/// atoms over the universe satisfies the grounded theory together with the
/// masked literals (atoms not mentioned stay unconstrained). Ground contexts
/// are cached per universe, since subset enumeration revisits them heavily.
/// Instances are not thread-safe; use one engine per thread.
class InferenceEngine {
 public:
  InferenceEngine(const MaskedExample& mask, const Theory& theory) : domain_(mask.domain) {
    for (std::uint32_t i = 0; i < domain_.size(); ++i) const_ids_.emplace(domain_[i], i);
    for (const Formula& f : theory.formulas) {
      f.check_closed();
      IFormula inf;
      std::map<std::string, std::uint32_t> slots;
      for (const auto& qv : f.prefix) {
        inf.prefix.push_back(qv.quant);
        slots.emplace(qv.var, static_cast<std::uint32_t>(slots.size()));
      }
      inf.matrix = intern_matrix(f.matrix, slots);
      formulas_.push_back(std::move(inf));
    }
    mask_incidence_.assign(domain_.size(), {});
    for (const Literal& l : mask.literals) {
      ILit il = intern_literal(l);
      std::uint32_t idx = static_cast<std::uint32_t>(mask_lits_.size());
      mask_lits_.push_back(il);
      if (il.atom.arity == 0) {
        mask_nullary_.push_back(idx);
      } else {
        std::set<std::uint32_t> cs(il.atom.args.begin(),
                                   il.atom.args.begin() + il.atom.arity);
        for (std::uint32_t c : cs) mask_incidence_[c].push_back(idx);
      }
    }
  }

  std::uint32_t domain_size() const { return static_cast<std::uint32_t>(domain_.size()); }

  bool consistent(const std::vector<std::string>& universe) {
    return context_for(ids_of(universe)).consistent;
  }

  bool entails(const std::vector<std::string>& universe, const Literal& phi) {
    std::vector<std::uint32_t> ids = ids_of(universe);
    ILit il = intern_literal(phi);
    for (std::uint32_t i = 0; i < il.atom.arity; ++i)
      if (!std::binary_search(ids.begin(), ids.end(), il.atom.args[i]))
        throw std::invalid_argument("entails: literal constant outside the universe");
    return entails_in(context_for(ids), il);
  }

  struct KEntails {
    bool entailed = false;
    std::vector<std::string> witness;
  };

  /// True iff some universe C' with const(phi) <= C' <= domain, |C'| <= k,
  /// has a consistent base entailing phi. Candidates are enumerated by
  /// increasing size, lexicographically within a size; the first witness is
  /// returned.
  KEntails k_entails(std::uint32_t k, const Literal& phi) {
    ILit il = intern_literal(phi);
    std::vector<std::uint32_t> core = literal_constants(il);
    if (core.size() > k)
      throw std::invalid_argument("k_entails: literal mentions more than k constants");
    std::vector<std::uint32_t> rest = complement(core);
    const std::uint32_t kmax =
        std::min<std::uint32_t>(k, static_cast<std::uint32_t>(domain_.size()));
    std::vector<std::uint32_t> universe;
    KEntails result;
    for (std::uint32_t s = static_cast<std::uint32_t>(core.size()); s <= kmax; ++s) {
      bool found = false;
      for_each_combination(
          static_cast<std::uint32_t>(rest.size()),
          s - static_cast<std::uint32_t>(core.size()), [&](std::span<const std::uint32_t> pick) {
            if (found) return;
            universe = core;
            for (std::uint32_t i : pick) universe.push_back(rest[i]);
            std::sort(universe.begin(), universe.end());
            Context& ctx = context_for(universe);
            if (ctx.consistent && entails_in(ctx, il)) found = true;
          });
      if (found) {
        result.entailed = true;
        result.witness = names_of(universe);
        return result;
      }
    }
    return result;
  }

  /// Number of size-k subsets S containing const(l) such that l is
  /// k-entailed from the mask restricted to S (with S as the universe pool).
  /// Subsets missing a constant of l cannot vote, so only supersets are
  /// enumerated.
  std::uint64_t vote_count(std::uint32_t k, const Literal& l) {
    if (k > domain_.size())
      throw std::invalid_argument("vote_count: k exceeds domain size");
    ILit il = intern_literal(l);
    if (il.atom.arity > k)
      throw std::invalid_argument("vote_count: literal arity exceeds k");
    std::vector<std::uint32_t> core = literal_constants(il);
    if (core.size() > k) return 0;
    std::vector<std::uint32_t> rest = complement(core);
    std::uint64_t votes = 0;
    std::vector<std::uint32_t> pool;
    for_each_combination(static_cast<std::uint32_t>(rest.size()),
                         k - static_cast<std::uint32_t>(core.size()),
                         [&](std::span<const std::uint32_t> pick) {
                           pool = core;
                           for (std::uint32_t i : pick) pool.push_back(rest[i]);
                           std::sort(pool.begin(), pool.end());
                           if (entailed_within_pool(pool, il)) ++votes;
                         });
    return votes;
  }

  /// All signed ground literals of the target predicate that are k-entailed,
  /// each with one witness universe. Computed as the union over size-k
  /// subsets of the literals k-entailed within that subset pool.
  EntailmentResult k_entailed_literals(std::uint32_t k, const Predicate& target,
                                       bool positive_only = false) {
    if (target.arity > k)
      throw std::invalid_argument("k_entailed_literals: target arity exceeds k");
    EntailmentResult res;
    res.target = target;
    res.mode = EntailmentResult::Mode::kKEntailment;
    res.k = k;
    std::map<Literal, EntailmentResult::Entry> found;
    sweep_pools(k, target, positive_only,
                [&](const Literal& lit, const ILit& il, std::span<const std::uint32_t> pool) {
                  if (found.count(lit)) return;
                  auto witness = witness_within_pool(pool, il);
                  if (witness)
                    found.emplace(lit, EntailmentResult::Entry{lit, names_of(*witness), 0});
                });
    for (auto& [lit, entry] : found) res.entries.push_back(std::move(entry));
    return res;
  }

  /// Literals accepted by unweighted fragment voting: vote count at least
  /// max{1, gamma * |C|^(k-a)}, the threshold compared exactly as a rational.
  EntailmentResult voting_entailed_literals(std::uint32_t k, const Rational& gamma,
                                            const Predicate& target,
                                            bool positive_only = false) {
    if (target.arity > k)
      throw std::invalid_argument("voting_entailed_literals: target arity exceeds k");
    if (k > domain_.size())
      throw std::invalid_argument("voting_entailed_literals: k exceeds domain size");
    if (gamma < Rational(0, 1) || gamma > Rational(1, 1))
      throw std::invalid_argument("voting_entailed_literals: gamma outside [0,1]");
    EntailmentResult res;
    res.target = target;
    res.mode = EntailmentResult::Mode::kVoting;
    res.k = k;
    res.gamma = gamma;
    Rational scaled = gamma * Rational(checked_pow_i64(static_cast<std::int64_t>(domain_.size()),
                                                       k - target.arity),
                                       1);
    res.threshold = std::max(Rational(1, 1), scaled);

    std::map<Literal, std::uint64_t> votes;
    sweep_pools(k, target, positive_only,
                [&](const Literal& lit, const ILit& il, std::span<const std::uint32_t> pool) {
                  if (entailed_within_pool(pool, il)) ++votes[lit];
                });
    for (auto& [lit, v] : votes) {
      if (Rational(static_cast<std::int64_t>(v), 1) >= res.threshold)
        res.entries.push_back(EntailmentResult::Entry{lit, {}, v});
    }
    return res;
  }

 private:
  struct ILit {
    GroundAtom atom;
    bool positive = true;
  };

  struct INode {
    Connective kind = Connective::kAtom;
    std::uint32_t pid = 0;
    std::uint32_t arity = 0;
    std::array<std::uint32_t, kMaxArity> arg{};
    std::array<bool, kMaxArity> arg_is_var{};
    std::vector<INode> children;
  };

  struct IFormula {
    std::vector<Quantifier> prefix;
    INode matrix;
  };

  struct Context {
    sat::Solver solver;
    std::unordered_map<GroundAtom, int, GroundAtomHash> atom_var;
    bool consistent = false;
    std::unordered_map<std::uint64_t, bool> entail_memo;

    int var_for(const GroundAtom& a) {
      auto [it, inserted] = atom_var.emplace(a, 0);
      if (inserted) it->second = solver.new_var();
      return it->second;
    }
  };

  std::uint32_t intern_pred(const std::string& name, std::uint32_t arity) {
    auto [it, inserted] =
        pred_ids_.emplace(std::make_pair(name, arity), static_cast<std::uint32_t>(preds_.size()));
    if (inserted) preds_.push_back(Predicate{name, arity});
    return it->second;
  }

  std::uint32_t require_const(const std::string& name) const {
    auto it = const_ids_.find(name);
    if (it == const_ids_.end())
      throw std::invalid_argument("reasoner: constant '" + name + "' outside the domain");
    return it->second;
  }

  ILit intern_literal(const Literal& l) {
    if (l.atom.arity() > kMaxArity)
      throw std::invalid_argument("reasoner: literal arity exceeds supported maximum");
    ILit il;
    il.positive = l.positive;
    il.atom.pred = intern_pred(l.atom.pred, l.atom.arity());
    il.atom.arity = l.atom.arity();
    for (std::uint32_t i = 0; i < il.atom.arity; ++i)
      il.atom.args[i] = require_const(l.atom.args[i]);
    return il;
  }

  INode intern_matrix(const Matrix& m, const std::map<std::string, std::uint32_t>& slots) {
    INode n;
    n.kind = m.kind;
    if (m.kind == Connective::kAtom) {
      if (m.args.size() > kMaxArity)
        throw std::invalid_argument("reasoner: atom arity exceeds supported maximum");
      n.pid = intern_pred(m.pred, static_cast<std::uint32_t>(m.args.size()));
      n.arity = static_cast<std::uint32_t>(m.args.size());
      for (std::uint32_t i = 0; i < n.arity; ++i) {
        if (m.args[i].is_variable) {
          n.arg_is_var[i] = true;
          n.arg[i] = slots.at(m.args[i].name);
        } else {
          n.arg_is_var[i] = false;
          n.arg[i] = require_const(m.args[i].name);
        }
      }
      return n;
    }
    for (const Matrix& c : m.children) n.children.push_back(intern_matrix(c, slots));
    return n;
  }

  std::vector<std::uint32_t> ids_of(const std::vector<std::string>& names) const {
    std::vector<std::uint32_t> ids;
    ids.reserve(names.size());
    for (const std::string& n : names) ids.push_back(require_const(n));
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
  }

  std::vector<std::string> names_of(std::span<const std::uint32_t> ids) const {
    std::vector<std::string> out;
    out.reserve(ids.size());
    for (std::uint32_t i : ids) out.push_back(domain_[i]);
    return out;
  }

  std::vector<std::uint32_t> literal_constants(const ILit& il) const {
    std::vector<std::uint32_t> cs(il.atom.args.begin(), il.atom.args.begin() + il.atom.arity);
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    return cs;
  }

  std::vector<std::uint32_t> complement(const std::vector<std::uint32_t>& sorted_ids) const {
    std::vector<std::uint32_t> out;
    out.reserve(domain_.size() - sorted_ids.size());
    for (std::uint32_t c = 0; c < domain_.size(); ++c)
      if (!std::binary_search(sorted_ids.begin(), sorted_ids.end(), c)) out.push_back(c);
    return out;
  }

  template <typename Fn>
  static void for_each_combination(std::uint32_t m, std::uint32_t r, Fn&& fn) {
    if (r > m) return;
    std::vector<std::uint32_t> pick(r);
    for (std::uint32_t i = 0; i < r; ++i) pick[i] = i;
    for (;;) {
      fn(std::span<const std::uint32_t>(pick));
      std::int32_t i = static_cast<std::int32_t>(r) - 1;
      while (i >= 0 && pick[i] == m - r + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (std::uint32_t t = i + 1; t < r; ++t) pick[t] = pick[t - 1] + 1;
    }
  }

  /// Grounds the theory over `universe` and asserts the mask literals whose
  /// constants lie inside it.
  Context& context_for(const std::vector<std::uint32_t>& universe) {
    auto it = contexts_.find(universe);
    if (it != contexts_.end()) return *it->second;
    auto ctx = std::make_unique<Context>();
    sat::TseitinEncoder enc(ctx->solver);
    std::vector<std::uint32_t> bindings;
    for (const IFormula& f : formulas_) {
      bindings.assign(f.prefix.size(), 0);
      enc.assert_true(ground_prefix(*ctx, f, universe, 0, bindings));
    }
    for (std::uint32_t li : mask_literals_inside(universe)) {
      const ILit& ml = mask_lits_[li];
      int v = ctx->var_for(ml.atom);
      ctx->solver.add_clause({ml.positive ? sat::pos(v) : sat::neg(v)});
    }
    ctx->consistent = ctx->solver.solve();
    auto [pos, inserted] = contexts_.emplace(universe, std::move(ctx));
    return *pos->second;
  }

  std::vector<std::uint32_t> mask_literals_inside(std::span<const std::uint32_t> universe) const {
    std::vector<std::uint32_t> out = mask_nullary_;
    for (std::uint32_t c : universe) {
      for (std::uint32_t li : mask_incidence_[c]) {
        const ILit& ml = mask_lits_[li];
        bool inside = true;
        for (std::uint32_t i = 0; i < ml.atom.arity; ++i)
          inside = inside &&
                   std::binary_search(universe.begin(), universe.end(), ml.atom.args[i]);
        if (inside) out.push_back(li);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  sat::GroundNode ground_prefix(Context& ctx, const IFormula& f,
                                std::span<const std::uint32_t> universe, std::size_t depth,
                                std::vector<std::uint32_t>& bindings) {
    if (depth == f.prefix.size()) return ground_matrix(ctx, f.matrix, bindings);
    std::vector<sat::GroundNode> kids;
    kids.reserve(universe.size());
    for (std::uint32_t c : universe) {
      bindings[depth] = c;
      kids.push_back(ground_prefix(ctx, f, universe, depth + 1, bindings));
    }
    return f.prefix[depth] == Quantifier::kForall
               ? sat::GroundNode::make_and(std::move(kids))
               : sat::GroundNode::make_or(std::move(kids));
  }

  sat::GroundNode ground_matrix(Context& ctx, const INode& n,
                                const std::vector<std::uint32_t>& bindings) {
    switch (n.kind) {
      case Connective::kAtom: {
        GroundAtom g;
        g.pred = n.pid;
        g.arity = n.arity;
        for (std::uint32_t i = 0; i < n.arity; ++i)
          g.args[i] = n.arg_is_var[i] ? bindings[n.arg[i]] : n.arg[i];
        return sat::GroundNode::make_lit(sat::pos(ctx.var_for(g)));
      }
      case Connective::kNot:
        return ground_matrix(ctx, n.children[0], bindings).negated();
      case Connective::kAnd: {
        std::vector<sat::GroundNode> kids;
        kids.push_back(ground_matrix(ctx, n.children[0], bindings));
        kids.push_back(ground_matrix(ctx, n.children[1], bindings));
        return sat::GroundNode::make_and(std::move(kids));
      }
      case Connective::kOr: {
        std::vector<sat::GroundNode> kids;
        kids.push_back(ground_matrix(ctx, n.children[0], bindings));
        kids.push_back(ground_matrix(ctx, n.children[1], bindings));
        return sat::GroundNode::make_or(std::move(kids));
      }
      case Connective::kImplies: {
        std::vector<sat::GroundNode> kids;
        kids.push_back(ground_matrix(ctx, n.children[0], bindings).negated());
        kids.push_back(ground_matrix(ctx, n.children[1], bindings));
        return sat::GroundNode::make_or(std::move(kids));
      }
      case Connective::kIff: {
        sat::GroundNode a = ground_matrix(ctx, n.children[0], bindings);
        sat::GroundNode b = ground_matrix(ctx, n.children[1], bindings);
        std::vector<sat::GroundNode> left;
        left.push_back(a.negated());
        left.push_back(b);
        std::vector<sat::GroundNode> right;
        right.push_back(b.negated());
        right.push_back(a);
        std::vector<sat::GroundNode> both;
        both.push_back(sat::GroundNode::make_or(std::move(left)));
        both.push_back(sat::GroundNode::make_or(std::move(right)));
        return sat::GroundNode::make_and(std::move(both));
      }
    }
    return sat::GroundNode::make_true();
  }

  bool entails_in(Context& ctx, const ILit& il) {
    int v = ctx.var_for(il.atom);
    std::uint64_t key = (static_cast<std::uint64_t>(v) << 1) | (il.positive ? 1u : 0u);
    auto it = ctx.entail_memo.find(key);
    if (it != ctx.entail_memo.end()) return it->second;
    sat::Lit refuted = il.positive ? sat::neg(v) : sat::pos(v);
    bool entailed = !ctx.solver.solve(std::span<const sat::Lit>(&refuted, 1));
    ctx.entail_memo.emplace(key, entailed);
    return entailed;
  }

  /// k-entailment with `pool` as the universe pool: some C' within the pool
  /// containing literal's constants is consistent and entails it.
  std::optional<std::vector<std::uint32_t>> witness_within_pool(
      std::span<const std::uint32_t> pool, const ILit& il) {
    std::vector<std::uint32_t> core = literal_constants(il);
    std::vector<std::uint32_t> rest;
    for (std::uint32_t c : pool)
      if (!std::binary_search(core.begin(), core.end(), c)) rest.push_back(c);
    std::optional<std::vector<std::uint32_t>> witness;
    std::vector<std::uint32_t> universe;
    for (std::uint32_t s = static_cast<std::uint32_t>(core.size());
         s <= pool.size() && !witness; ++s) {
      for_each_combination(
          static_cast<std::uint32_t>(rest.size()),
          s - static_cast<std::uint32_t>(core.size()), [&](std::span<const std::uint32_t> pick) {
            if (witness) return;
            universe = core;
            for (std::uint32_t i : pick) universe.push_back(rest[i]);
            std::sort(universe.begin(), universe.end());
            Context& ctx = context_for(universe);
            if (ctx.consistent && entails_in(ctx, il)) witness = universe;
          });
    }
    return witness;
  }

  bool entailed_within_pool(std::span<const std::uint32_t> pool, const ILit& il) {
    return witness_within_pool(pool, il).has_value();
  }

  /// Enumerates (candidate literal, pool) pairs: pools are the size-k subsets
  /// of the domain (or the whole domain when smaller), candidates the signed
  /// target-predicate literals over each pool.
  template <typename Fn>
  void sweep_pools(std::uint32_t k, const Predicate& target, bool positive_only, Fn&& fn) {
    const std::uint32_t pid = intern_pred(target.name, target.arity);
    const std::uint32_t d = static_cast<std::uint32_t>(domain_.size());
    std::vector<std::uint32_t> pool;
    auto visit_pool = [&](std::span<const std::uint32_t> p) {
      std::vector<std::uint32_t> tuple(target.arity, 0);
      for (;;) {
        ILit il;
        il.atom.pred = pid;
        il.atom.arity = target.arity;
        Atom a;
        a.pred = target.name;
        for (std::uint32_t i = 0; i < target.arity; ++i) {
          il.atom.args[i] = p[tuple[i]];
          a.args.push_back(domain_[p[tuple[i]]]);
        }
        il.positive = true;
        fn(Literal{a, true}, il, p);
        if (!positive_only) {
          il.positive = false;
          fn(Literal{a, false}, il, p);
        }
        std::uint32_t posn = target.arity;
        while (posn > 0) {
          if (++tuple[posn - 1] < p.size()) break;
          tuple[posn - 1] = 0;
          --posn;
        }
        if (posn == 0) break;
      }
    };
    if (d <= k) {
      pool.resize(d);
      for (std::uint32_t i = 0; i < d; ++i) pool[i] = i;
      if (d > 0 || target.arity == 0) visit_pool(pool);
      return;
    }
    for_each_combination(d, k, [&](std::span<const std::uint32_t> pick) {
      pool.assign(pick.begin(), pick.end());
      visit_pool(pool);
    });
  }

  std::vector<std::string> domain_;
  std::unordered_map<std::string, std::uint32_t> const_ids_;
  std::map<std::pair<std::string, std::uint32_t>, std::uint32_t> pred_ids_;
  std::vector<Predicate> preds_;
  std::vector<ILit> mask_lits_;
  std::vector<std::vector<std::uint32_t>> mask_incidence_;
  std::vector<std::uint32_t> mask_nullary_;
  std::vector<IFormula> formulas_;
  std::map<std::vector<std::uint32_t>, std::unique_ptr<Context>> contexts_;
};

// ---------------------------------------------------------------------------
// Free-function forms; each builds a one-shot engine.

inline bool consistent(const MaskedExample& mask, const Theory& theory,
                       const std::vector<std::string>& universe) {
  return InferenceEngine(mask, theory).consistent(universe);
}

inline bool entails(const MaskedExample& mask, const Theory& theory,
                    const std::vector<std::string>& universe, const Literal& phi) {
  return InferenceEngine(mask, theory).entails(universe, phi);
}

inline InferenceEngine::KEntails k_entails(const MaskedExample& mask, const Theory& theory,
                                           std::uint32_t k, const Literal& phi) {
  return InferenceEngine(mask, theory).k_entails(k, phi);
}

inline EntailmentResult k_entailed_literals(const MaskedExample& mask, const Theory& theory,
                                            std::uint32_t k, const Predicate& target,
                                            bool positive_only = false) {
  return InferenceEngine(mask, theory).k_entailed_literals(k, target, positive_only);
}

inline std::uint64_t vote_count(const MaskedExample& mask, const Theory& theory,
                                std::uint32_t k, const Literal& l) {
  return InferenceEngine(mask, theory).vote_count(k, l);
}

inline EntailmentResult voting_entailed_literals(const MaskedExample& mask,
                                                 const Theory& theory, std::uint32_t k,
                                                 const Rational& gamma, const Predicate& target,
                                                 bool positive_only = false) {
  return InferenceEngine(mask, theory).voting_entailed_literals(k, gamma, target,
                                                                positive_only);
}

/// The error set F(Gamma): literals of the target predicate entailed from the
/// masked evidence (k-entailment, or voting when gamma is given) that are
/// false in the complete example.
inline std::vector<Literal> false_entailed(const Example& complete, const MaskedExample& mask,
                                           const Theory& theory, std::uint32_t k,
                                           const std::optional<Rational>& gamma,
                                           const Predicate& target, bool positive_only = false) {
  if (mask.domain != complete.domain())
    throw std::invalid_argument("false_entailed: mask domain differs from example domain");
  InferenceEngine engine(mask, theory);
  EntailmentResult res = gamma ? engine.voting_entailed_literals(k, *gamma, target, positive_only)
                               : engine.k_entailed_literals(k, target, positive_only);
  std::vector<Literal> wrong;
  for (const auto& e : res.entries)
    if (!complete.holds(e.literal)) wrong.push_back(e.literal);
  return wrong;
}

}  // namespace paclogic

#endif  // PACLOGIC_REASONER_HPP
