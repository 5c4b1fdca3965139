#ifndef PACLOGIC_SAT_HPP
#define PACLOGIC_SAT_HPP

#include <cstdint>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <vector>

namespace paclogic::sat {

/// Literal encoding: +(v+1) for variable v, -(v+1) for its negation.
using Lit = std::int32_t;

inline Lit pos(int var) { return var + 1; }
inline Lit neg(int var) { return -(var + 1); }
inline int var_of(Lit l) { return std::abs(l) - 1; }

/// Plain DPLL with unit propagation. Ground problems here have at most a few
/// hundred variables (fragments over <= k constants plus Tseitin auxiliaries),
/// so clause scanning beats watched-literal bookkeeping.
class Solver {
 public:
  int new_var() { return nvars_++; }
  int num_vars() const { return nvars_; }

  void add_clause(std::vector<Lit> lits) {
    for (Lit l : lits)
      if (var_of(l) >= nvars_) throw std::logic_error("sat: literal for unknown variable");
    if (lits.empty()) has_empty_clause_ = true;
    clauses_.push_back(std::move(lits));
  }

  /// Satisfiability under the given assumption literals. Reentrant between
  /// calls; not concurrently callable on one instance.
  bool solve(std::span<const Lit> assumptions) {
    if (has_empty_clause_) return false;
    assign_.assign(nvars_, kUnset);
    trail_.clear();
    for (Lit a : assumptions)
      if (!enqueue(a)) return false;
    return search();
  }

  bool solve() { return solve({}); }

 private:
  static constexpr std::int8_t kUnset = -1;

  bool value_true(Lit l) const {
    std::int8_t v = assign_[var_of(l)];
    return v != kUnset && (v == 1) == (l > 0);
  }
  bool value_false(Lit l) const {
    std::int8_t v = assign_[var_of(l)];
    return v != kUnset && (v == 1) != (l > 0);
  }
  bool unassigned(Lit l) const { return assign_[var_of(l)] == kUnset; }

  bool enqueue(Lit l) {
    if (value_false(l)) return false;
    if (value_true(l)) return true;
    assign_[var_of(l)] = l > 0 ? 1 : 0;
    trail_.push_back(var_of(l));
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      assign_[trail_.back()] = kUnset;
      trail_.pop_back();
    }
  }

  /// Unit propagation to fixpoint; false on conflict.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& clause : clauses_) {
        Lit unit = 0;
        int unassigned_count = 0;
        bool satisfied = false;
        for (Lit l : clause) {
          if (value_true(l)) {
            satisfied = true;
            break;
          }
          if (unassigned(l)) {
            ++unassigned_count;
            unit = l;
            if (unassigned_count > 1) break;
          }
        }
        if (satisfied) continue;
        if (unassigned_count == 0) return false;
        if (unassigned_count == 1) {
          if (!enqueue(unit)) return false;
          changed = true;
        }
      }
    }
    return true;
  }

  bool search() {
    if (!propagate()) return false;
    int var = -1;
    for (int v = 0; v < nvars_; ++v)
      if (assign_[v] == kUnset) {
        var = v;
        break;
      }
    if (var == -1) return true;
    std::size_t mark = trail_.size();
    if (enqueue(pos(var)) && search()) return true;
    undo_to(mark);
    if (enqueue(neg(var)) && search()) return true;
    undo_to(mark);
    return false;
  }

  int nvars_ = 0;
  bool has_empty_clause_ = false;
  std::vector<std::vector<Lit>> clauses_;
  std::vector<std::int8_t> assign_;
  std::vector<int> trail_;
};

/// Ground boolean expression, produced by quantifier expansion. And/Or nodes
/// are n-ary and constant-folded at construction, so kTrue/kFalse only ever
/// occur at the root.
struct GroundNode {
  enum Kind { kTrue, kFalse, kLit, kAnd, kOr };
  Kind kind = kTrue;
  Lit lit = 0;
  std::vector<GroundNode> kids;

  static GroundNode make_true() { return GroundNode{kTrue, 0, {}}; }
  static GroundNode make_false() { return GroundNode{kFalse, 0, {}}; }
  static GroundNode make_lit(Lit l) { return GroundNode{kLit, l, {}}; }

  static GroundNode make_and(std::vector<GroundNode> kids) {
    std::vector<GroundNode> out;
    for (GroundNode& k : kids) {
      if (k.kind == kTrue) continue;
      if (k.kind == kFalse) return make_false();
      if (k.kind == kAnd) {
        for (GroundNode& g : k.kids) out.push_back(std::move(g));
      } else {
        out.push_back(std::move(k));
      }
    }
    if (out.empty()) return make_true();
    if (out.size() == 1) return std::move(out[0]);
    return GroundNode{kAnd, 0, std::move(out)};
  }

  static GroundNode make_or(std::vector<GroundNode> kids) {
    std::vector<GroundNode> out;
    for (GroundNode& k : kids) {
      if (k.kind == kFalse) continue;
      if (k.kind == kTrue) return make_true();
      if (k.kind == kOr) {
        for (GroundNode& g : k.kids) out.push_back(std::move(g));
      } else {
        out.push_back(std::move(k));
      }
    }
    if (out.empty()) return make_false();
    if (out.size() == 1) return std::move(out[0]);
    return GroundNode{kOr, 0, std::move(out)};
  }

  GroundNode negated() const {
    switch (kind) {
      case kTrue: return make_false();
      case kFalse: return make_true();
      case kLit: return make_lit(-lit);
      case kAnd:
      case kOr: {
        std::vector<GroundNode> nk;
        nk.reserve(kids.size());
        for (const GroundNode& k : kids) nk.push_back(k.negated());
        return kind == kAnd ? make_or(std::move(nk)) : make_and(std::move(nk));
      }
    }
    return make_true();
  }
};

/// Definitional (Tseitin) CNF: every internal node gets an auxiliary
/// variable defined by bi-implication clauses; the root is asserted directly
/// so top-level conjunctions stay clause-per-conjunct.
class TseitinEncoder {
 public:
  explicit TseitinEncoder(Solver& solver) : solver_(solver) {}

  void assert_true(const GroundNode& n) {
    switch (n.kind) {
      case GroundNode::kTrue:
        return;
      case GroundNode::kFalse:
        solver_.add_clause({});
        return;
      case GroundNode::kLit:
        solver_.add_clause({n.lit});
        return;
      case GroundNode::kAnd:
        for (const GroundNode& k : n.kids) assert_true(k);
        return;
      case GroundNode::kOr: {
        std::vector<Lit> clause;
        clause.reserve(n.kids.size());
        for (const GroundNode& k : n.kids) clause.push_back(encode(k));
        solver_.add_clause(std::move(clause));
        return;
      }
    }
  }

 private:
  Lit encode(const GroundNode& n) {
    switch (n.kind) {
      case GroundNode::kLit:
        return n.lit;
      case GroundNode::kTrue:
      case GroundNode::kFalse:
        throw std::logic_error("tseitin: unfolded boolean constant below root");
      case GroundNode::kAnd: {
        Lit a = pos(solver_.new_var());
        std::vector<Lit> big{a};
        for (const GroundNode& k : n.kids) {
          Lit c = encode(k);
          solver_.add_clause({-a, c});
          big.push_back(-c);
        }
        solver_.add_clause(std::move(big));
        return a;
      }
      case GroundNode::kOr: {
        Lit a = pos(solver_.new_var());
        std::vector<Lit> big{-a};
        for (const GroundNode& k : n.kids) {
          Lit c = encode(k);
          solver_.add_clause({a, -c});
          big.push_back(c);
        }
        solver_.add_clause(std::move(big));
        return a;
      }
    }
    return 0;
  }

  Solver& solver_;
};

}  // namespace paclogic::sat

#endif  // PACLOGIC_SAT_HPP
