#ifndef PACLOGIC_MODEL_CHECK_HPP
#define PACLOGIC_MODEL_CHECK_HPP

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "paclogic/example.hpp"
#include "paclogic/logic.hpp"

namespace paclogic {

/// A formula resolved against one Example's id space, ready for repeated
/// evaluation over many constant subsets. Quantifiers range over the given
/// universe only; ground atoms are looked up closed-world in the example.
/// Atoms whose predicate is absent from the example's vocabulary are false.
class CompiledFormula {
 public:
  CompiledFormula(const Example& ex, const Formula& f) {
    f.check_closed();
    std::map<std::string, std::uint32_t> var_slot;
    for (const auto& qv : f.prefix) {
      prefix_.push_back(qv.quant);
      var_slot.emplace(qv.var, static_cast<std::uint32_t>(var_slot.size()));
    }
    root_ = build(ex, f.matrix, var_slot);
    bindings_.resize(prefix_.size());
  }

  /// Satisfaction over the sub-structure induced by `universe` (ids into the
  /// example's domain). Empty universe: universals hold, existentials fail.
  bool eval(const Example& ex, std::span<const std::uint32_t> universe) const {
    return eval_prefix(ex, universe, 0);
  }

  bool eval_full(const Example& ex) const {
    std::vector<std::uint32_t> all(ex.domain_size());
    for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
    return eval(ex, all);
  }

 private:
  struct Node {
    Connective kind;
    // kAtom
    std::uint32_t pred = Example::npos;  // npos: predicate unknown, atom false
    std::uint32_t arity = 0;
    // per argument: if is_var then slot index else constant id
    std::array<std::uint32_t, kMaxArity> arg{};
    std::array<bool, kMaxArity> arg_is_var{};
    // others
    std::vector<Node> children;
  };

  Node build(const Example& ex, const Matrix& m,
             const std::map<std::string, std::uint32_t>& var_slot) {
    Node n;
    n.kind = m.kind;
    if (m.kind == Connective::kAtom) {
      n.pred = ex.predicate_id(m.pred, static_cast<std::uint32_t>(m.args.size()));
      n.arity = static_cast<std::uint32_t>(m.args.size());
      for (std::uint32_t i = 0; i < n.arity; ++i) {
        const Term& t = m.args[i];
        if (t.is_variable) {
          n.arg_is_var[i] = true;
          n.arg[i] = var_slot.at(t.name);
        } else {
          n.arg_is_var[i] = false;
          if (!ex.has_constant(t.name))
            throw std::invalid_argument("evaluate: constant '" + t.name +
                                        "' outside example domain");
          n.arg[i] = ex.constant_id(t.name);
        }
      }
      return n;
    }
    for (const Matrix& c : m.children) n.children.push_back(build(ex, c, var_slot));
    return n;
  }

  bool eval_prefix(const Example& ex, std::span<const std::uint32_t> universe,
                   std::size_t depth) const {
    if (depth == prefix_.size()) return eval_matrix(ex, root_);
    const bool forall = prefix_[depth] == Quantifier::kForall;
    for (std::uint32_t c : universe) {
      bindings_[depth] = c;
      bool r = eval_prefix(ex, universe, depth + 1);
      if (forall && !r) return false;
      if (!forall && r) return true;
    }
    return forall;
  }

  bool eval_matrix(const Example& ex, const Node& n) const {
    switch (n.kind) {
      case Connective::kAtom: {
        if (n.pred == Example::npos) return false;
        GroundAtom g;
        g.pred = n.pred;
        g.arity = n.arity;
        for (std::uint32_t i = 0; i < n.arity; ++i)
          g.args[i] = n.arg_is_var[i] ? bindings_[n.arg[i]] : n.arg[i];
        return ex.has_atom(g);
      }
      case Connective::kNot:
        return !eval_matrix(ex, n.children[0]);
      case Connective::kAnd:
        return eval_matrix(ex, n.children[0]) && eval_matrix(ex, n.children[1]);
      case Connective::kOr:
        return eval_matrix(ex, n.children[0]) || eval_matrix(ex, n.children[1]);
      case Connective::kImplies:
        return !eval_matrix(ex, n.children[0]) || eval_matrix(ex, n.children[1]);
      case Connective::kIff:
        return eval_matrix(ex, n.children[0]) == eval_matrix(ex, n.children[1]);
    }
    return false;
  }

  std::vector<Quantifier> prefix_;
  Node root_;
  mutable std::vector<std::uint32_t> bindings_;
};

/// Compiled conjunction of a theory's formulas.
class CompiledTheory {
 public:
  CompiledTheory(const Example& ex, const Theory& t) {
    for (const Formula& f : t.formulas) formulas_.emplace_back(ex, f);
  }

  bool eval(const Example& ex, std::span<const std::uint32_t> universe) const {
    for (const CompiledFormula& f : formulas_)
      if (!f.eval(ex, universe)) return false;
    return true;
  }

 private:
  std::vector<CompiledFormula> formulas_;
};

/// Closed-world satisfaction of a closed formula on a complete example; the
/// formula's constants must belong to the example's domain.
inline bool evaluate(const Example& ex, const Formula& f) {
  return CompiledFormula(ex, f).eval_full(ex);
}

inline bool evaluate(const Example& ex, const Theory& t) {
  for (const Formula& f : t.formulas)
    if (!evaluate(ex, f)) return false;
  return true;
}

}  // namespace paclogic

#endif  // PACLOGIC_MODEL_CHECK_HPP
