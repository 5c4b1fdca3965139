#ifndef PACLOGIC_MASKING_HPP
#define PACLOGIC_MASKING_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "paclogic/example.hpp"
#include "paclogic/logic.hpp"
#include "paclogic/rng.hpp"

namespace paclogic {

/// Partial description of an example: a consistent conjunction of signed
/// ground literals the parent example satisfies, plus the parent's constant
/// set. Unknown atoms are simply absent.
struct MaskedExample {
  std::vector<std::string> domain;  // sorted
  std::vector<Literal> literals;    // sorted, duplicate-free

  bool contains(const Literal& l) const {
    return std::binary_search(literals.begin(), literals.end(), l);
  }

  friend bool operator==(const MaskedExample&, const MaskedExample&) = default;
};

/// A truthful information-hiding process. `identity` reveals everything
/// (every ground literal of the vocabulary with its true sign); the
/// `positive-only` adversary reveals exactly the true positive literals of
/// selected predicates; `random-drop` keeps each ground literal independently
/// with probability keep_p; `literal-list` reveals a fixed list.
struct Masker {
  enum class Kind { kIdentity, kPositiveOnly, kRandomDrop, kLiteralList };

  Kind kind = Kind::kIdentity;
  std::vector<std::string> predicates;  // kPositiveOnly: names (any arity)
  double keep_p = 1.0;                  // kRandomDrop
  std::uint64_t seed = 0;               // kRandomDrop
  std::vector<Literal> literals;        // kLiteralList

  static Masker identity() { return Masker{}; }
  static Masker positive_only(std::vector<std::string> preds) {
    Masker m;
    m.kind = Kind::kPositiveOnly;
    m.predicates = std::move(preds);
    return m;
  }
  static Masker random_drop(double keep_p, std::uint64_t seed) {
    if (keep_p < 0.0 || keep_p > 1.0)
      throw std::invalid_argument("masker: keep probability outside [0,1]");
    Masker m;
    m.kind = Kind::kRandomDrop;
    m.keep_p = keep_p;
    m.seed = seed;
    return m;
  }
  static Masker literal_list(std::vector<Literal> lits) {
    Masker m;
    m.kind = Kind::kLiteralList;
    m.literals = std::move(lits);
    return m;
  }
};

namespace detail {

inline void canonicalize(std::vector<Literal>& lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
}

/// Every ground literal over the example's vocabulary and domain, signed by
/// closed-world truth. Cost is sum over predicates of |domain|^arity.
template <typename Fn>
void for_each_ground_literal(const Example& ex, Fn&& fn) {
  const auto& dom = ex.domain();
  for (const Predicate& p : ex.vocabulary()) {
    if (p.arity > 0 && dom.empty()) continue;  // no ground atoms exist
    std::vector<std::uint32_t> tuple(p.arity, 0);
    for (;;) {
      Atom a;
      a.pred = p.name;
      for (std::uint32_t i = 0; i < p.arity; ++i) a.args.push_back(dom[tuple[i]]);
      fn(Literal{a, ex.holds(a)});
      std::uint32_t pos = p.arity;
      while (pos > 0) {
        if (++tuple[pos - 1] < dom.size()) break;
        tuple[pos - 1] = 0;
        --pos;
      }
      if (pos == 0) break;
    }
  }
}

}  // namespace detail

/// Applies the masking process. The output satisfies the invariant that the
/// parent example models every emitted literal.
inline MaskedExample apply_mask(const Masker& masker, const Example& ex) {
  MaskedExample out;
  out.domain = ex.domain();
  switch (masker.kind) {
    case Masker::Kind::kIdentity: {
      detail::for_each_ground_literal(ex, [&](const Literal& l) { out.literals.push_back(l); });
      break;
    }
    case Masker::Kind::kPositiveOnly: {
      std::set<std::string> wanted(masker.predicates.begin(), masker.predicates.end());
      for (const Atom& a : ex.atoms_as_strings())
        if (wanted.count(a.pred)) out.literals.push_back(Literal{a, true});
      break;
    }
    case Masker::Kind::kRandomDrop: {
      SplitMix64 rng(masker.seed);
      detail::for_each_ground_literal(ex, [&](const Literal& l) {
        if (rng.unit() < masker.keep_p) out.literals.push_back(l);
      });
      break;
    }
    case Masker::Kind::kLiteralList: {
      for (const Literal& l : masker.literals) {
        for (const std::string& c : l.atom.args)
          if (!ex.has_constant(c))
            throw std::invalid_argument("masker: literal " + l.str() +
                                        " uses constant outside the domain");
        if (!ex.holds(l))
          throw std::invalid_argument("masker: literal " + l.str() +
                                      " is false in the example");
        out.literals.push_back(l);
      }
      break;
    }
  }
  detail::canonicalize(out.literals);
  return out;
}

/// Keeps exactly the literals whose constants all lie in S; the domain
/// becomes S. Errors if S is not a subset of the current domain.
inline MaskedExample mask_restrict(const MaskedExample& masked,
                                   const std::vector<std::string>& S) {
  std::set<std::string> sub(S.begin(), S.end());
  for (const std::string& c : sub)
    if (!std::binary_search(masked.domain.begin(), masked.domain.end(), c))
      throw std::invalid_argument("mask_restrict: constant '" + c + "' not in domain");
  MaskedExample out;
  out.domain.assign(sub.begin(), sub.end());
  for (const Literal& l : masked.literals) {
    bool inside = true;
    for (const std::string& c : l.atom.args) inside = inside && sub.count(c) > 0;
    if (inside) out.literals.push_back(l);
  }
  return out;
}

/// Canonical masked-example file text.
inline std::string print_masked(const MaskedExample& m) {
  std::string out = "domain:";
  for (const std::string& c : m.domain) {
    out += " ";
    out += c;
  }
  out += "\n";
  for (const Literal& l : m.literals) {
    out += l.str();
    out += "\n";
  }
  return out;
}

}  // namespace paclogic

#endif  // PACLOGIC_MASKING_HPP
