#ifndef PACLOGIC_EXAMPLE_HPP
#define PACLOGIC_EXAMPLE_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "paclogic/logic.hpp"

namespace paclogic {

/// Ground atoms interned into an Example's id space. Bounded arity keeps the
/// struct flat and hashable; the parser rejects anything wider.
inline constexpr std::uint32_t kMaxArity = 4;

struct GroundAtom {
  std::uint32_t pred = 0;  // index into the owning Example's vocabulary
  std::uint32_t arity = 0;
  std::array<std::uint32_t, kMaxArity> args{};

  friend bool operator==(const GroundAtom& a, const GroundAtom& b) {
    return a.pred == b.pred && a.arity == b.arity && a.args == b.args;
  }
  friend bool operator<(const GroundAtom& a, const GroundAtom& b) {
    if (a.pred != b.pred) return a.pred < b.pred;
    if (a.arity != b.arity) return a.arity < b.arity;
    return a.args < b.args;
  }
};

struct GroundAtomHash {
  std::size_t operator()(const GroundAtom& a) const {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ (std::uint64_t(a.pred) << 32 | a.arity);
    for (std::uint32_t i = 0; i < a.arity; ++i) {
      h ^= a.args[i] + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
      h *= 0xBF58476D1CE4E5B9ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

/// A complete, closed-world relational structure: a finite constant domain
/// plus the set of true ground atoms. Every ground atom over the domain that
/// is absent is false. Immutable after construction.
class Example {
 public:
  Example() = default;

  /// `domain` is deduplicated and sorted. Atoms must use declared constants
  /// only. `extra_vocabulary` adds predicates beyond those appearing in the
  /// atoms (so e.g. maskers can enumerate atoms of empty predicates).
  Example(std::vector<std::string> domain, const std::vector<Atom>& atoms,
          std::vector<Predicate> extra_vocabulary = {}) {
    std::sort(domain.begin(), domain.end());
    domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
    domain_ = std::move(domain);
    for (std::uint32_t i = 0; i < domain_.size(); ++i) {
      if (!is_constant_name(domain_[i]))
        throw std::invalid_argument("example: bad constant name '" + domain_[i] + "'");
      const_ids_.emplace(domain_[i], i);
    }
    for (const Predicate& p : extra_vocabulary) intern_predicate(p);
    for (const Atom& a : atoms) add_atom(a);
    finalize();
  }

  const std::vector<std::string>& domain() const { return domain_; }
  std::uint32_t domain_size() const { return static_cast<std::uint32_t>(domain_.size()); }
  const std::vector<Predicate>& vocabulary() const { return vocab_; }

  bool has_constant(const std::string& name) const { return const_ids_.count(name) > 0; }

  std::uint32_t constant_id(const std::string& name) const {
    auto it = const_ids_.find(name);
    if (it == const_ids_.end())
      throw std::out_of_range("example: constant '" + name + "' not in domain");
    return it->second;
  }
  const std::string& constant_name(std::uint32_t id) const { return domain_.at(id); }

  /// Id of (name, arity) in the vocabulary, or npos if absent.
  static constexpr std::uint32_t npos = UINT32_MAX;
  std::uint32_t predicate_id(const std::string& name, std::uint32_t arity) const {
    auto it = pred_ids_.find(key_of(name, arity));
    return it == pred_ids_.end() ? npos : it->second;
  }

  const std::vector<GroundAtom>& atoms() const { return atom_list_; }
  std::size_t atom_count() const { return atom_list_.size(); }

  bool has_atom(const GroundAtom& a) const { return atom_set_.count(a) > 0; }

  /// Closed-world truth of a string-form atom; atoms of unknown predicates
  /// or with out-of-domain constants are false.
  bool holds(const Atom& a) const {
    std::uint32_t pid = predicate_id(a.pred, a.arity());
    if (pid == npos) return false;
    GroundAtom g;
    g.pred = pid;
    g.arity = a.arity();
    for (std::uint32_t i = 0; i < g.arity; ++i) {
      auto it = const_ids_.find(a.args[i]);
      if (it == const_ids_.end()) return false;
      g.args[i] = it->second;
    }
    return has_atom(g);
  }

  bool holds(const Literal& l) const { return holds(l.atom) == l.positive; }

  /// Indices into atoms() of atoms mentioning the given constant.
  const std::vector<std::uint32_t>& incident_atoms(std::uint32_t const_id) const {
    return incidence_.at(const_id);
  }

  /// Constants that appear in at least one atom, as sorted ids.
  const std::vector<std::uint32_t>& active_constants() const { return active_; }

  Atom atom_to_strings(const GroundAtom& g) const {
    Atom a;
    a.pred = vocab_[g.pred].name;
    for (std::uint32_t i = 0; i < g.arity; ++i) a.args.push_back(domain_[g.args[i]]);
    return a;
  }

  std::vector<Atom> atoms_as_strings() const {
    std::vector<Atom> out;
    out.reserve(atom_list_.size());
    for (const GroundAtom& g : atom_list_) out.push_back(atom_to_strings(g));
    return out;
  }

  friend bool operator==(const Example& a, const Example& b) {
    return a.domain_ == b.domain_ && a.vocab_ == b.vocab_ &&
           a.atoms_as_strings() == b.atoms_as_strings();
  }

 private:
  static std::string key_of(const std::string& name, std::uint32_t arity) {
    return name + "/" + std::to_string(arity);
  }

  std::uint32_t intern_predicate(const Predicate& p) {
    auto [it, inserted] = pred_ids_.emplace(key_of(p.name, p.arity),
                                            static_cast<std::uint32_t>(vocab_.size()));
    if (inserted) vocab_.push_back(p);
    return it->second;
  }

  void add_atom(const Atom& a) {
    if (a.arity() > kMaxArity)
      throw std::invalid_argument("example: atom arity exceeds supported maximum (" +
                                  std::to_string(kMaxArity) + "): " + a.str());
    GroundAtom g;
    g.pred = intern_predicate(Predicate{a.pred, a.arity()});
    g.arity = a.arity();
    for (std::uint32_t i = 0; i < g.arity; ++i) {
      auto it = const_ids_.find(a.args[i]);
      if (it == const_ids_.end())
        throw std::invalid_argument("example: atom " + a.str() +
                                    " uses undeclared constant '" + a.args[i] + "'");
      g.args[i] = it->second;
    }
    if (atom_set_.insert(g).second) atom_list_.push_back(g);
  }

  void finalize() {
    // canonical order: vocabulary sorted, then atoms sorted
    std::vector<Predicate> sorted_vocab = vocab_;
    std::sort(sorted_vocab.begin(), sorted_vocab.end());
    std::vector<std::uint32_t> remap(vocab_.size());
    for (std::uint32_t new_id = 0; new_id < sorted_vocab.size(); ++new_id) {
      auto it = std::find(vocab_.begin(), vocab_.end(), sorted_vocab[new_id]);
      remap[static_cast<std::uint32_t>(it - vocab_.begin())] = new_id;
    }
    vocab_ = std::move(sorted_vocab);
    pred_ids_.clear();
    for (std::uint32_t i = 0; i < vocab_.size(); ++i)
      pred_ids_.emplace(key_of(vocab_[i].name, vocab_[i].arity), i);
    for (GroundAtom& g : atom_list_) g.pred = remap[g.pred];
    std::sort(atom_list_.begin(), atom_list_.end());
    atom_set_.clear();
    atom_set_.insert(atom_list_.begin(), atom_list_.end());

    incidence_.assign(domain_.size(), {});
    for (std::uint32_t ai = 0; ai < atom_list_.size(); ++ai) {
      const GroundAtom& g = atom_list_[ai];
      for (std::uint32_t i = 0; i < g.arity; ++i) {
        auto& inc = incidence_[g.args[i]];
        if (inc.empty() || inc.back() != ai) inc.push_back(ai);
      }
    }
    active_.clear();
    for (std::uint32_t c = 0; c < domain_.size(); ++c)
      if (!incidence_[c].empty()) active_.push_back(c);
  }

  std::vector<std::string> domain_;
  std::unordered_map<std::string, std::uint32_t> const_ids_;
  std::vector<Predicate> vocab_;
  std::unordered_map<std::string, std::uint32_t> pred_ids_;
  std::vector<GroundAtom> atom_list_;
  std::unordered_set<GroundAtom, GroundAtomHash> atom_set_;
  std::vector<std::vector<std::uint32_t>> incidence_;
  std::vector<std::uint32_t> active_;
};

/// An Example produced by restriction, with provenance.
struct Fragment {
  Example example;
  std::string parent;                 // free-form parent identifier
  std::vector<std::string> subset;    // the S used for the restriction
};

/// Restriction of `ex` to the constants in S: keeps exactly the atoms whose
/// constants all lie in S. Errors if S is not a subset of the domain.
inline Fragment restrict_example(const Example& ex, const std::vector<std::string>& S,
                                 std::string parent_id = {}) {
  std::vector<std::uint32_t> ids;
  ids.reserve(S.size());
  for (const std::string& c : S) {
    if (!ex.has_constant(c))
      throw std::invalid_argument("restrict: constant '" + c + "' not in domain");
    ids.push_back(ex.constant_id(c));
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  std::vector<bool> in(ex.domain_size(), false);
  for (std::uint32_t id : ids) in[id] = true;

  std::vector<Atom> kept;
  // scan incidence lists of S members; each kept atom found via its first
  // constant occurrence to avoid duplicates
  std::unordered_set<std::uint32_t> seen;
  for (std::uint32_t id : ids) {
    for (std::uint32_t ai : ex.incident_atoms(id)) {
      const GroundAtom& g = ex.atoms()[ai];
      bool inside = true;
      for (std::uint32_t i = 0; i < g.arity; ++i) inside = inside && in[g.args[i]];
      if (inside && seen.insert(ai).second) kept.push_back(ex.atom_to_strings(g));
    }
  }
  // arity-0 atoms have no incidences but always survive restriction
  for (const GroundAtom& g : ex.atoms())
    if (g.arity == 0) kept.push_back(ex.atom_to_strings(g));

  std::vector<std::string> sub;
  sub.reserve(ids.size());
  for (std::uint32_t id : ids) sub.push_back(ex.constant_name(id));

  Fragment f;
  f.example = Example(sub, kept, ex.vocabulary());
  f.parent = std::move(parent_id);
  f.subset = sub;
  return f;
}

/// Canonical example file text: a single `domain:` line followed by one
/// `atom(args).` line per atom in sorted order.
inline std::string print_example(const Example& ex) {
  std::string out = "domain:";
  for (const std::string& c : ex.domain()) {
    out += " ";
    out += c;
  }
  out += "\n";
  for (const Atom& a : ex.atoms_as_strings()) {
    out += a.str();
    out += ".\n";
  }
  return out;
}

}  // namespace paclogic

#endif  // PACLOGIC_EXAMPLE_HPP
