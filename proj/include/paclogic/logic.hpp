#ifndef PACLOGIC_LOGIC_HPP
#define PACLOGIC_LOGIC_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace paclogic {

/// Function-free first-order syntax over finite domains: predicates,
/// constants/variables, prenex formulas, theories. Values are immutable
/// after construction and safe to share across threads.

struct Predicate {
  std::string name;
  std::uint32_t arity = 0;

  friend bool operator==(const Predicate&, const Predicate&) = default;
  friend auto operator<=>(const Predicate& a, const Predicate& b) {
    if (auto c = a.name <=> b.name; c != 0) return c;
    return a.arity <=> b.arity;
  }
  std::string str() const { return name + "/" + std::to_string(arity); }
};

inline bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

/// Variables begin with an uppercase letter, constants with lowercase
/// (Prolog convention); no declarations needed.
inline bool is_variable_name(const std::string& s) {
  return is_identifier(s) && std::isupper(static_cast<unsigned char>(s[0]));
}
inline bool is_constant_name(const std::string& s) {
  return is_identifier(s) && std::islower(static_cast<unsigned char>(s[0]));
}

struct Term {
  bool is_variable = false;
  std::string name;

  static Term variable(std::string n) { return Term{true, std::move(n)}; }
  static Term constant(std::string n) { return Term{false, std::move(n)}; }
  friend bool operator==(const Term&, const Term&) = default;
};

/// A ground atom, kept as strings; internal algorithms intern these into
/// dense ids per context.
struct Atom {
  std::string pred;
  std::vector<std::string> args;

  std::uint32_t arity() const { return static_cast<std::uint32_t>(args.size()); }
  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom& a, const Atom& b) {
    if (auto c = a.pred <=> b.pred; c != 0) return c;
    return a.args <=> b.args;
  }
  std::string str() const {
    if (args.empty()) return pred;
    std::string s = pred + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) s += ",";
      s += args[i];
    }
    return s + ")";
  }
};

struct Literal {
  Atom atom;
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal& a, const Literal& b) {
    if (auto c = a.atom <=> b.atom; c != 0) return c;
    // positive before negative for a fixed atom
    return (a.positive ? 0 : 1) <=> (b.positive ? 0 : 1);
  }
  Literal negated() const { return Literal{atom, !positive}; }
  std::string str() const { return positive ? atom.str() : "!" + atom.str(); }
};

enum class Connective { kAtom, kNot, kAnd, kOr, kImplies, kIff };

/// Quantifier-free matrix node. And/Or/Implies/Iff are binary; the printer
/// and parser agree on associativity so round-trips are structural.
struct Matrix {
  Connective kind = Connective::kAtom;
  // kind == kAtom
  std::string pred;
  std::vector<Term> args;
  // kind != kAtom
  std::vector<Matrix> children;

  static Matrix atom(std::string pred, std::vector<Term> args) {
    Matrix m;
    m.kind = Connective::kAtom;
    m.pred = std::move(pred);
    m.args = std::move(args);
    return m;
  }
  static Matrix unary(Connective k, Matrix a) {
    Matrix m;
    m.kind = k;
    m.children.push_back(std::move(a));
    return m;
  }
  static Matrix binary(Connective k, Matrix a, Matrix b) {
    Matrix m;
    m.kind = k;
    m.children.push_back(std::move(a));
    m.children.push_back(std::move(b));
    return m;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

enum class Quantifier { kForall, kExists };

struct QuantifiedVar {
  Quantifier quant = Quantifier::kForall;
  std::string var;
  friend bool operator==(const QuantifiedVar&, const QuantifiedVar&) = default;
};

/// Prenex formula: quantifier prefix plus quantifier-free matrix.
struct Formula {
  std::vector<QuantifiedVar> prefix;
  Matrix matrix;

  friend bool operator==(const Formula&, const Formula&) = default;

  bool constant_free() const {
    bool free = true;
    walk_atoms(matrix, [&](const Matrix& a) {
      for (const Term& t : a.args)
        if (!t.is_variable) free = false;
    });
    return free;
  }

  std::vector<std::string> constants() const {
    std::set<std::string> cs;
    walk_atoms(matrix, [&](const Matrix& a) {
      for (const Term& t : a.args)
        if (!t.is_variable) cs.insert(t.name);
    });
    return {cs.begin(), cs.end()};
  }

  /// Predicates appearing in the matrix, deduplicated.
  std::vector<Predicate> predicates() const {
    std::set<Predicate> ps;
    walk_atoms(matrix, [&](const Matrix& a) {
      ps.insert(Predicate{a.pred, static_cast<std::uint32_t>(a.args.size())});
    });
    return {ps.begin(), ps.end()};
  }

  /// Throws std::invalid_argument unless every matrix variable is bound
  /// exactly once in the prefix and no prefix variable repeats.
  void check_closed() const {
    std::set<std::string> bound;
    for (const auto& qv : prefix) {
      if (!bound.insert(qv.var).second)
        throw std::invalid_argument("formula: variable '" + qv.var +
                                    "' quantified more than once");
    }
    walk_atoms(matrix, [&](const Matrix& a) {
      for (const Term& t : a.args)
        if (t.is_variable && !bound.count(t.name))
          throw std::invalid_argument("formula: unbound variable '" + t.name + "'");
    });
  }

  template <typename Fn>
  static void walk_atoms(const Matrix& m, Fn&& fn) {
    if (m.kind == Connective::kAtom) {
      fn(m);
      return;
    }
    for (const Matrix& c : m.children) walk_atoms(c, fn);
  }
};

/// A finite ordered set of closed formulas. Order is the source order;
/// structural duplicates are removed.
struct Theory {
  std::vector<Formula> formulas;

  friend bool operator==(const Theory&, const Theory&) = default;

  bool constant_free() const {
    return std::all_of(formulas.begin(), formulas.end(),
                       [](const Formula& f) { return f.constant_free(); });
  }

  std::vector<Predicate> predicates() const {
    std::set<Predicate> ps;
    for (const Formula& f : formulas)
      for (const Predicate& p : f.predicates()) ps.insert(p);
    return {ps.begin(), ps.end()};
  }

  void push_unique(Formula f) {
    for (const Formula& g : formulas)
      if (g == f) return;
    formulas.push_back(std::move(f));
  }
};

// ---------------------------------------------------------------------------
// Printing. print/parse round-trip structurally; theories print one formula
// per line.

namespace detail {

inline int precedence(Connective k) {
  switch (k) {
    case Connective::kIff: return 1;
    case Connective::kImplies: return 2;
    case Connective::kOr: return 3;
    case Connective::kAnd: return 4;
    case Connective::kNot: return 5;
    case Connective::kAtom: return 6;
  }
  return 6;
}

inline void print_matrix(const Matrix& m, int parent_prec, bool right_operand,
                         std::string& out) {
  const int prec = precedence(m.kind);
  switch (m.kind) {
    case Connective::kAtom: {
      out += m.pred;
      if (!m.args.empty()) {
        out += "(";
        for (std::size_t i = 0; i < m.args.size(); ++i) {
          if (i) out += ",";
          out += m.args[i].name;
        }
        out += ")";
      }
      return;
    }
    case Connective::kNot: {
      out += "!";
      print_matrix(m.children[0], prec, false, out);
      return;
    }
    default: {
      const char* op = m.kind == Connective::kAnd   ? " & "
                       : m.kind == Connective::kOr  ? " | "
                       : m.kind == Connective::kIff ? " <-> "
                                                    : " -> ";
      // And/Or/Iff associate left, Implies associates right. A child at
      // equal precedence on the "wrong" side needs parentheses.
      bool need_parens =
          prec < parent_prec ||
          (prec == parent_prec && (m.kind == Connective::kImplies ? !right_operand : right_operand));
      if (need_parens) out += "(";
      print_matrix(m.children[0], prec, false, out);
      out += op;
      print_matrix(m.children[1], prec, true, out);
      if (need_parens) out += ")";
      return;
    }
  }
}

}  // namespace detail

inline std::string print_formula(const Formula& f) {
  std::string out;
  std::size_t i = 0;
  while (i < f.prefix.size()) {
    Quantifier q = f.prefix[i].quant;
    out += q == Quantifier::kForall ? "forall " : "exists ";
    bool first = true;
    while (i < f.prefix.size() && f.prefix[i].quant == q) {
      if (!first) out += ", ";
      out += f.prefix[i].var;
      first = false;
      ++i;
    }
    out += ": ";
  }
  detail::print_matrix(f.matrix, 0, false, out);
  return out;
}

inline std::string print_theory(const Theory& t) {
  std::string out;
  for (const Formula& f : t.formulas) {
    out += print_formula(f);
    out += "\n";
  }
  return out;
}

}  // namespace paclogic

#endif  // PACLOGIC_LOGIC_HPP
