#ifndef PACLOGIC_PARSER_HPP
#define PACLOGIC_PARSER_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "paclogic/example.hpp"
#include "paclogic/logic.hpp"

namespace paclogic {

/// Syntax error with 1-based line/column of the offending token.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
  int line;
  int col;
};

namespace detail {

struct Token {
  enum Kind { kIdent, kLParen, kRParen, kComma, kColon, kAnd, kOr, kNot,
              kImplies, kIff, kPeriod, kEnd } kind = kEnd;
  std::string text;
  int col = 0;
};

/// Tokenizes one logical line; `#` starts a comment.
inline std::vector<Token> tokenize_line(std::string_view line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Token::Kind k, std::string t, std::size_t at) {
    out.push_back(Token{k, std::move(t), static_cast<int>(at) + 1});
  };
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_'))
        ++j;
      push(Token::kIdent, std::string(line.substr(i, j - i)), i);
      i = j;
      continue;
    }
    switch (c) {
      case '(': push(Token::kLParen, "(", i); ++i; break;
      case ')': push(Token::kRParen, ")", i); ++i; break;
      case ',': push(Token::kComma, ",", i); ++i; break;
      case ':': push(Token::kColon, ":", i); ++i; break;
      case '&': push(Token::kAnd, "&", i); ++i; break;
      case '|': push(Token::kOr, "|", i); ++i; break;
      case '!': push(Token::kNot, "!", i); ++i; break;
      case '.': push(Token::kPeriod, ".", i); ++i; break;
      case '-':
        if (i + 1 < line.size() && line[i + 1] == '>') {
          push(Token::kImplies, "->", i);
          i += 2;
          break;
        }
        throw ParseError("unexpected character '-'", line_no, static_cast<int>(i) + 1);
      case '<':
        if (i + 2 < line.size() && line[i + 1] == '-' && line[i + 2] == '>') {
          push(Token::kIff, "<->", i);
          i += 3;
          break;
        }
        throw ParseError("unexpected character '<'", line_no, static_cast<int>(i) + 1);
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line_no,
                         static_cast<int>(i) + 1);
    }
  }
  out.push_back(Token{Token::kEnd, "", static_cast<int>(line.size()) + 1});
  return out;
}

class FormulaParser {
 public:
  FormulaParser(std::vector<Token> tokens, int line_no)
      : toks_(std::move(tokens)), line_(line_no) {}

  Formula parse() {
    Formula f;
    while (at_ident("forall") || at_ident("exists")) {
      Quantifier q = peek().text == "forall" ? Quantifier::kForall : Quantifier::kExists;
      advance();
      for (;;) {
        Token v = expect(Token::kIdent, "variable name");
        if (!is_variable_name(v.text))
          throw ParseError("quantified name '" + v.text +
                           "' must start with an uppercase letter", line_, v.col);
        f.prefix.push_back({q, v.text});
        if (peek().kind == Token::kComma) {
          advance();
          continue;
        }
        break;
      }
      expect(Token::kColon, "':' after quantified variables");
    }
    f.matrix = parse_iff();
    if (peek().kind != Token::kEnd)
      throw ParseError("unexpected trailing token '" + peek().text + "'", line_, peek().col);
    try {
      f.check_closed();
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line_, 1);
    }
    return f;
  }

 private:
  Matrix parse_iff() {
    Matrix m = parse_implies();
    while (peek().kind == Token::kIff) {
      advance();
      m = Matrix::binary(Connective::kIff, std::move(m), parse_implies());
    }
    return m;
  }
  Matrix parse_implies() {
    Matrix m = parse_or();
    if (peek().kind == Token::kImplies) {
      advance();
      return Matrix::binary(Connective::kImplies, std::move(m), parse_implies());
    }
    return m;
  }
  Matrix parse_or() {
    Matrix m = parse_and();
    while (peek().kind == Token::kOr) {
      advance();
      m = Matrix::binary(Connective::kOr, std::move(m), parse_and());
    }
    return m;
  }
  Matrix parse_and() {
    Matrix m = parse_unary();
    while (peek().kind == Token::kAnd) {
      advance();
      m = Matrix::binary(Connective::kAnd, std::move(m), parse_unary());
    }
    return m;
  }
  Matrix parse_unary() {
    if (peek().kind == Token::kNot) {
      advance();
      return Matrix::unary(Connective::kNot, parse_unary());
    }
    if (peek().kind == Token::kLParen) {
      advance();
      Matrix m = parse_iff();
      expect(Token::kRParen, "')'");
      return m;
    }
    return parse_atom();
  }
  Matrix parse_atom() {
    Token name = expect(Token::kIdent, "predicate name");
    std::vector<Term> args;
    if (peek().kind == Token::kLParen) {
      advance();
      if (peek().kind != Token::kRParen) {
        for (;;) {
          Token t = expect(Token::kIdent, "term");
          args.push_back(is_variable_name(t.text) ? Term::variable(t.text)
                                                  : Term::constant(t.text));
          if (peek().kind == Token::kComma) {
            advance();
            continue;
          }
          break;
        }
      }
      expect(Token::kRParen, "')'");
    }
    if (args.size() > kMaxArity)
      throw ParseError("atom arity exceeds supported maximum (" +
                       std::to_string(kMaxArity) + ")", line_, name.col);
    return Matrix::atom(name.text, std::move(args));
  }

  const Token& peek() const { return toks_[pos_]; }
  void advance() { ++pos_; }
  bool at_ident(std::string_view s) const {
    return peek().kind == Token::kIdent && peek().text == s;
  }
  Token expect(Token::Kind k, const std::string& what) {
    if (peek().kind != k)
      throw ParseError("expected " + what + ", found '" +
                       (peek().kind == Token::kEnd ? "end of line" : peek().text) + "'",
                       line_, peek().col);
    Token t = peek();
    advance();
    return t;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int line_;
};

inline std::vector<std::pair<int, std::string>> logical_lines(std::string_view text) {
  std::vector<std::pair<int, std::string>> lines;
  int n = 1;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n') {
      lines.emplace_back(n, std::string(text.substr(start, i - start)));
      start = i + 1;
      ++n;
    }
  }
  return lines;
}

inline bool blank_or_comment(const std::string& s) {
  for (char c : s) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace detail

/// Parses a formula from a single line of theory-file syntax.
inline Formula parse_formula(const std::string& line, int line_no = 1) {
  return detail::FormulaParser(detail::tokenize_line(line, line_no), line_no).parse();
}

/// Theory file: one closed formula per line, `#` comments, blank lines
/// ignored. Duplicate formulas are dropped; order is file order.
inline Theory parse_theory(std::string_view text) {
  Theory t;
  for (auto& [no, line] : detail::logical_lines(text)) {
    if (detail::blank_or_comment(line)) continue;
    t.push_unique(parse_formula(line, no));
  }
  return t;
}

namespace detail {

/// Parses `pred(arg,...)` where all args must be constants; used by the
/// example and masked-example readers.
inline Atom parse_ground_atom(const std::vector<Token>& toks, int line_no, std::size_t& pos) {
  if (toks[pos].kind != Token::kIdent)
    throw ParseError("expected predicate name, found '" + toks[pos].text + "'", line_no,
                     toks[pos].col);
  Atom a;
  a.pred = toks[pos].text;
  ++pos;
  if (toks[pos].kind == Token::kLParen) {
    ++pos;
    if (toks[pos].kind != Token::kRParen) {
      for (;;) {
        if (toks[pos].kind != Token::kIdent)
          throw ParseError("expected constant, found '" + toks[pos].text + "'", line_no,
                           toks[pos].col);
        if (!is_constant_name(toks[pos].text))
          throw ParseError("ground atoms take constants; '" + toks[pos].text +
                           "' looks like a variable", line_no, toks[pos].col);
        a.args.push_back(toks[pos].text);
        ++pos;
        if (toks[pos].kind == Token::kComma) {
          ++pos;
          continue;
        }
        break;
      }
    }
    if (toks[pos].kind != Token::kRParen)
      throw ParseError("expected ')'", line_no, toks[pos].col);
    ++pos;
  }
  if (a.args.size() > kMaxArity)
    throw ParseError("atom arity exceeds supported maximum (" + std::to_string(kMaxArity) + ")",
                     line_no, 1);
  return a;
}

inline std::vector<std::string> parse_domain_line(const std::vector<Token>& toks, int no) {
  std::vector<std::string> domain;
  std::size_t pos = 2;  // skip `domain` `:`
  while (toks[pos].kind != Token::kEnd) {
    if (toks[pos].kind != Token::kIdent || !is_constant_name(toks[pos].text))
      throw ParseError("expected constant in domain declaration", no, toks[pos].col);
    domain.push_back(toks[pos].text);
    ++pos;
  }
  return domain;
}

inline bool is_domain_decl(const std::vector<Token>& toks) {
  return toks.size() >= 2 && toks[0].kind == Token::kIdent && toks[0].text == "domain" &&
         toks[1].kind == Token::kColon;
}

}  // namespace detail

/// Example file: one `domain:` line (whitespace-separated constants) followed
/// by `atom(args).` lines. Errors: undeclared constant, arity mismatch
/// between uses of one predicate name, duplicate domain declarations.
inline Example parse_example(std::string_view text) {
  using detail::Token;
  bool have_domain = false;
  std::vector<std::string> domain;
  std::vector<Atom> atoms;
  std::map<std::string, std::uint32_t> arity_of;
  for (auto& [no, line] : detail::logical_lines(text)) {
    if (detail::blank_or_comment(line)) continue;
    auto toks = detail::tokenize_line(line, no);
    if (detail::is_domain_decl(toks)) {
      if (have_domain) throw ParseError("duplicate domain declaration", no, toks[0].col);
      domain = detail::parse_domain_line(toks, no);
      have_domain = true;
      continue;
    }
    if (!have_domain)
      throw ParseError("example file must start with a 'domain:' line", no, 1);
    std::size_t pos = 0;
    Atom a = detail::parse_ground_atom(toks, no, pos);
    if (toks[pos].kind != Token::kPeriod)
      throw ParseError("expected '.' after atom", no, toks[pos].col);
    ++pos;
    if (toks[pos].kind != Token::kEnd)
      throw ParseError("unexpected trailing token", no, toks[pos].col);
    auto [it, inserted] = arity_of.emplace(a.pred, a.arity());
    if (!inserted && it->second != a.arity())
      throw ParseError("arity mismatch for predicate '" + a.pred + "': " +
                       std::to_string(it->second) + " vs " + std::to_string(a.arity()),
                       no, 1);
    atoms.push_back(std::move(a));
  }
  try {
    return Example(std::move(domain), atoms);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

/// Masked-example file: `domain:` line, then one signed ground literal per
/// line (`sm(alice)` / `!sm(bob)`); a trailing '.' is tolerated on input but
/// not part of the canonical format.
struct ParsedMask {
  std::vector<std::string> domain;
  std::vector<Literal> literals;
};

inline ParsedMask parse_masked_literals(std::string_view text) {
  using detail::Token;
  ParsedMask m;
  bool have_domain = false;
  std::map<std::string, std::uint32_t> arity_of;
  for (auto& [no, line] : detail::logical_lines(text)) {
    if (detail::blank_or_comment(line)) continue;
    auto toks = detail::tokenize_line(line, no);
    if (detail::is_domain_decl(toks)) {
      if (have_domain) throw ParseError("duplicate domain declaration", no, toks[0].col);
      m.domain = detail::parse_domain_line(toks, no);
      have_domain = true;
      continue;
    }
    if (!have_domain)
      throw ParseError("masked-example file must start with a 'domain:' line", no, 1);
    std::size_t pos = 0;
    bool positive = true;
    if (toks[pos].kind == Token::kNot) {
      positive = false;
      ++pos;
    }
    Atom a = detail::parse_ground_atom(toks, no, pos);
    if (toks[pos].kind == Token::kPeriod) ++pos;
    if (toks[pos].kind != Token::kEnd)
      throw ParseError("unexpected trailing token", no, toks[pos].col);
    auto [it, inserted] = arity_of.emplace(a.pred, a.arity());
    if (!inserted && it->second != a.arity())
      throw ParseError("arity mismatch for predicate '" + a.pred + "'", no, 1);
    m.literals.push_back(Literal{std::move(a), positive});
  }
  return m;
}

}  // namespace paclogic

#endif  // PACLOGIC_PARSER_HPP
