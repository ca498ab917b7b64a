#ifndef SCLP_PROGRAM_HPP
#define SCLP_PROGRAM_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "sclp/error.hpp"
#include "sclp/semiring.hpp"
#include "sclp/value.hpp"

namespace sclp {

/// Ground atom `pred(c1,...,cn)`; arguments are constants only.
struct Atom {
  std::string predicate;
  std::vector<std::string> args;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
    if (auto c = a.predicate <=> b.predicate; c != 0) return c;
    return a.args <=> b.args;
  }
};

inline std::string to_string(const Atom& a) {
  std::string out = a.predicate;
  if (!a.args.empty()) {
    out += "(";
    for (std::size_t i = 0; i < a.args.size(); ++i) out += (i ? "," : "") + a.args[i];
    out += ")";
  }
  return out;
}

struct PositiveAtom {
  Atom atom;
  friend bool operator==(const PositiveAtom&, const PositiveAtom&) = default;
};
struct NegatedAtom {
  Atom atom;
  friend bool operator==(const NegatedAtom&, const NegatedAtom&) = default;
};
struct Constant {
  Value value;
  friend bool operator==(const Constant&, const Constant&) = default;
};

using GeneralizedAtom = std::variant<PositiveAtom, NegatedAtom, Constant>;

struct Clause {
  Atom head;
  std::vector<GeneralizedAtom> body;

  friend bool operator==(const Clause&, const Clause&) = default;
};

/// Sorted set of the atoms a program talks about; shared by its interpretations.
struct AtomUniverse {
  std::vector<Atom> atoms;

  std::optional<std::size_t> index_of(const Atom& a) const {
    auto it = std::lower_bound(atoms.begin(), atoms.end(), a);
    if (it == atoms.end() || *it != a) return std::nullopt;
    return static_cast<std::size_t>(it - atoms.begin());
  }
  std::size_t size() const noexcept { return atoms.size(); }

  friend bool operator==(const AtomUniverse&, const AtomUniverse&) = default;
};

/// Body literal with the atom resolved to its universe index.
struct Literal {
  enum class Kind : std::uint8_t { positive, negated, constant };
  Kind kind;
  std::size_t atom = 0;
  Value value;
};

/**
 * A ground normal program over one semiring. Clauses form a multiset: with a
 * non-idempotent +, a duplicated clause contributes twice to its head.
 */
class Program {
 public:
  Program(SemiringPtr semiring, std::vector<Clause> clauses)
      : semiring_(std::move(semiring)), clauses_(std::move(clauses)) {
    std::vector<Atom> atoms;
    for (const auto& c : clauses_) {
      atoms.push_back(c.head);
      for (const auto& g : c.body) {
        if (const auto* p = std::get_if<PositiveAtom>(&g)) atoms.push_back(p->atom);
        if (const auto* n = std::get_if<NegatedAtom>(&g)) atoms.push_back(n->atom);
        if (const auto* k = std::get_if<Constant>(&g)) semiring_->require_member(k->value);
      }
    }
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    universe_ = std::make_shared<const AtomUniverse>(AtomUniverse{std::move(atoms)});

    by_head_.resize(universe_->size());
    bodies_.reserve(clauses_.size());
    for (std::size_t i = 0; i < clauses_.size(); ++i) {
      const auto& c = clauses_[i];
      std::vector<Literal> body;
      body.reserve(c.body.size());
      for (const auto& g : c.body) {
        if (const auto* p = std::get_if<PositiveAtom>(&g)) {
          body.push_back({Literal::Kind::positive, *universe_->index_of(p->atom), {}});
        } else if (const auto* n = std::get_if<NegatedAtom>(&g)) {
          body.push_back({Literal::Kind::negated, *universe_->index_of(n->atom), {}});
          positive_ = false;
        } else {
          body.push_back({Literal::Kind::constant, 0, std::get<Constant>(g).value});
        }
      }
      bodies_.push_back(std::move(body));
      by_head_[*universe_->index_of(c.head)].push_back(i);
    }
  }

  const SemiringSpec& semiring() const noexcept { return *semiring_; }
  const SemiringPtr& semiring_ptr() const noexcept { return semiring_; }
  const std::vector<Clause>& clauses() const noexcept { return clauses_; }
  const std::shared_ptr<const AtomUniverse>& universe() const noexcept { return universe_; }
  const std::vector<Atom>& atoms() const noexcept { return universe_->atoms; }

  /// Clause indices (document order) whose head is the atom with the given universe index.
  const std::vector<std::size_t>& clauses_for_index(std::size_t head) const { return by_head_.at(head); }
  const std::vector<Literal>& body(std::size_t clause) const { return bodies_.at(clause); }

  bool is_positive() const noexcept { return positive_; }

  /// Universe indices of atoms that occur under `not`.
  std::vector<std::size_t> negated_atoms() const {
    std::vector<char> seen(universe_->size(), 0);
    for (const auto& body : bodies_) {
      for (const auto& lit : body) {
        if (lit.kind == Literal::Kind::negated) seen[lit.atom] = 1;
      }
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (seen[i]) out.push_back(i);
    }
    return out;
  }

  /// Same program with duplicate clauses removed (first occurrence kept).
  Program deduplicated() const {
    std::vector<Clause> unique;
    for (const auto& c : clauses_) {
      if (std::find(unique.begin(), unique.end(), c) == unique.end()) unique.push_back(c);
    }
    return Program(semiring_, std::move(unique));
  }

 private:
  SemiringPtr semiring_;
  std::vector<Clause> clauses_;
  std::shared_ptr<const AtomUniverse> universe_;
  std::vector<std::vector<std::size_t>> by_head_;
  std::vector<std::vector<Literal>> bodies_;
  bool positive_ = true;
};

inline bool is_positive(const Program& p) { return p.is_positive(); }

/// All clauses with the given head, in document order; empty when the atom has no definition.
inline std::vector<Clause> clauses_for(const Program& p, const Atom& head) {
  std::vector<Clause> out;
  auto idx = p.universe()->index_of(head);
  if (!idx) return out;
  for (std::size_t i : p.clauses_for_index(*idx)) out.push_back(p.clauses()[i]);
  return out;
}

inline std::string to_string(const GeneralizedAtom& g) {
  if (const auto* p = std::get_if<PositiveAtom>(&g)) return to_string(p->atom);
  if (const auto* n = std::get_if<NegatedAtom>(&g)) return "not " + to_string(n->atom);
  return to_string(std::get<Constant>(g).value);
}

inline std::string to_string(const Clause& c) {
  std::string out = to_string(c.head);
  if (!c.body.empty()) {
    out += " :- ";
    for (std::size_t i = 0; i < c.body.size(); ++i) out += (i ? ", " : "") + to_string(c.body[i]);
  }
  return out + ".";
}

/// Pretty-prints one clause per line; the output parses back to the same program.
inline std::string print_program(const Program& p) {
  std::string out;
  for (const auto& c : p.clauses()) out += to_string(c) + "\n";
  return out;
}

namespace detail {

struct Token {
  enum class Kind { ident, literal, if_, comma, dot, lparen, rparen, end };
  Kind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      const std::size_t line = line_, col = col_;
      if (pos_ >= text_.size()) {
        out.push_back({Token::Kind::end, "", line, col});
        return out;
      }
      char c = text_[pos_];
      auto single = [&](Token::Kind k) {
        advance();
        out.push_back({k, std::string(1, c), line, col});
      };
      if (c == ',') {
        single(Token::Kind::comma);
      } else if (c == '.') {
        single(Token::Kind::dot);
      } else if (c == '(') {
        single(Token::Kind::lparen);
      } else if (c == ')') {
        single(Token::Kind::rparen);
      } else if (c == ':' && peek(1) == '-') {
        advance();
        advance();
        out.push_back({Token::Kind::if_, ":-", line, col});
      } else if (std::islower(static_cast<unsigned char>(c))) {
        out.push_back({Token::Kind::ident, word(), line, col});
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
        std::string t(1, c);
        advance();
        if (pos_ < text_.size() && std::islower(static_cast<unsigned char>(text_[pos_]))) {
          t += word();  // -inf, +inf
        } else {
          t += digits();
          if (pos_ < text_.size() && text_[pos_] == '/') {
            advance();
            t += "/" + digits();
          }
        }
        if (t == "-" || t == "+") throw ParseError(line, col, "dangling sign");
        out.push_back({Token::Kind::literal, t, line, col});
      } else if (c == '{') {
        std::string t;
        while (pos_ < text_.size() && text_[pos_] != '}') {
          if (!std::isspace(static_cast<unsigned char>(text_[pos_]))) t += text_[pos_];
          advance();
        }
        if (pos_ >= text_.size()) throw ParseError(line, col, "unterminated set literal");
        advance();
        out.push_back({Token::Kind::literal, t + "}", line, col});
      } else if (std::isupper(static_cast<unsigned char>(c)) || c == '_') {
        throw ParseError(line, col, "variables are not supported; identifiers start with a lowercase letter");
      } else {
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
      }
    }
  }

 private:
  char peek(std::size_t k) const { return pos_ + k < text_.size() ? text_[pos_ + k] : '\0'; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string word() {
    std::string t;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      t += text_[pos_];
      advance();
    }
    return t;
  }

  std::string digits() {
    std::string t;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      t += text_[pos_];
      advance();
    }
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, const SemiringSpec& semiring)
      : tokens_(std::move(tokens)), semiring_(semiring) {}

  std::vector<Clause> run() {
    std::vector<Clause> clauses;
    while (peek().kind != Token::Kind::end) clauses.push_back(clause());
    return clauses;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return tokens_[std::min(pos_ + k, tokens_.size() - 1)]; }
  const Token& next() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }

  const Token& expect(Token::Kind kind, const char* what) {
    const Token& t = next();
    if (t.kind != kind) throw ParseError(t.line, t.column, std::string("expected ") + what + ", found '" + t.text + "'");
    return t;
  }

  Clause clause() {
    const Token& start = peek();
    if (start.kind != Token::Kind::ident) throw ParseError(start.line, start.column, "clause head must be an atom");
    if (start.text == "not") throw ParseError(start.line, start.column, "clause head cannot be negated");
    if (peek(1).kind != Token::Kind::lparen && semiring_.read_literal(start.text)) {
      throw ParseError(start.line, start.column, "clause head must be an atom, not the constant '" + start.text + "'");
    }
    Clause c;
    c.head = atom();
    if (peek().kind == Token::Kind::if_) {
      next();
      c.body.push_back(gatom());
      while (peek().kind == Token::Kind::comma) {
        next();
        c.body.push_back(gatom());
      }
    }
    expect(Token::Kind::dot, "'.'");
    return c;
  }

  Atom atom() {
    Atom a;
    a.predicate = expect(Token::Kind::ident, "atom").text;
    if (peek().kind == Token::Kind::lparen) {
      next();
      a.args.push_back(expect(Token::Kind::ident, "constant argument").text);
      while (peek().kind == Token::Kind::comma) {
        next();
        a.args.push_back(expect(Token::Kind::ident, "constant argument").text);
      }
      expect(Token::Kind::rparen, "')'");
    }
    return a;
  }

  GeneralizedAtom gatom() {
    const Token& t = peek();
    if (t.kind == Token::Kind::ident && t.text == "not" &&
        peek(1).kind != Token::Kind::comma && peek(1).kind != Token::Kind::dot) {
      next();
      const Token& operand = peek();
      if (operand.kind != Token::Kind::ident) {
        throw ParseError(operand.line, operand.column, "negation applies only to atoms, found '" + operand.text + "'");
      }
      if (peek(1).kind != Token::Kind::lparen && semiring_.read_literal(operand.text)) {
        throw ParseError(operand.line, operand.column, "negation applies only to atoms, found constant '" + operand.text + "'");
      }
      return NegatedAtom{atom()};
    }
    if (t.kind == Token::Kind::literal) {
      next();
      return Constant{literal(t)};
    }
    if (t.kind == Token::Kind::ident && peek(1).kind != Token::Kind::lparen) {
      if (auto v = semiring_.read_literal(t.text)) {
        next();
        semiring_.require_member(*v);
        return Constant{*v};
      }
    }
    if (t.kind != Token::Kind::ident) throw ParseError(t.line, t.column, "expected body element, found '" + t.text + "'");
    return PositiveAtom{atom()};
  }

  Value literal(const Token& t) {
    auto v = semiring_.read_literal(t.text);
    if (!v) {
      throw Error(ErrorCode::value_not_in_carrier, std::to_string(t.line) + ":" + std::to_string(t.column) +
                                                       ": literal '" + t.text + "' is not a value of " + semiring_.name);
    }
    if (!semiring_.contains(*v)) {
      throw Error(ErrorCode::value_not_in_carrier, std::to_string(t.line) + ":" + std::to_string(t.column) +
                                                       ": '" + t.text + "' is not in the carrier of " + semiring_.name);
    }
    return *v;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const SemiringSpec& semiring_;
};

}  // namespace detail

/**
 * Parses a program. Identifiers the semiring reads as literals (`true`, `inf`,
 * table element names) are constants unless followed by `(`.
 */
inline Program parse_program(std::string_view text, const SemiringPtr& semiring) {
  detail::Parser parser(detail::Lexer(text).run(), *semiring);
  return Program(semiring, parser.run());
}

}  // namespace sclp

#endif  // SCLP_PROGRAM_HPP
