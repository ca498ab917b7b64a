#ifndef SCLP_INTERPRETATION_HPP
#define SCLP_INTERPRETATION_HPP

#include <cctype>
#include <cstddef>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sclp/error.hpp"
#include "sclp/program.hpp"
#include "sclp/semiring.hpp"
#include "sclp/value.hpp"

namespace sclp {

/// Total map from a program's atoms to carrier values, stored densely by universe index.
class Interpretation {
 public:
  Interpretation(std::shared_ptr<const AtomUniverse> universe, std::vector<Value> values)
      : universe_(std::move(universe)), values_(std::move(values)) {
    if (values_.size() != universe_->size()) {
      throw Error(ErrorCode::universe_mismatch, "interpretation has " + std::to_string(values_.size()) +
                                                    " values for " + std::to_string(universe_->size()) + " atoms");
    }
  }

  static Interpretation constant(std::shared_ptr<const AtomUniverse> universe, const Value& v) {
    std::vector<Value> values(universe->size(), v);
    return Interpretation(std::move(universe), std::move(values));
  }

  const std::shared_ptr<const AtomUniverse>& universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<Value>& values() const noexcept { return values_; }

  const Value& operator[](std::size_t i) const { return values_[i]; }
  Value& operator[](std::size_t i) { return values_[i]; }

  const Value& at(const Atom& a) const {
    auto idx = universe_->index_of(a);
    if (!idx) throw Error(ErrorCode::universe_mismatch, "atom '" + to_string(a) + "' is not in the universe");
    return values_[*idx];
  }

  bool same_universe(const Interpretation& other) const {
    return universe_ == other.universe_ || *universe_ == *other.universe_;
  }

  friend bool operator==(const Interpretation& a, const Interpretation& b) {
    return a.same_universe(b) && a.values_ == b.values_;
  }

 private:
  std::shared_ptr<const AtomUniverse> universe_;
  std::vector<Value> values_;
};

/// Element of the bilattice. Consistency is a query, not an invariant.
struct ApproximationPair {
  Interpretation lower;
  Interpretation upper;

  bool is_exact() const { return lower == upper; }
  friend bool operator==(const ApproximationPair&, const ApproximationPair&) = default;
};

/// Canonical text form: one `atom = value` line per atom, sorted by atom.
inline std::string format_interpretation(const Interpretation& I) {
  std::string out;
  const auto& atoms = I.universe()->atoms;
  for (std::size_t i = 0; i < atoms.size(); ++i) out += to_string(atoms[i]) + " = " + to_string(I[i]) + "\n";
  return out;
}

inline std::string format_pair(const ApproximationPair& p) {
  return "[lower]\n" + format_interpretation(p.lower) + "[upper]\n" + format_interpretation(p.upper);
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline Atom parse_atom_text(std::string_view text, std::size_t line) {
  Atom a;
  auto open = text.find('(');
  auto ident_ok = [](std::string_view id) {
    if (id.empty() || !std::islower(static_cast<unsigned char>(id.front()))) return false;
    for (char c : id) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
  };
  a.predicate = std::string(trim(text.substr(0, open)));
  if (!ident_ok(a.predicate)) throw ParseError(line, 1, "bad atom '" + std::string(text) + "'");
  if (open != std::string_view::npos) {
    if (text.back() != ')') throw ParseError(line, 1, "bad atom '" + std::string(text) + "'");
    std::string_view inner = text.substr(open + 1, text.size() - open - 2);
    while (true) {
      auto comma = inner.find(',');
      std::string arg(trim(inner.substr(0, comma)));
      if (!ident_ok(arg)) throw ParseError(line, 1, "bad atom argument '" + arg + "'");
      a.args.push_back(arg);
      if (comma == std::string_view::npos) break;
      inner.remove_prefix(comma + 1);
    }
  }
  return a;
}

struct AssignmentParser {
  const SemiringSpec& semiring;
  const std::shared_ptr<const AtomUniverse>& universe;
  std::vector<std::optional<Value>> slots;

  AssignmentParser(const SemiringSpec& s, const std::shared_ptr<const AtomUniverse>& u)
      : semiring(s), universe(u), slots(u->size()) {}

  void line(std::string_view text, std::size_t lineno) {
    auto eq = text.find('=');
    if (eq == std::string_view::npos) throw ParseError(lineno, 1, "expected 'atom = value'");
    Atom a = parse_atom_text(trim(text.substr(0, eq)), lineno);
    std::string_view vtext = trim(text.substr(eq + 1));
    auto v = semiring.read_literal(vtext);
    if (!v || !semiring.contains(*v)) {
      throw Error(ErrorCode::value_not_in_carrier, std::to_string(lineno) + ":" + std::to_string(eq + 2) + ": '" +
                                                       std::string(vtext) + "' is not a value of " + semiring.name);
    }
    auto idx = universe->index_of(a);
    if (!idx) {
      throw Error(ErrorCode::universe_mismatch,
                  std::to_string(lineno) + ":1: atom '" + to_string(a) + "' does not occur in the program");
    }
    if (slots[*idx]) throw ParseError(lineno, 1, "atom '" + to_string(a) + "' assigned twice");
    slots[*idx] = std::move(*v);
  }

  Interpretation finish() {
    std::vector<Value> values;
    values.reserve(slots.size());
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (!slots[i]) {
        throw Error(ErrorCode::universe_mismatch, "no value given for atom '" + to_string(universe->atoms[i]) + "'");
      }
      values.push_back(std::move(*slots[i]));
    }
    return Interpretation(universe, std::move(values));
  }
};

}  // namespace detail

/// Reads the canonical text form; every atom of the universe must be assigned exactly once.
inline Interpretation parse_interpretation(std::string_view text, const SemiringSpec& semiring,
                                           const std::shared_ptr<const AtomUniverse>& universe) {
  detail::AssignmentParser parser(semiring, universe);
  std::istringstream in{std::string(text)};
  std::string raw;
  for (std::size_t lineno = 1; std::getline(in, raw); ++lineno) {
    std::string_view line = raw;
    if (auto pct = line.find('%'); pct != std::string_view::npos) line = line.substr(0, pct);
    line = detail::trim(line);
    if (!line.empty()) parser.line(line, lineno);
  }
  return parser.finish();
}

/// Reads a pair file: a `[lower]` section followed by an `[upper]` section.
inline ApproximationPair parse_pair(std::string_view text, const SemiringSpec& semiring,
                                    const std::shared_ptr<const AtomUniverse>& universe) {
  std::optional<detail::AssignmentParser> lower, upper;
  detail::AssignmentParser* current = nullptr;
  std::istringstream in{std::string(text)};
  std::string raw;
  for (std::size_t lineno = 1; std::getline(in, raw); ++lineno) {
    std::string_view line = raw;
    if (auto pct = line.find('%'); pct != std::string_view::npos) line = line.substr(0, pct);
    line = detail::trim(line);
    if (line.empty()) continue;
    if (line == "[lower]") {
      if (lower) throw ParseError(lineno, 1, "duplicate [lower] section");
      current = &lower.emplace(semiring, universe);
    } else if (line == "[upper]") {
      if (upper) throw ParseError(lineno, 1, "duplicate [upper] section");
      current = &upper.emplace(semiring, universe);
    } else if (!current) {
      throw ParseError(lineno, 1, "expected [lower] or [upper] section header");
    } else {
      current->line(line, lineno);
    }
  }
  if (!lower || !upper) throw ParseError(1, 1, "pair file needs both [lower] and [upper] sections");
  return {lower->finish(), upper->finish()};
}

}  // namespace sclp

#endif  // SCLP_INTERPRETATION_HPP
