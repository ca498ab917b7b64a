#ifndef SCLP_CATALOG_HPP
#define SCLP_CATALOG_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sclp/order.hpp"
#include "sclp/semiring.hpp"

namespace sclp {

namespace detail {

inline std::optional<BigInt> parse_int(std::string_view t) {
  if (t.empty()) return std::nullopt;
  std::size_t i = (t[0] == '-') ? 1 : 0;
  if (i == t.size()) return std::nullopt;
  for (std::size_t k = i; k < t.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(t[k]))) return std::nullopt;
  }
  return BigInt(std::string(t));
}

inline std::optional<ExtInt> parse_ext_int(std::string_view t) {
  if (t == "inf" || t == "+inf") return ExtInt::pos_inf();
  if (t == "-inf") return ExtInt::neg_inf();
  if (auto n = parse_int(t)) return ExtInt(*n);
  return std::nullopt;
}

inline const ExtInt* as_ext(const Value& v) { return std::get_if<ExtInt>(&v); }

inline bool is_natural(const Value& v) {
  const auto* x = as_ext(v);
  return x && (x->is_pos_inf() || (x->is_finite() && x->finite_value() >= 0));
}

inline ExtInt nat_add(const ExtInt& a, const ExtInt& b) {
  if (a.is_pos_inf() || b.is_pos_inf()) return ExtInt::pos_inf();
  return ExtInt(a.finite_value() + b.finite_value());
}

inline ExtInt nat_mul(const ExtInt& a, const ExtInt& b) {
  if ((a.is_finite() && a.finite_value() == 0) || (b.is_finite() && b.finite_value() == 0)) return ExtInt(0);
  if (a.is_pos_inf() || b.is_pos_inf()) return ExtInt::pos_inf();
  return ExtInt(a.finite_value() * b.finite_value());
}

/// Values above `bound` collapse to inf; this is a congruence for + and x on N∪{inf}.
inline ExtInt saturate(ExtInt x, const BigInt& bound) {
  if (x.is_finite() && x.finite_value() > bound) return ExtInt::pos_inf();
  return x;
}

inline int sign_of(const ExtInt& x) {
  if (x.is_pos_inf()) return 1;
  if (x.is_neg_inf()) return -1;
  return x.finite_value() > 0 ? 1 : (x.finite_value() < 0 ? -1 : 0);
}

inline std::vector<Value> natural_range(const BigInt& lo, const BigInt& hi, std::size_t limit) {
  std::vector<Value> out;
  if (hi < lo) return out;
  if (BigInt(hi - lo) >= BigInt(limit)) {
    throw Error(ErrorCode::interval_too_large, "interval exceeds cap " + std::to_string(limit));
  }
  for (BigInt v = lo; v <= hi; ++v) out.emplace_back(ExtInt(v));
  return out;
}

inline Value numeric_min(const Value& a, const Value& b) { return std::get<ExtInt>(a) < std::get<ExtInt>(b) ? a : b; }
inline Value numeric_max(const Value& a, const Value& b) { return std::get<ExtInt>(a) < std::get<ExtInt>(b) ? b : a; }

inline Value sample_natural(std::mt19937_64& rng) {
  if (std::uniform_int_distribution<int>(0, 9)(rng) == 0) return ExtInt::pos_inf();
  return ExtInt(std::uniform_int_distribution<long long>(0, 20)(rng));
}

inline std::vector<Value> naturals_upto(long long bound) {
  std::vector<Value> out;
  for (long long v = 0; v <= bound; ++v) out.emplace_back(ExtInt(v));
  out.emplace_back(ExtInt::pos_inf());
  return out;
}

inline std::optional<Rational> parse_rational(std::string_view t) {
  auto slash = t.find('/');
  if (slash == std::string_view::npos) {
    if (auto n = parse_int(t)) return Rational(*n);
    return std::nullopt;
  }
  auto num = parse_int(t.substr(0, slash));
  auto den = parse_int(t.substr(slash + 1));
  if (!num || !den || *den <= 0) return std::nullopt;
  return Rational(*num, *den);
}

inline bool is_unit_rational(const Value& v) {
  const auto* q = std::get_if<Rational>(&v);
  return q && *q >= 0 && *q <= 1;
}

inline const Rational& rat(const Value& v) { return std::get<Rational>(v); }

}  // namespace detail

/// Boolean semiring <{false,true}, or, and, false, true>, false < true.
inline SemiringPtr boolean_semiring() {
  auto s = std::make_shared<SemiringSpec>();
  s->name = "bool";
  s->contains = [](const Value& v) { return std::holds_alternative<bool>(v); };
  s->add = [](const Value& a, const Value& b) { return Value(std::get<bool>(a) || std::get<bool>(b)); };
  s->mul = [](const Value& a, const Value& b) { return Value(std::get<bool>(a) && std::get<bool>(b)); };
  s->zero = false;
  s->one = true;
  s->leq = [](const Value& a, const Value& b) { return !std::get<bool>(a) || std::get<bool>(b); };
  s->elements = std::vector<Value>{false, true};
  s->natural_leq_closed_form = s->leq;
  s->lattice = LatticeOps{s->mul, s->add, false, true};
  s->read_literal = [](std::string_view t) -> std::optional<Value> {
    if (t == "true") return Value(true);
    if (t == "false") return Value(false);
    return std::nullopt;
  };
  s->sample = [](std::mt19937_64& rng) { return Value(std::bernoulli_distribution(0.5)(rng)); };
  s->flags = {Tri::asserted, Tri::asserted, Tri::asserted, Tri::asserted};
  return s;
}

/**
 * Fuzzy semiring <[0,1], max, min, 0, 1> over exact rationals. With
 * `grid_denominator` set, the carrier is restricted to {k/n}, which is closed
 * under max and min and therefore finite.
 */
inline SemiringPtr fuzzy_semiring(std::optional<long long> grid_denominator = std::nullopt) {
  auto s = std::make_shared<SemiringSpec>();
  using detail::rat;
  s->add = [](const Value& a, const Value& b) { return rat(a) < rat(b) ? b : a; };
  s->mul = [](const Value& a, const Value& b) { return rat(a) < rat(b) ? a : b; };
  s->zero = Rational(0);
  s->one = Rational(1);
  s->leq = [](const Value& a, const Value& b) { return rat(a) <= rat(b); };
  s->natural_leq_closed_form = s->leq;
  s->lattice = LatticeOps{s->mul, s->add, Rational(0), Rational(1)};
  s->flags = {Tri::asserted, Tri::asserted, Tri::asserted, Tri::asserted};
  if (grid_denominator) {
    const long long n = *grid_denominator;
    s->name = "fuzzy-grid:" + std::to_string(n);
    std::vector<Value> grid;
    for (long long k = 0; k <= n; ++k) grid.emplace_back(Rational(k, n));
    s->elements = grid;
    s->contains = [n](const Value& v) {
      return detail::is_unit_rational(v) && BigInt(boost::multiprecision::denominator(rat(v) * n)) == 1;
    };
  } else {
    s->name = "fuzzy";
    s->contains = detail::is_unit_rational;
    s->interval = [](const Value& lo, const Value& hi, std::size_t) -> std::vector<Value> {
      if (rat(hi) < rat(lo)) return {};
      if (lo == hi) return {lo};
      throw Error(ErrorCode::not_enumerable, "fuzzy interval [" + to_string(lo) + "," + to_string(hi) + "] is infinite");
    };
    s->sample = [](std::mt19937_64& rng) {
      long long d = std::uniform_int_distribution<long long>(1, 8)(rng);
      return Value(Rational(std::uniform_int_distribution<long long>(0, d)(rng), d));
    };
  }
  s->read_literal = [](std::string_view t) -> std::optional<Value> {
    auto q = detail::parse_rational(t);
    if (!q) return std::nullopt;
    return Value(*q);
  };
  return s;
}

/**
 * N∪{inf} with ordinary + and x, ordered by <=. With `bound` set, values above
 * it collapse to inf, giving a finite quotient semiring.
 */
inline SemiringPtr nat_inf_semiring(std::optional<long long> bound = std::nullopt) {
  auto s = std::make_shared<SemiringSpec>();
  s->zero = ExtInt(0);
  s->one = ExtInt(1);
  s->leq = [](const Value& a, const Value& b) { return std::get<ExtInt>(a) <= std::get<ExtInt>(b); };
  s->natural_leq_closed_form = s->leq;
  s->lattice = LatticeOps{detail::numeric_min, detail::numeric_max, ExtInt(0), ExtInt::pos_inf()};
  s->flags = {Tri::asserted, Tri::denied, Tri::asserted, Tri::asserted};
  s->read_literal = [](std::string_view t) -> std::optional<Value> {
    if (auto x = detail::parse_ext_int(t)) return Value(*x);
    return std::nullopt;
  };
  if (bound) {
    const BigInt b = *bound;
    s->name = "nat-trunc:" + std::to_string(*bound);
    s->elements = detail::naturals_upto(*bound);
    s->contains = [b](const Value& v) {
      const auto* x = detail::as_ext(v);
      return detail::is_natural(v) && (x->is_pos_inf() || x->finite_value() <= b);
    };
    s->add = [b](const Value& x, const Value& y) {
      return Value(detail::saturate(detail::nat_add(std::get<ExtInt>(x), std::get<ExtInt>(y)), b));
    };
    s->mul = [b](const Value& x, const Value& y) {
      return Value(detail::saturate(detail::nat_mul(std::get<ExtInt>(x), std::get<ExtInt>(y)), b));
    };
  } else {
    s->name = "nat-inf";
    s->contains = detail::is_natural;
    s->add = [](const Value& x, const Value& y) { return Value(detail::nat_add(std::get<ExtInt>(x), std::get<ExtInt>(y))); };
    s->mul = [](const Value& x, const Value& y) { return Value(detail::nat_mul(std::get<ExtInt>(x), std::get<ExtInt>(y))); };
    s->interval = [](const Value& lo, const Value& hi, std::size_t limit) -> std::vector<Value> {
      const auto& l = std::get<ExtInt>(lo);
      const auto& h = std::get<ExtInt>(hi);
      if (h < l) return {};
      if (h.is_pos_inf()) {
        if (l.is_pos_inf()) return {hi};
        throw Error(ErrorCode::not_enumerable, "interval [" + l.str() + ",inf] is infinite");
      }
      return detail::natural_range(l.finite_value(), h.finite_value(), limit);
    };
    s->sample = detail::sample_natural;
  }
  return s;
}

/**
 * Optimization semiring <N∪{inf}, min, +, inf, 0> ordered by >= on costs:
 * higher costs are lesser, inf is bottom and 0 is top.
 */
inline SemiringPtr opt_semiring(std::optional<long long> bound = std::nullopt) {
  auto s = std::make_shared<SemiringSpec>();
  s->zero = ExtInt::pos_inf();
  s->one = ExtInt(0);
  s->add = detail::numeric_min;
  s->leq = [](const Value& a, const Value& b) { return std::get<ExtInt>(b) <= std::get<ExtInt>(a); };
  s->natural_leq_closed_form = s->leq;
  s->lattice = LatticeOps{detail::numeric_max, detail::numeric_min, ExtInt::pos_inf(), ExtInt(0)};
  s->flags = {Tri::asserted, Tri::asserted, Tri::asserted, Tri::asserted};
  s->read_literal = [](std::string_view t) -> std::optional<Value> {
    if (auto x = detail::parse_ext_int(t)) return Value(*x);
    return std::nullopt;
  };
  if (bound) {
    const BigInt b = *bound;
    s->name = "opt-trunc:" + std::to_string(*bound);
    s->elements = detail::naturals_upto(*bound);
    s->contains = [b](const Value& v) {
      const auto* x = detail::as_ext(v);
      return detail::is_natural(v) && (x->is_pos_inf() || x->finite_value() <= b);
    };
    s->mul = [b](const Value& x, const Value& y) {
      return Value(detail::saturate(detail::nat_add(std::get<ExtInt>(x), std::get<ExtInt>(y)), b));
    };
  } else {
    s->name = "opt";
    s->contains = detail::is_natural;
    s->mul = [](const Value& x, const Value& y) { return Value(detail::nat_add(std::get<ExtInt>(x), std::get<ExtInt>(y))); };
    s->interval = [](const Value& lo, const Value& hi, std::size_t limit) -> std::vector<Value> {
      // Under >=, [lo, hi] holds the costs c with hi <= c <= lo numerically.
      const auto& l = std::get<ExtInt>(lo);
      const auto& h = std::get<ExtInt>(hi);
      if (l < h) return {};
      if (l.is_pos_inf()) {
        if (h.is_pos_inf()) return {lo};
        throw Error(ErrorCode::not_enumerable, "interval [inf," + h.str() + "] under >= is infinite");
      }
      auto out = detail::natural_range(h.finite_value(), l.finite_value(), limit);
      std::reverse(out.begin(), out.end());
      return out;
    };
    s->sample = detail::sample_natural;
  }
  return s;
}

/// Power set semiring <2^A, union, intersection, {}, A> ordered by inclusion.
inline SemiringPtr powerset_semiring(std::vector<std::string> universe) {
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  if (universe.size() > 16) throw Error(ErrorCode::unknown_semiring, "power set base must have at most 16 symbols");
  auto s = std::make_shared<SemiringSpec>();
  std::string name = "powerset:";
  for (std::size_t i = 0; i < universe.size(); ++i) name += (i ? "," : "") + universe[i];
  s->name = name;
  const std::set<std::string> base(universe.begin(), universe.end());
  s->contains = [base](const Value& v) {
    const auto* x = std::get_if<SymbolSet>(&v);
    return x && std::includes(base.begin(), base.end(), x->items.begin(), x->items.end());
  };
  s->add = [](const Value& a, const Value& b) {
    SymbolSet out = std::get<SymbolSet>(a);
    const auto& rhs = std::get<SymbolSet>(b).items;
    out.items.insert(rhs.begin(), rhs.end());
    return Value(out);
  };
  s->mul = [](const Value& a, const Value& b) {
    SymbolSet out;
    const auto& l = std::get<SymbolSet>(a).items;
    const auto& r = std::get<SymbolSet>(b).items;
    std::set_intersection(l.begin(), l.end(), r.begin(), r.end(), std::inserter(out.items, out.items.end()));
    return Value(out);
  };
  s->zero = SymbolSet{};
  s->one = SymbolSet{base};
  s->leq = [](const Value& a, const Value& b) {
    const auto& l = std::get<SymbolSet>(a).items;
    const auto& r = std::get<SymbolSet>(b).items;
    return std::includes(r.begin(), r.end(), l.begin(), l.end());
  };
  std::vector<Value> elems;
  for (std::uint32_t mask = 0; mask < (1U << universe.size()); ++mask) {
    SymbolSet x;
    for (std::size_t i = 0; i < universe.size(); ++i) {
      if (mask & (1U << i)) x.items.insert(universe[i]);
    }
    elems.emplace_back(std::move(x));
  }
  s->elements = std::move(elems);
  s->natural_leq_closed_form = s->leq;
  s->lattice = LatticeOps{s->mul, s->add, SymbolSet{}, SymbolSet{base}};
  s->read_literal = [](std::string_view t) -> std::optional<Value> {
    if (t.size() < 2 || t.front() != '{' || t.back() != '}') return std::nullopt;
    SymbolSet x;
    std::string item;
    for (char c : t.substr(1, t.size() - 2)) {
      if (c == ',') {
        if (!item.empty()) x.items.insert(item);
        item.clear();
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        item += c;
      }
    }
    if (!item.empty()) x.items.insert(item);
    return Value(x);
  };
  s->flags = {Tri::asserted, Tri::asserted, Tri::asserted, Tri::asserted};
  return s;
}

/**
 * Integers with -inf and +inf, ordinary + and x, ordered by <=. Conventions at
 * the infinities: +inf dominates -inf in +, 0 absorbs in x, otherwise x follows
 * the sign rule. Distributivity fails at mixed infinities (e.g. -1 x (inf + -inf)),
 * so the sampler only draws finite values.
 */
inline SemiringPtr int_inf_semiring() {
  auto s = std::make_shared<SemiringSpec>();
  s->name = "int-inf";
  s->contains = [](const Value& v) { return std::holds_alternative<ExtInt>(v); };
  s->add = [](const Value& x, const Value& y) {
    const auto& a = std::get<ExtInt>(x);
    const auto& b = std::get<ExtInt>(y);
    if (a.is_pos_inf() || b.is_pos_inf()) return Value(ExtInt::pos_inf());
    if (a.is_neg_inf() || b.is_neg_inf()) return Value(ExtInt::neg_inf());
    return Value(ExtInt(a.finite_value() + b.finite_value()));
  };
  s->mul = [](const Value& x, const Value& y) {
    const auto& a = std::get<ExtInt>(x);
    const auto& b = std::get<ExtInt>(y);
    const int sign = detail::sign_of(a) * detail::sign_of(b);
    if (sign == 0) return Value(ExtInt(0));
    if (!a.is_finite() || !b.is_finite()) return Value(sign > 0 ? ExtInt::pos_inf() : ExtInt::neg_inf());
    return Value(ExtInt(a.finite_value() * b.finite_value()));
  };
  s->zero = ExtInt(0);
  s->one = ExtInt(1);
  s->leq = [](const Value& a, const Value& b) { return std::get<ExtInt>(a) <= std::get<ExtInt>(b); };
  s->natural_leq_closed_form = [](const Value& x, const Value& y) {
    // Witness z with x + z = y: z = y - x between finite values, z = y for infinite y.
    const auto& a = std::get<ExtInt>(x);
    const auto& b = std::get<ExtInt>(y);
    if (b.is_pos_inf()) return true;
    if (b.is_neg_inf()) return !a.is_pos_inf();
    return a.is_finite();
  };
  s->lattice = LatticeOps{detail::numeric_min, detail::numeric_max, ExtInt::neg_inf(), ExtInt::pos_inf()};
  s->read_literal = [](std::string_view t) -> std::optional<Value> {
    if (auto x = detail::parse_ext_int(t)) return Value(*x);
    return std::nullopt;
  };
  s->interval = [](const Value& lo, const Value& hi, std::size_t limit) -> std::vector<Value> {
    const auto& l = std::get<ExtInt>(lo);
    const auto& h = std::get<ExtInt>(hi);
    if (h < l) return {};
    if (l == h) return {lo};
    if (!l.is_finite() || !h.is_finite()) {
      throw Error(ErrorCode::not_enumerable, "interval [" + l.str() + "," + h.str() + "] is infinite");
    }
    return detail::natural_range(l.finite_value(), h.finite_value(), limit);
  };
  s->sample = [](std::mt19937_64& rng) { return Value(ExtInt(std::uniform_int_distribution<long long>(-20, 20)(rng))); };
  s->flags = {Tri::asserted, Tri::denied, Tri::asserted, Tri::denied};
  return s;
}

/**
 * Finite semiring given by explicit tables. Elements are named by identifiers
 * or integers so that they can appear as literals in programs.
 */
struct TableDefinition {
  std::string name;
  std::vector<std::string> elements;
  std::string zero;
  std::string one;
  std::map<std::pair<std::string, std::string>, std::string> add;
  std::map<std::pair<std::string, std::string>, std::string> mul;
  std::vector<std::pair<std::string, std::string>> leq;
};

namespace detail {

inline bool valid_element_name(std::string_view t) {
  if (parse_int(t)) return true;
  if (t.empty() || !std::islower(static_cast<unsigned char>(t[0]))) return false;
  return std::all_of(t.begin(), t.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

inline Error table_error(const std::string& msg) { return Error(ErrorCode::table_load_error, msg); }

}  // namespace detail

/// Builds and eagerly validates a table semiring; throws TableLoadError on any law violation.
inline SemiringPtr make_table_semiring(const TableDefinition& def) {
  const std::size_t n = def.elements.size();
  if (n == 0) throw detail::table_error("table semiring has no elements");
  auto index = std::make_shared<std::unordered_map<std::string, std::size_t>>();
  for (std::size_t i = 0; i < n; ++i) {
    if (!detail::valid_element_name(def.elements[i])) throw detail::table_error("invalid element name '" + def.elements[i] + "'");
    if (!index->emplace(def.elements[i], i).second) throw detail::table_error("duplicate element '" + def.elements[i] + "'");
  }
  auto idx = [index](const std::string& e) {
    auto it = index->find(e);
    if (it == index->end()) throw detail::table_error("unknown element '" + e + "'");
    return it->second;
  };
  auto build = [&](const auto& entries, const char* op) {
    auto table = std::make_shared<std::vector<std::size_t>>(n * n, n);
    for (const auto& [args, result] : entries) table->at(idx(args.first) * n + idx(args.second)) = idx(result);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if ((*table)[a * n + b] == n) {
          throw detail::table_error(std::string("missing ") + op + " entry for " + def.elements[a] + " " + def.elements[b]);
        }
      }
    }
    return table;
  };
  auto add_table = build(def.add, "add");
  auto mul_table = build(def.mul, "mul");

  // Reflexive-transitive closure of the listed order pairs.
  auto order = std::make_shared<std::vector<char>>(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) (*order)[i * n + i] = 1;
  for (const auto& [a, b] : def.leq) (*order)[idx(a) * n + idx(b)] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if ((*order)[i * n + k] && (*order)[k * n + j]) (*order)[i * n + j] = 1;
      }
    }
  }

  auto names = std::make_shared<std::vector<std::string>>(def.elements);
  auto pos = [index](const Value& v) {
    const auto* sym = std::get_if<Symbol>(&v);
    if (!sym) throw Error(ErrorCode::value_not_in_carrier, "'" + to_string(v) + "' is not a table element");
    auto it = index->find(sym->name);
    if (it == index->end()) throw Error(ErrorCode::value_not_in_carrier, "'" + sym->name + "' is not a table element");
    return it->second;
  };

  auto s = std::make_shared<SemiringSpec>();
  s->name = def.name;
  s->contains = [index](const Value& v) {
    const auto* sym = std::get_if<Symbol>(&v);
    return sym && index->count(sym->name) > 0;
  };
  s->add = [=](const Value& a, const Value& b) { return Value(Symbol{(*names)[(*add_table)[pos(a) * n + pos(b)]]}); };
  s->mul = [=](const Value& a, const Value& b) { return Value(Symbol{(*names)[(*mul_table)[pos(a) * n + pos(b)]]}); };
  s->zero = Symbol{def.elements[idx(def.zero)]};
  s->one = Symbol{def.elements[idx(def.one)]};
  s->leq = [=](const Value& a, const Value& b) { return (*order)[pos(a) * n + pos(b)] != 0; };
  std::vector<Value> elems;
  for (const auto& e : def.elements) elems.emplace_back(Symbol{e});
  s->elements = elems;
  s->read_literal = [index](std::string_view t) -> std::optional<Value> {
    if (index->count(std::string(t)) == 0) return std::nullopt;
    return Value(Symbol{std::string(t)});
  };

  auto laws = check_semiring_laws(*s, elems);
  if (laws.verdict == Verdict::fails) throw detail::table_error("table '" + def.name + "' is not a semiring: " + laws.detail);

  s->lattice = finite_lattice(elems, s->leq);
  bool commutative = true;
  bool idempotent = true;
  for (const auto& a : elems) {
    idempotent = idempotent && s->add(a, a) == a;
    for (const auto& b : elems) commutative = commutative && s->mul(a, b) == s->mul(b, a);
  }
  s->flags.commutative_mul = tri(commutative);
  s->flags.idempotent_add = tri(idempotent);
  s->flags.complete_lattice = tri(s->lattice.has_value());
  s->flags.positively_ordered = tri(check_positively_ordered(*s, elems).verdict == Verdict::holds);
  return s;
}

/**
 * Reads the table-semiring text format:
 *
 *   semiring <name>
 *   elements e1 e2 ...
 *   zero e  /  one e
 *   add a b = c     (one line per ordered pair)
 *   mul a b = c     (one line per ordered pair)
 *   leq a b         (order pairs; reflexive and transitive pairs implied)
 *
 * `%` starts a comment.
 */
inline TableDefinition parse_table_definition(std::string_view text) {
  TableDefinition def;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool have_elements = false;
  auto err = [&](const std::string& msg) { return detail::table_error("line " + std::to_string(lineno) + ": " + msg); };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto c = line.find('%'); c != std::string::npos) line.erase(c);
    std::istringstream ls(line);
    std::vector<std::string> words;
    for (std::string w; ls >> w;) words.push_back(w);
    if (words.empty()) continue;
    const std::string& kw = words[0];
    if (kw == "semiring") {
      if (words.size() != 2) throw err("expected 'semiring <name>'");
      def.name = words[1];
    } else if (kw == "elements") {
      def.elements.assign(words.begin() + 1, words.end());
      have_elements = true;
    } else if (kw == "zero" || kw == "one") {
      if (words.size() != 2) throw err("expected '" + kw + " <element>'");
      (kw == "zero" ? def.zero : def.one) = words[1];
    } else if (kw == "add" || kw == "mul") {
      if (words.size() != 5 || words[3] != "=") throw err("expected '" + kw + " a b = c'");
      auto& table = kw == "add" ? def.add : def.mul;
      auto [it, inserted] = table.emplace(std::pair{words[1], words[2]}, words[4]);
      if (!inserted && it->second != words[4]) throw err("conflicting " + kw + " entry");
    } else if (kw == "leq") {
      if (words.size() != 3) throw err("expected 'leq a b'");
      def.leq.emplace_back(words[1], words[2]);
    } else {
      throw err("unknown directive '" + kw + "'");
    }
  }
  if (def.name.empty()) throw detail::table_error("missing 'semiring <name>' header");
  if (!have_elements) throw detail::table_error("missing 'elements' line");
  if (def.zero.empty() || def.one.empty()) throw detail::table_error("missing 'zero' or 'one'");
  return def;
}

inline SemiringPtr load_table_semiring(std::string_view text) {
  return make_table_semiring(parse_table_definition(text));
}

inline SemiringPtr load_table_semiring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_error, "cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_table_semiring(buf.str());
}

struct SemiringEntry {
  std::string syntax;
  std::string description;
};

inline std::vector<SemiringEntry> list_semirings() {
  return {
      {"bool", "Boolean <{false,true}, or, and, false, true>, false < true"},
      {"fuzzy", "fuzzy <[0,1], max, min, 0, 1> over exact rationals, <="},
      {"fuzzy-grid:N", "fuzzy semiring restricted to {0, 1/N, ..., 1} (finite)"},
      {"nat-inf", "<N u {inf}, +, x, 0, 1>, <="},
      {"nat-trunc:N", "nat-inf with values above N collapsed to inf (finite)"},
      {"opt", "optimization <N u {inf}, min, +, inf, 0>, ordered by >= on costs"},
      {"opt-trunc:N", "opt with costs above N collapsed to inf (finite)"},
      {"powerset:a,b,..", "<2^A, union, intersection, {}, A>, inclusion"},
      {"int-inf", "<Z u {-inf,+inf}, +, x, 0, 1>, <= (not positively ordered)"},
      {"table:<path>", "finite semiring loaded from a table file"},
  };
}

namespace detail {

inline long long parse_bound(std::string_view arg, std::string_view spec) {
  auto n = parse_int(arg);
  if (!n || *n < 0 || *n > 1000000) throw Error(ErrorCode::unknown_semiring, "bad parameter in '" + std::string(spec) + "'");
  return n->convert_to<long long>();
}

}  // namespace detail

/// Resolves a registry name such as `opt`, `powerset:a,b` or `table:file.sr`.
inline SemiringPtr make_semiring(std::string_view spec) {
  auto colon = spec.find(':');
  std::string_view head = spec.substr(0, colon);
  std::string_view arg = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  const bool has_arg = colon != std::string_view::npos;
  if (!has_arg) {
    if (head == "bool") return boolean_semiring();
    if (head == "fuzzy") return fuzzy_semiring();
    if (head == "nat-inf") return nat_inf_semiring();
    if (head == "opt") return opt_semiring();
    if (head == "int-inf") return int_inf_semiring();
  } else {
    if (head == "fuzzy-grid") {
      long long n = detail::parse_bound(arg, spec);
      if (n == 0) throw Error(ErrorCode::unknown_semiring, "fuzzy grid needs N >= 1");
      return fuzzy_semiring(n);
    }
    if (head == "nat-trunc") return nat_inf_semiring(detail::parse_bound(arg, spec));
    if (head == "opt-trunc") return opt_semiring(detail::parse_bound(arg, spec));
    if (head == "table") return load_table_semiring_file(std::string(arg));
    if (head == "powerset") {
      std::vector<std::string> base;
      std::string item;
      for (char c : arg) {
        if (c == ',') {
          if (!item.empty()) base.push_back(item);
          item.clear();
        } else {
          item += c;
        }
      }
      if (!item.empty()) base.push_back(item);
      return powerset_semiring(base);
    }
  }
  throw Error(ErrorCode::unknown_semiring, "unknown semiring '" + std::string(spec) + "'");
}

}  // namespace sclp

#endif  // SCLP_CATALOG_HPP
