#ifndef SCLP_SEMIRING_HPP
#define SCLP_SEMIRING_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sclp/error.hpp"
#include "sclp/value.hpp"

namespace sclp {

enum class Tri : std::uint8_t { unknown, asserted, denied };

inline std::string_view to_string(Tri t) {
  switch (t) {
    case Tri::asserted: return "asserted";
    case Tri::denied: return "denied";
    case Tri::unknown: break;
  }
  return "unknown";
}

inline Tri tri(bool b) { return b ? Tri::asserted : Tri::denied; }

struct SemiringFlags {
  Tri commutative_mul = Tri::unknown;
  Tri idempotent_add = Tri::unknown;
  Tri complete_lattice = Tri::unknown;
  Tri positively_ordered = Tri::unknown;
};

using BinaryOp = std::function<Value(const Value&, const Value&)>;
using Relation = std::function<bool(const Value&, const Value&)>;

/**
 * Meet/join of the declared order. For finite carriers glb and lub of a finite
 * set are folds of the binary operations; glb of the empty set is top and lub
 * of the empty set is bottom.
 */
struct LatticeOps {
  BinaryOp meet;
  BinaryOp join;
  Value bottom;
  Value top;

  Value glb(std::span<const Value> xs) const {
    Value acc = top;
    for (const auto& x : xs) acc = meet(acc, x);
    return acc;
  }

  Value lub(std::span<const Value> xs) const {
    Value acc = bottom;
    for (const auto& x : xs) acc = join(acc, x);
    return acc;
  }
};

/**
 * A semiring together with the declared partial order used for evaluation.
 *
 * Built-ins fill in closed forms (natural order witness, interval enumeration,
 * literal reader); table semirings fill in the finite enumerator and derive
 * everything else from it. Instances are shared as SemiringPtr and never
 * mutated after construction.
 */
struct SemiringSpec {
  std::string name;
  std::function<bool(const Value&)> contains;
  BinaryOp add;
  BinaryOp mul;
  Value zero;
  Value one;
  Relation leq;

  /// All carrier values, when the carrier is finite.
  std::optional<std::vector<Value>> elements;
  /// Closed-form decision of the natural order, when registered.
  std::function<bool(const Value&, const Value&)> natural_leq_closed_form;
  std::optional<LatticeOps> lattice;
  std::function<std::optional<Value>(std::string_view)> read_literal;
  /// Values v with lo <= v <= hi; throws NotEnumerable or IntervalTooLarge.
  std::function<std::vector<Value>(const Value&, const Value&, std::size_t)> interval;
  /// Random carrier value for sampled law checks on infinite carriers.
  std::function<Value(std::mt19937_64&)> sample;
  SemiringFlags flags;

  bool is_finite() const noexcept { return elements.has_value(); }

  const std::vector<Value>& enumerate() const {
    if (!elements) throw Error(ErrorCode::not_enumerable, "semiring '" + name + "' has no finite enumerator");
    return *elements;
  }

  const LatticeOps& lattice_ops() const {
    if (!lattice) throw Error(ErrorCode::no_glb, "declared order of '" + name + "' is not a lattice");
    return *lattice;
  }

  void require_member(const Value& v) const {
    if (!contains(v)) {
      throw Error(ErrorCode::value_not_in_carrier, "'" + to_string(v) + "' is not in the carrier of " + name);
    }
  }
};

using SemiringPtr = std::shared_ptr<const SemiringSpec>;

/// Values in [lo, hi] under the declared order, in ascending enumeration order.
inline std::vector<Value> interval_values(const SemiringSpec& s, const Value& lo, const Value& hi,
                                          std::size_t limit) {
  if (s.interval) return s.interval(lo, hi, limit);
  std::vector<Value> out;
  for (const auto& v : s.enumerate()) {
    if (s.leq(lo, v) && s.leq(v, hi)) {
      out.push_back(v);
      if (out.size() > limit) {
        throw Error(ErrorCode::interval_too_large,
                    "interval exceeds cap " + std::to_string(limit));
      }
    }
  }
  return out;
}

/**
 * Builds meet/join tables for a finite poset. Returns nullopt when some pair
 * lacks a glb or lub, or the order has no bottom or top.
 */
inline std::optional<LatticeOps> finite_lattice(const std::vector<Value>& elems, const Relation& leq) {
  const std::size_t n = elems.size();
  if (n == 0) return std::nullopt;
  auto greatest = [&](const std::vector<std::size_t>& cands) -> std::optional<std::size_t> {
    for (std::size_t g : cands) {
      bool ok = true;
      for (std::size_t c : cands) {
        if (!leq(elems[c], elems[g])) {
          ok = false;
          break;
        }
      }
      if (ok) return g;
    }
    return std::nullopt;
  };
  auto least = [&](const std::vector<std::size_t>& cands) -> std::optional<std::size_t> {
    for (std::size_t g : cands) {
      bool ok = true;
      for (std::size_t c : cands) {
        if (!leq(elems[g], elems[c])) {
          ok = false;
          break;
        }
      }
      if (ok) return g;
    }
    return std::nullopt;
  };

  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  auto bottom = least(all);
  auto top = greatest(all);
  if (!bottom || !top) return std::nullopt;

  auto meet_table = std::make_shared<std::vector<std::size_t>>(n * n);
  auto join_table = std::make_shared<std::vector<std::size_t>>(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::size_t> lower, upper;
      for (std::size_t z = 0; z < n; ++z) {
        if (leq(elems[z], elems[a]) && leq(elems[z], elems[b])) lower.push_back(z);
        if (leq(elems[a], elems[z]) && leq(elems[b], elems[z])) upper.push_back(z);
      }
      auto m = greatest(lower);
      auto j = least(upper);
      if (!m || !j) return std::nullopt;
      (*meet_table)[a * n + b] = *m;
      (*join_table)[a * n + b] = *j;
    }
  }

  auto index = std::make_shared<std::map<Value, std::size_t>>();
  for (std::size_t i = 0; i < n; ++i) index->emplace(elems[i], i);
  auto values = std::make_shared<std::vector<Value>>(elems);
  auto lookup = [index](const Value& v) {
    auto it = index->find(v);
    if (it == index->end()) throw Error(ErrorCode::value_not_in_carrier, "'" + to_string(v) + "' is not a table element");
    return it->second;
  };

  LatticeOps ops;
  ops.meet = [=](const Value& a, const Value& b) { return (*values)[(*meet_table)[lookup(a) * n + lookup(b)]]; };
  ops.join = [=](const Value& a, const Value& b) { return (*values)[(*join_table)[lookup(a) * n + lookup(b)]]; };
  ops.bottom = elems[*bottom];
  ops.top = elems[*top];
  return ops;
}

}  // namespace sclp

#endif  // SCLP_SEMIRING_HPP
