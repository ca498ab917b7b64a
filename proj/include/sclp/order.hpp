#ifndef SCLP_ORDER_HPP
#define SCLP_ORDER_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "sclp/semiring.hpp"

namespace sclp {

/// x <=nat y iff some z has x + z = y.
inline bool natural_leq(const SemiringSpec& s, const Value& x, const Value& y) {
  if (s.natural_leq_closed_form) return s.natural_leq_closed_form(x, y);
  for (const auto& z : s.enumerate()) {
    if (s.add(x, z) == y) return true;
  }
  return false;
}

/// x <=C y iff x + y = y.
inline bool c_leq(const SemiringSpec& s, const Value& x, const Value& y) { return s.add(x, y) == y; }

enum class Verdict : std::uint8_t { holds, fails, skipped };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "pass";
    case Verdict::fails: return "fail";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

/**
 * Outcome of one property check. `lemma_consistent` is false only when a
 * cross-check that must agree by construction disagrees, which means the input
 * is not a semiring (or the checker is wrong).
 */
struct PropertyReport {
  std::string property;
  Verdict verdict = Verdict::holds;
  std::string detail;
  std::vector<Value> counterexample;
  std::optional<Value> witness;
  bool lemma_consistent = true;
};

namespace detail {

inline std::string show(std::initializer_list<Value> vs) {
  std::string out = "(";
  bool first = true;
  for (const auto& v : vs) {
    if (!first) out += ", ";
    out += to_string(v);
    first = false;
  }
  return out + ")";
}

inline PropertyReport fail(std::string property, std::string detail, std::vector<Value> cex) {
  PropertyReport r;
  r.property = std::move(property);
  r.verdict = Verdict::fails;
  r.detail = std::move(detail);
  r.counterexample = std::move(cex);
  return r;
}

inline PropertyReport pass(std::string property, std::string detail) {
  PropertyReport r;
  r.property = std::move(property);
  r.detail = std::move(detail);
  return r;
}

inline PropertyReport skip(std::string property, std::string reason) {
  PropertyReport r;
  r.property = std::move(property);
  r.verdict = Verdict::skipped;
  r.detail = std::move(reason);
  return r;
}

inline bool idempotent_on(const SemiringSpec& s, std::span<const Value> dom) {
  return std::all_of(dom.begin(), dom.end(), [&](const Value& x) { return s.add(x, x) == x; });
}

inline std::optional<std::pair<Value, Value>> antisymmetry_violation(const SemiringSpec& s,
                                                                     std::span<const Value> dom) {
  for (std::size_t i = 0; i < dom.size(); ++i) {
    for (std::size_t j = i + 1; j < dom.size(); ++j) {
      if (natural_leq(s, dom[i], dom[j]) && natural_leq(s, dom[j], dom[i])) return std::pair{dom[i], dom[j]};
    }
  }
  return std::nullopt;
}

/// Subsets to examine for lattice completeness: all when |dom| <= 12, else all pairs plus seeded samples.
inline std::vector<std::vector<Value>> lattice_subsets(std::span<const Value> dom) {
  std::vector<std::vector<Value>> out;
  const std::size_t n = dom.size();
  if (n <= 12) {
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      std::vector<Value> sub;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1U << i)) sub.push_back(dom[i]);
      }
      out.push_back(std::move(sub));
    }
    return out;
  }
  out.emplace_back();
  out.emplace_back(dom.begin(), dom.end());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) out.push_back({dom[i], dom[j]});
  }
  std::mt19937_64 rng(0x5c1f00dULL);
  std::bernoulli_distribution coin(0.5);
  for (int k = 0; k < 256; ++k) {
    std::vector<Value> sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (coin(rng)) sub.push_back(dom[i]);
    }
    out.push_back(std::move(sub));
  }
  return out;
}

/// Greatest element of `cands` under `leq`, if one exists.
template <class Leq>
std::optional<Value> greatest_of(const std::vector<Value>& cands, Leq&& leq) {
  for (const auto& g : cands) {
    if (std::all_of(cands.begin(), cands.end(), [&](const Value& c) { return leq(c, g); })) return g;
  }
  return std::nullopt;
}

/// First subset of `dom` lacking a glb or lub under `leq` (bounds searched within `dom`).
template <class Leq>
std::optional<std::vector<Value>> lattice_gap(std::span<const Value> dom, Leq&& leq) {
  auto geq = [&](const Value& a, const Value& b) { return leq(b, a); };
  for (const auto& sub : lattice_subsets(dom)) {
    std::vector<Value> lower, upper;
    for (const auto& z : dom) {
      if (std::all_of(sub.begin(), sub.end(), [&](const Value& x) { return leq(z, x); })) lower.push_back(z);
      if (std::all_of(sub.begin(), sub.end(), [&](const Value& x) { return leq(x, z); })) upper.push_back(z);
    }
    if (!greatest_of(lower, leq) || !greatest_of(upper, geq)) return sub;
  }
  return std::nullopt;
}

}  // namespace detail

/**
 * Exhaustively verifies the semiring laws and the partial-order laws of the
 * declared order on every pair and triple drawn from `dom`.
 */
inline PropertyReport check_semiring_laws(const SemiringSpec& s, std::span<const Value> dom) {
  const std::string name = "semiring-laws";
  using detail::fail;
  using detail::show;
  for (const auto& x : dom) {
    if (!s.contains(x)) return fail(name, "value outside carrier: " + to_string(x), {x});
    if (s.add(x, s.zero) != x || s.add(s.zero, x) != x) return fail(name, "zero is not the identity of +", {x});
    if (s.mul(x, s.one) != x || s.mul(s.one, x) != x) return fail(name, "one is not the identity of x", {x});
    if (s.mul(x, s.zero) != s.zero || s.mul(s.zero, x) != s.zero) return fail(name, "zero is not absorbing for x", {x});
    if (!s.leq(x, x)) return fail(name, "declared order is not reflexive at " + to_string(x), {x});
  }
  for (const auto& x : dom) {
    for (const auto& y : dom) {
      if (!s.contains(s.add(x, y)) || !s.contains(s.mul(x, y))) {
        return fail(name, "operation leaves the carrier at " + show({x, y}), {x, y});
      }
      if (s.add(x, y) != s.add(y, x)) return fail(name, "+ is not commutative at " + show({x, y}), {x, y});
      if (s.leq(x, y) && s.leq(y, x) && x != y) {
        return fail(name, "declared order is not antisymmetric at " + show({x, y}), {x, y});
      }
      for (const auto& z : dom) {
        if (s.add(s.add(x, y), z) != s.add(x, s.add(y, z))) {
          return fail(name, "+ is not associative at " + show({x, y, z}), {x, y, z});
        }
        if (s.mul(s.mul(x, y), z) != s.mul(x, s.mul(y, z))) {
          return fail(name, "x is not associative at " + show({x, y, z}), {x, y, z});
        }
        if (s.mul(x, s.add(y, z)) != s.add(s.mul(x, y), s.mul(x, z)) ||
            s.mul(s.add(y, z), x) != s.add(s.mul(y, x), s.mul(z, x))) {
          return fail(name, "x does not distribute over + at " + show({x, y, z}), {x, y, z});
        }
        if (s.leq(x, y) && s.leq(y, z) && !s.leq(x, z)) {
          return fail(name, "declared order is not transitive at " + show({x, y, z}), {x, y, z});
        }
      }
    }
  }
  return detail::pass(name, "all laws hold on " + std::to_string(dom.size()) + " values");
}

/// Law check on `count` random triples from the semiring's sampler.
inline PropertyReport check_semiring_laws_sampled(const SemiringSpec& s, std::uint64_t seed, std::size_t count) {
  if (!s.sample) return detail::skip("semiring-laws", "no sampler registered");
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Value> triple{s.sample(rng), s.sample(rng), s.sample(rng)};
    auto r = check_semiring_laws(s, triple);
    if (r.verdict == Verdict::fails) return r;
  }
  return detail::pass("semiring-laws", "all laws hold on " + std::to_string(count) + " sampled triples");
}

inline PropertyReport check_orders_coincide(const SemiringSpec& s, std::span<const Value> dom) {
  const std::string name = "orders-coincide";
  if (!detail::idempotent_on(s, dom)) return detail::skip(name, "precondition idempotent_add not met");
  for (const auto& x : dom) {
    for (const auto& y : dom) {
      if (natural_leq(s, x, y) != c_leq(s, x, y)) {
        auto r = detail::fail(name, "natural and c-orders disagree at " + detail::show({x, y}), {x, y});
        r.lemma_consistent = false;
        return r;
      }
    }
  }
  return detail::pass(name, "natural order equals c-order on all " + std::to_string(dom.size() * dom.size()) + " pairs");
}
inline PropertyReport check_orders_coincide(const SemiringSpec& s) { return check_orders_coincide(s, s.enumerate()); }

inline PropertyReport check_no_additive_inverses(const SemiringSpec& s, std::span<const Value> dom) {
  const std::string name = "no-additive-inverses";
  std::optional<std::pair<Value, Value>> inverse;
  for (const auto& x : dom) {
    if (x == s.zero) continue;
    for (const auto& y : dom) {
      if (s.add(x, y) == s.zero) {
        inverse = std::pair{x, y};
        break;
      }
    }
    if (inverse) break;
  }
  auto asym = detail::antisymmetry_violation(s, dom);
  PropertyReport r;
  if (inverse) {
    r = detail::fail(name, "additive inverses " + detail::show({inverse->first, inverse->second}), {inverse->first, inverse->second});
    r.detail += asym ? "; natural order not antisymmetric at " + detail::show({asym->first, asym->second})
                     : "; natural order unexpectedly antisymmetric";
  } else {
    r = detail::pass(name, asym ? "no inverses, but natural order not antisymmetric at " + detail::show({asym->first, asym->second})
                                : "no inverses; natural order is a partial order");
  }
  r.lemma_consistent = inverse.has_value() == asym.has_value();
  return r;
}
inline PropertyReport check_no_additive_inverses(const SemiringSpec& s) {
  return check_no_additive_inverses(s, s.enumerate());
}

namespace detail {

template <class Leq>
std::optional<std::string> monotonicity_violation(const SemiringSpec& s, std::span<const Value> dom, Leq&& leq,
                                                  std::vector<Value>& cex) {
  for (const auto& x : dom) {
    for (const auto& x2 : dom) {
      if (!leq(x, x2)) continue;
      for (const auto& b : dom) {
        if (!leq(s.add(x, b), s.add(x2, b))) {
          cex = {x, x2, b};
          return "+ not monotone at " + show({x, x2, b});
        }
        if (!leq(s.mul(x, b), s.mul(x2, b)) || !leq(s.mul(b, x), s.mul(b, x2))) {
          cex = {x, x2, b};
          return "x not monotone at " + show({x, x2, b});
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// x <= x' implies x+b <= x'+b and x*b <= x'*b, under the declared and the natural order.
inline PropertyReport check_monotone_ops(const SemiringSpec& s, std::span<const Value> dom) {
  const std::string name = "monotone-ops";
  std::vector<Value> cex;
  if (auto v = detail::monotonicity_violation(s, dom, s.leq, cex)) {
    return detail::fail(name, "declared order: " + *v, cex);
  }
  auto nat = [&](const Value& a, const Value& b) { return natural_leq(s, a, b); };
  if (auto v = detail::monotonicity_violation(s, dom, nat, cex)) {
    auto r = detail::fail(name, "natural order: " + *v, cex);
    // Monotonicity under a natural partial order is a theorem.
    r.lemma_consistent = detail::antisymmetry_violation(s, dom).has_value();
    return r;
  }
  return detail::pass(name, "+ and x monotone under declared and natural orders");
}
inline PropertyReport check_monotone_ops(const SemiringSpec& s) { return check_monotone_ops(s, s.enumerate()); }

/// zero is below every value of the declared order and both operations are monotone.
inline PropertyReport check_positively_ordered(const SemiringSpec& s, std::span<const Value> dom) {
  const std::string name = "positively-ordered";
  for (const auto& x : dom) {
    if (!s.leq(s.zero, x)) {
      return detail::fail(name, to_string(x) + " lies below the zero element " + to_string(s.zero), {x});
    }
  }
  std::vector<Value> cex;
  if (auto v = detail::monotonicity_violation(s, dom, s.leq, cex)) return detail::fail(name, *v, cex);
  return detail::pass(name, "zero is least and operations are monotone");
}
inline PropertyReport check_positively_ordered(const SemiringSpec& s) {
  if (s.is_finite()) return check_positively_ordered(s, s.enumerate());
  switch (s.flags.positively_ordered) {
    case Tri::asserted: return detail::pass("positively-ordered", "by registered closed form");
    case Tri::denied: return detail::fail("positively-ordered", "by registered closed form: values below zero exist", {});
    case Tri::unknown: break;
  }
  throw Error(ErrorCode::not_enumerable, "cannot decide positive order for '" + s.name + "'");
}

/// Every examined subset has a glb and a lub under the declared order.
inline PropertyReport check_complete_lattice(const SemiringSpec& s, std::span<const Value> dom) {
  const std::string name = "complete-lattice";
  if (auto gap = detail::lattice_gap(dom, s.leq)) {
    std::string shown = "{";
    for (std::size_t i = 0; i < gap->size(); ++i) shown += (i ? "," : "") + to_string((*gap)[i]);
    return detail::fail(name, "no glb/lub for " + shown + "}; no top absorbing for + is guaranteed", *gap);
  }
  std::vector<Value> all(dom.begin(), dom.end());
  auto top = detail::greatest_of(all, s.leq);
  PropertyReport r = detail::pass(name, "complete lattice");
  r.witness = top;
  bool absorbing = std::all_of(dom.begin(), dom.end(), [&](const Value& x) { return s.add(*top, x) == *top; });
  r.detail += ", top = " + to_string(*top) + (absorbing ? " (absorbing for +)" : " (not absorbing for +)");
  return r;
}
inline PropertyReport check_complete_lattice(const SemiringSpec& s) {
  return check_complete_lattice(s, s.enumerate());
}

/// If the natural order is a partial order, zero is its unique least element.
inline PropertyReport check_natural_bottom_is_zero(const SemiringSpec& s, std::span<const Value> dom) {
  const std::string name = "natural-bottom-is-zero";
  if (detail::antisymmetry_violation(s, dom)) return detail::skip(name, "precondition naturally-ordered not met");
  for (const auto& x : dom) {
    if (!natural_leq(s, s.zero, x)) {
      auto r = detail::fail(name, "zero not below " + to_string(x), {x});
      r.lemma_consistent = false;
      return r;
    }
    if (x != s.zero && natural_leq(s, x, s.zero)) {
      auto r = detail::fail(name, to_string(x) + " below zero", {x});
      r.lemma_consistent = false;
      return r;
    }
  }
  return detail::pass(name, "zero is the natural-order bottom");
}

/// In a naturally ordered semiring the natural top is exactly the +-absorbing element.
inline PropertyReport check_natural_top_absorbing(const SemiringSpec& s, std::span<const Value> dom) {
  const std::string name = "natural-top-iff-absorbing";
  if (detail::antisymmetry_violation(s, dom)) return detail::skip(name, "precondition naturally-ordered not met");
  std::vector<Value> all(dom.begin(), dom.end());
  auto top = detail::greatest_of(all, [&](const Value& a, const Value& b) { return natural_leq(s, a, b); });
  std::optional<Value> absorbing;
  for (const auto& t : dom) {
    if (std::all_of(dom.begin(), dom.end(), [&](const Value& x) { return s.add(t, x) == t; })) absorbing = t;
  }
  if (top != absorbing) {
    auto r = detail::fail(name, "natural top and +-absorbing element differ", {});
    r.lemma_consistent = false;
    return r;
  }
  PropertyReport r = detail::pass(name, top ? "natural top " + to_string(*top) + " is absorbing for +"
                                            : "no natural top and no absorbing element");
  r.witness = top;
  return r;
}

/// Idempotent + implies the natural order is a partial order.
inline PropertyReport check_idempotent_naturally_ordered(const SemiringSpec& s, std::span<const Value> dom) {
  const std::string name = "idempotent-implies-natural-order";
  if (!detail::idempotent_on(s, dom)) return detail::skip(name, "precondition idempotent_add not met");
  if (auto v = detail::antisymmetry_violation(s, dom)) {
    auto r = detail::fail(name, "natural order not antisymmetric at " + detail::show({v->first, v->second}), {v->first, v->second});
    r.lemma_consistent = false;
    return r;
  }
  return detail::pass(name, "natural order is a partial order");
}

/// Idempotent with a natural top implies the natural order is a complete lattice.
inline PropertyReport check_natural_complete_lattice(const SemiringSpec& s, std::span<const Value> dom) {
  const std::string name = "natural-complete-lattice";
  if (!detail::idempotent_on(s, dom)) return detail::skip(name, "precondition idempotent_add not met");
  auto nat = [&](const Value& a, const Value& b) { return natural_leq(s, a, b); };
  std::vector<Value> all(dom.begin(), dom.end());
  if (!detail::greatest_of(all, nat)) return detail::skip(name, "precondition natural top not met");
  if (detail::lattice_gap(dom, nat)) {
    auto r = detail::fail(name, "natural order is not a complete lattice", {});
    r.lemma_consistent = false;
    return r;
  }
  return detail::pass(name, "natural order is a complete lattice");
}

/// All order-theoretic checks for a finite carrier, in a fixed order.
inline std::vector<PropertyReport> order_theory_suite(const SemiringSpec& s, std::span<const Value> dom) {
  return {check_semiring_laws(s, dom),           check_no_additive_inverses(s, dom),
          check_monotone_ops(s, dom),            check_natural_bottom_is_zero(s, dom),
          check_natural_top_absorbing(s, dom),   check_orders_coincide(s, dom),
          check_idempotent_naturally_ordered(s, dom), check_natural_complete_lattice(s, dom),
          check_positively_ordered(s, dom),      check_complete_lattice(s, dom)};
}
inline std::vector<PropertyReport> order_theory_suite(const SemiringSpec& s) {
  return order_theory_suite(s, s.enumerate());
}

}  // namespace sclp

#endif  // SCLP_ORDER_HPP
