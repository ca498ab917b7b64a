#ifndef SCLP_OPERATORS_HPP
#define SCLP_OPERATORS_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sclp/error.hpp"
#include "sclp/interpretation.hpp"
#include "sclp/program.hpp"
#include "sclp/semiring.hpp"
#include "sclp/value.hpp"

namespace sclp {

inline constexpr std::size_t default_interval_cap = 1'000'000;

namespace detail {

inline void require_same_universe(const Interpretation& a, const Interpretation& b) {
  if (!a.same_universe(b)) throw Error(ErrorCode::universe_mismatch, "interpretations range over different atoms");
}

inline void require_universe(const Program& p, const Interpretation& I) {
  if (!(I.universe() == p.universe() || *I.universe() == *p.universe())) {
    throw Error(ErrorCode::universe_mismatch, "interpretation does not range over the program's atoms");
  }
}

}  // namespace detail

/// Pointwise declared order.
inline bool interp_leq(const SemiringSpec& s, const Interpretation& a, const Interpretation& b) {
  detail::require_same_universe(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!s.leq(a[i], b[i])) return false;
  }
  return true;
}

/// Precision order: (x1,y1) <=_p (x2,y2) iff x1 <= x2 and y2 <= y1.
inline bool precision_leq(const SemiringSpec& s, const ApproximationPair& a, const ApproximationPair& b) {
  return interp_leq(s, a.lower, b.lower) && interp_leq(s, b.upper, a.upper);
}

inline bool is_consistent(const SemiringSpec& s, const ApproximationPair& p) { return interp_leq(s, p.lower, p.upper); }

/// Positive atoms and constants read `pos`; `not a` is one iff neg(a) is zero.
inline Value eval_literal(const SemiringSpec& s, const Interpretation& pos, const Interpretation& neg,
                          const Literal& lit) {
  switch (lit.kind) {
    case Literal::Kind::positive: return pos[lit.atom];
    case Literal::Kind::negated: return neg[lit.atom] == s.zero ? s.one : s.zero;
    case Literal::Kind::constant: break;
  }
  return lit.value;
}

inline Value eval_gatom(const SemiringSpec& s, const Interpretation& pos, const Interpretation& neg,
                        const GeneralizedAtom& g) {
  detail::require_same_universe(pos, neg);
  if (const auto* p = std::get_if<PositiveAtom>(&g)) return pos.at(p->atom);
  if (const auto* n = std::get_if<NegatedAtom>(&g)) return neg.at(n->atom) == s.zero ? s.one : s.zero;
  return std::get<Constant>(g).value;
}

/// Left-to-right product; the empty body is one.
inline Value eval_body(const SemiringSpec& s, const Interpretation& pos, const Interpretation& neg,
                       std::span<const Literal> body) {
  Value acc = s.one;
  for (const auto& lit : body) acc = s.mul(acc, eval_literal(s, pos, neg, lit));
  return acc;
}

inline Value eval_body(const SemiringSpec& s, const Interpretation& pos, const Interpretation& neg,
                       std::span<const GeneralizedAtom> body) {
  Value acc = s.one;
  for (const auto& g : body) acc = s.mul(acc, eval_gatom(s, pos, neg, g));
  return acc;
}

namespace detail {

/// Sum over defining clauses in document order; zero for undefined atoms.
inline Interpretation consequence(const Program& p, const Interpretation& pos, const Interpretation& neg) {
  const auto& s = p.semiring();
  std::vector<Value> out;
  out.reserve(pos.size());
  for (std::size_t h = 0; h < pos.size(); ++h) {
    Value acc = s.zero;
    for (std::size_t c : p.clauses_for_index(h)) acc = s.add(acc, eval_body(s, pos, neg, p.body(c)));
    out.push_back(std::move(acc));
  }
  return Interpretation(pos.universe(), std::move(out));
}

}  // namespace detail

/// Immediate consequence operator; negated atoms read the same interpretation.
inline Interpretation tp(const Program& p, const Interpretation& I) {
  detail::require_universe(p, I);
  return detail::consequence(p, I, I);
}

/// Fitting's four-valued approximator.
inline ApproximationPair phi(const Program& p, const ApproximationPair& pair) {
  detail::require_universe(p, pair.lower);
  detail::require_universe(p, pair.upper);
  return {detail::consequence(p, pair.lower, pair.upper), detail::consequence(p, pair.upper, pair.lower)};
}

/**
 * Ultimate approximator: pointwise glb and lub of tp over every J with
 * lower <= J <= upper. The interval is the product of per-atom intervals.
 */
inline ApproximationPair ultimate(const Program& p, const ApproximationPair& pair,
                                  std::size_t cap = default_interval_cap) {
  const auto& s = p.semiring();
  detail::require_universe(p, pair.lower);
  detail::require_universe(p, pair.upper);
  if (!is_consistent(s, pair)) throw Error(ErrorCode::inconsistent_pair, "ultimate approximator needs lower <= upper");
  const auto& lat = s.lattice_ops();
  const std::size_t n = pair.lower.size();

  std::vector<std::vector<Value>> ranges(n);
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    ranges[i] = interval_values(s, pair.lower[i], pair.upper[i], cap);
    if (count > cap / ranges[i].size()) {
      throw Error(ErrorCode::interval_too_large, "interval holds more than " + std::to_string(cap) + " interpretations");
    }
    count *= ranges[i].size();
  }

  std::vector<Value> lo(n, lat.top), hi(n, lat.bottom);
  std::vector<std::size_t> digit(n, 0);
  Interpretation J = pair.lower;
  for (std::size_t i = 0; i < n; ++i) J[i] = ranges[i][0];
  for (;;) {
    Interpretation image = detail::consequence(p, J, J);
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = lat.meet(lo[i], image[i]);
      hi[i] = lat.join(hi[i], image[i]);
    }
    std::size_t k = 0;
    while (k < n && ++digit[k] == ranges[k].size()) {
      digit[k] = 0;
      J[k] = ranges[k][0];
      ++k;
    }
    if (k == n) break;
    J[k] = ranges[k][digit[k]];
  }
  return {Interpretation(pair.lower.universe(), std::move(lo)), Interpretation(pair.lower.universe(), std::move(hi))};
}

/**
 * Per head, the sum of clause bodies is below the head's value. Negated atoms
 * read I itself, which extends the definition beyond positive programs.
 */
inline bool is_semiring_model(const Program& p, const Interpretation& I) {
  detail::require_universe(p, I);
  const auto& s = p.semiring();
  std::vector<Value> sums(I.size(), s.zero);
  for (std::size_t c = 0; c < p.clauses().size(); ++c) {
    auto head = *p.universe()->index_of(p.clauses()[c].head);
    sums[head] = s.add(sums[head], eval_body(s, I, I, p.body(c)));
  }
  for (std::size_t i = 0; i < I.size(); ++i) {
    if (!s.leq(sums[i], I[i])) return false;
  }
  return true;
}

/// Every clause on its own: body value <= head value.
inline bool is_traditional_model(const Program& p, const Interpretation& I) {
  detail::require_universe(p, I);
  const auto& s = p.semiring();
  for (std::size_t c = 0; c < p.clauses().size(); ++c) {
    auto head = *p.universe()->index_of(p.clauses()[c].head);
    if (!s.leq(eval_body(s, I, I, p.body(c)), I[head])) return false;
  }
  return true;
}

/// Pointwise glb; the empty family yields the all-top interpretation.
inline Interpretation model_intersection(const SemiringSpec& s, const std::shared_ptr<const AtomUniverse>& universe,
                                         std::span<const Interpretation> models) {
  const auto& lat = s.lattice_ops();
  Interpretation out = Interpretation::constant(universe, lat.top);
  for (const auto& m : models) {
    if (!(m.universe() == universe || *m.universe() == *universe)) {
      throw Error(ErrorCode::universe_mismatch, "models range over different atoms");
    }
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = lat.meet(out[i], m[i]);
  }
  return out;
}

inline Interpretation all_bottom(const Program& p) {
  return Interpretation::constant(p.universe(), p.semiring().lattice_ops().bottom);
}

inline Interpretation all_top(const Program& p) {
  return Interpretation::constant(p.universe(), p.semiring().lattice_ops().top);
}

/// The least element of the precision order: (all-bottom, all-top).
inline ApproximationPair bottom_pair(const Program& p) { return {all_bottom(p), all_top(p)}; }

}  // namespace sclp

#endif  // SCLP_OPERATORS_HPP
