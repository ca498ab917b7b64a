#ifndef SCLP_SEMANTICS_HPP
#define SCLP_SEMANTICS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "sclp/error.hpp"
#include "sclp/fixpoint.hpp"
#include "sclp/interpretation.hpp"
#include "sclp/operators.hpp"
#include "sclp/program.hpp"
#include "sclp/semiring.hpp"

namespace sclp {

enum class SemanticsKind : std::uint8_t { minimal_model, kripke_kleene, well_founded, stable_set, stable_check };
enum class ApproximatorKind : std::uint8_t { fitting, ultimate, none };

inline std::string_view to_string(SemanticsKind k) {
  switch (k) {
    case SemanticsKind::minimal_model: return "minimal_model";
    case SemanticsKind::kripke_kleene: return "kripke_kleene";
    case SemanticsKind::well_founded: return "well_founded";
    case SemanticsKind::stable_set: return "stable_set";
    case SemanticsKind::stable_check: break;
  }
  return "stable_check";
}

inline std::string_view to_string(ApproximatorKind k) {
  switch (k) {
    case ApproximatorKind::fitting: return "fitting";
    case ApproximatorKind::ultimate: return "ultimate";
    case ApproximatorKind::none: break;
  }
  return "none";
}

struct EvalOptions {
  std::size_t max_iterations = default_iteration_cap;
  std::size_t interval_cap = default_interval_cap;
  /// Upper bound on candidates tried by stable-fixpoint enumeration.
  std::size_t search_cap = 1U << 20;
  /// Allow Fitting's operator on semirings not known to be positively ordered.
  bool unsafe_fitting = false;
  bool keep_trace = true;
};

using TraceStep = std::variant<Interpretation, ApproximationPair>;

struct FixpointTrace {
  std::vector<TraceStep> steps;
  bool converged = false;
  std::size_t iterations_used = 0;
  std::size_t cap = default_iteration_cap;
};

using SemanticsValue = std::variant<Interpretation, ApproximationPair, std::vector<ApproximationPair>, bool>;

struct SemanticsResult {
  SemanticsKind kind;
  ApproximatorKind approximator;
  std::string semiring;
  SemanticsValue value;
  /// Pair kinds: lower == upper. Stable sets: every member exact.
  bool exact = true;
  FixpointTrace trace;
  std::vector<std::string> notes;
};

inline constexpr std::string_view not_an_approximator_note =
    "not an approximator: Fitting's operator on a semiring that is not positively ordered";
inline constexpr std::string_view value_closure_note =
    "stable search restricted to the value closure of the program constants";

namespace detail {

template <class T>
FixpointTrace erase_trace(Trace<T>&& t) {
  FixpointTrace out;
  out.converged = t.converged;
  out.iterations_used = t.iterations_used;
  out.cap = t.cap;
  out.steps.reserve(t.steps.size());
  for (auto& s : t.steps) out.steps.emplace_back(std::move(s));
  return out;
}

inline auto interp_rises(const SemiringSpec& s) {
  return [&s](const Interpretation& a, const Interpretation& b) {
    std::vector<bool> up(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) up[i] = a[i] != b[i] && s.leq(a[i], b[i]);
    return up;
  };
}

inline auto pair_rises(const SemiringSpec& s) {
  return [&s](const ApproximationPair& a, const ApproximationPair& b) {
    std::vector<bool> up(a.lower.size());
    for (std::size_t i = 0; i < up.size(); ++i) {
      up[i] = (a.lower[i] != b.lower[i] && s.leq(a.lower[i], b.lower[i])) ||
              (a.upper[i] != b.upper[i] && s.leq(b.upper[i], a.upper[i]));
    }
    return up;
  };
}

inline auto interp_order(const SemiringSpec& s) {
  return [&s](const Interpretation& a, const Interpretation& b) { return interp_leq(s, a, b); };
}

inline auto pair_order(const SemiringSpec& s) {
  return [&s](const ApproximationPair& a, const ApproximationPair& b) { return precision_leq(s, a, b); };
}

/// Fails unless the chosen approximator may be used on this semiring; returns notes to attach.
inline std::vector<std::string> admit(const Program& p, ApproximatorKind kind, const EvalOptions& opts) {
  std::vector<std::string> notes;
  const auto& s = p.semiring();
  if (kind == ApproximatorKind::fitting && s.flags.positively_ordered != Tri::asserted) {
    if (!opts.unsafe_fitting) {
      throw Error(ErrorCode::not_positively_ordered,
                  "semiring '" + s.name + "' is not positively ordered; Fitting's operator does not approximate tp "
                  "(use the ultimate approximator, or --unsafe-fitting)");
    }
    notes.emplace_back(not_an_approximator_note);
  }
  if (kind == ApproximatorKind::none) throw std::invalid_argument("an approximator is required");
  s.lattice_ops();
  return notes;
}

inline ApproximationPair apply(const Program& p, ApproximatorKind kind, const ApproximationPair& pair,
                               const EvalOptions& opts) {
  return kind == ApproximatorKind::ultimate ? ultimate(p, pair, opts.interval_cap) : phi(p, pair);
}

inline Interpretation inner_lfp(const Program& p, const std::function<Interpretation(const Interpretation&)>& op,
                                Interpretation start, const EvalOptions& opts) {
  const auto& s = p.semiring();
  return kleene_lfp<Interpretation>(op, std::move(start), opts.max_iterations, interp_order(s), interp_rises(s),
                                    false)
      .value;
}

/// lfp of J -> A_l(J, upper).
inline Interpretation stable_lower(const Program& p, ApproximatorKind kind, const Interpretation& upper,
                                   const EvalOptions& opts) {
  if (kind == ApproximatorKind::ultimate) {
    return inner_lfp(
        p, [&](const Interpretation& J) { return ultimate(p, {J, upper}, opts.interval_cap).lower; }, all_bottom(p),
        opts);
  }
  return inner_lfp(p, [&](const Interpretation& J) { return consequence(p, J, upper); }, all_bottom(p), opts);
}

/**
 * lfp of J -> A_u(lower, J). Fitting's upper component with frozen lower is
 * J -> consequence(J, lower), iterated from all-bottom. The ultimate upper
 * operator is only defined on J >= lower, so it is iterated from lower.
 */
inline Interpretation stable_upper(const Program& p, ApproximatorKind kind, const Interpretation& lower,
                                   const EvalOptions& opts) {
  if (kind == ApproximatorKind::ultimate) {
    return inner_lfp(
        p, [&](const Interpretation& J) { return ultimate(p, {lower, J}, opts.interval_cap).upper; }, lower, opts);
  }
  return inner_lfp(p, [&](const Interpretation& J) { return consequence(p, J, lower); }, all_bottom(p), opts);
}

inline bool all_exact(const std::vector<ApproximationPair>& pairs) {
  return std::all_of(pairs.begin(), pairs.end(), [](const ApproximationPair& q) { return q.is_exact(); });
}

}  // namespace detail

/// Least fixpoint of tp from all-bottom; positive programs over complete lattices only.
inline SemanticsResult minimal_model(const Program& p, const EvalOptions& opts = {}) {
  const auto& s = p.semiring();
  if (!p.is_positive()) throw Error(ErrorCode::not_positive_program, "minimal model needs a program without negation");
  if (s.flags.complete_lattice != Tri::asserted) {
    throw Error(ErrorCode::not_complete_lattice, "semiring '" + s.name + "' is not declared a complete lattice");
  }
  auto run = kleene_lfp<Interpretation>([&](const Interpretation& I) { return tp(p, I); }, all_bottom(p),
                                        opts.max_iterations, detail::interp_order(s), detail::interp_rises(s),
                                        opts.keep_trace);
  return {SemanticsKind::minimal_model, ApproximatorKind::none, s.name, std::move(run.value), true,
          detail::erase_trace(std::move(run.trace)), {}};
}

/// Precision-least fixpoint of the approximator, iterated from (all-bottom, all-top).
inline SemanticsResult kripke_kleene(const Program& p, ApproximatorKind kind, const EvalOptions& opts = {}) {
  const auto& s = p.semiring();
  auto notes = detail::admit(p, kind, opts);
  auto run = kleene_lfp<ApproximationPair>([&](const ApproximationPair& A) { return detail::apply(p, kind, A, opts); },
                                           bottom_pair(p), opts.max_iterations, detail::pair_order(s),
                                           detail::pair_rises(s), opts.keep_trace);
  bool exact = run.value.is_exact();
  return {SemanticsKind::kripke_kleene, kind, s.name, std::move(run.value), exact,
          detail::erase_trace(std::move(run.trace)), std::move(notes)};
}

/// (lfp A_l(., upper), lfp A_u(lower, .)).
inline ApproximationPair stable_op(const Program& p, ApproximatorKind kind, const ApproximationPair& pair,
                                   const EvalOptions& opts = {}) {
  detail::admit(p, kind, opts);
  detail::require_universe(p, pair.lower);
  detail::require_universe(p, pair.upper);
  return {detail::stable_lower(p, kind, pair.upper, opts), detail::stable_upper(p, kind, pair.lower, opts)};
}

/// Precision-least fixpoint of the stable operator.
inline SemanticsResult well_founded(const Program& p, ApproximatorKind kind, const EvalOptions& opts = {}) {
  const auto& s = p.semiring();
  auto notes = detail::admit(p, kind, opts);
  auto run = kleene_lfp<ApproximationPair>(
      [&](const ApproximationPair& A) {
        return ApproximationPair{detail::stable_lower(p, kind, A.upper, opts),
                                 detail::stable_upper(p, kind, A.lower, opts)};
      },
      bottom_pair(p), opts.max_iterations, detail::pair_order(s), detail::pair_rises(s), opts.keep_trace);
  bool exact = run.value.is_exact();
  return {SemanticsKind::well_founded, kind, s.name, std::move(run.value), exact,
          detail::erase_trace(std::move(run.trace)), std::move(notes)};
}

inline bool is_stable_fixpoint(const Program& p, ApproximatorKind kind, const ApproximationPair& pair,
                               const EvalOptions& opts = {}) {
  return stable_op(p, kind, pair, opts) == pair;
}

inline SemanticsResult stable_check(const Program& p, ApproximatorKind kind, const ApproximationPair& pair,
                                    const EvalOptions& opts = {}) {
  auto notes = detail::admit(p, kind, opts);
  bool stable = is_stable_fixpoint(p, kind, pair, opts);
  return {SemanticsKind::stable_check, kind, p.semiring().name, stable, pair.is_exact(), {}, std::move(notes)};
}

/// Program constants with zero and one, closed under + and x for `rounds` rounds.
inline std::vector<Value> value_closure(const Program& p, std::size_t rounds = 4) {
  const auto& s = p.semiring();
  std::set<Value> vals{s.zero, s.one};
  for (std::size_t c = 0; c < p.clauses().size(); ++c) {
    for (const auto& lit : p.body(c)) {
      if (lit.kind == Literal::Kind::constant) vals.insert(lit.value);
    }
  }
  for (std::size_t r = 0; r < rounds; ++r) {
    std::vector<Value> cur(vals.begin(), vals.end());
    for (const auto& a : cur) {
      for (const auto& b : cur) {
        vals.insert(s.add(a, b));
        vals.insert(s.mul(a, b));
      }
    }
  }
  return {vals.begin(), vals.end()};
}

namespace detail {

inline bool pair_before(const ApproximationPair& a, const ApproximationPair& b) {
  if (a.lower.values() != b.lower.values()) return a.lower.values() < b.lower.values();
  return a.upper.values() < b.upper.values();
}

/**
 * Fitting's lower operator reads its frozen argument only through which
 * negated atoms are zero. A stable fixpoint (x, y) therefore satisfies
 * x = L(zeros(y)) and y = L(zeros(x)); trying every zero pattern Z for y
 * finds all of them exactly.
 */
inline std::vector<ApproximationPair> fitting_stable_search(const Program& p, const EvalOptions& opts) {
  const auto& s = p.semiring();
  const auto negated = p.negated_atoms();
  if (negated.size() >= 63 || (std::size_t{1} << negated.size()) > opts.search_cap) {
    throw Error(ErrorCode::search_space_too_large, std::to_string(negated.size()) +
                                                       " negated atoms exceed the stable search cap of " +
                                                       std::to_string(opts.search_cap) + " candidates");
  }
  auto pattern_of = [&](const Interpretation& I) {
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < negated.size(); ++k) {
      if (I[negated[k]] == s.zero) mask |= std::uint64_t{1} << k;
    }
    return mask;
  };
  std::vector<ApproximationPair> found;
  Interpretation y = Interpretation::constant(p.universe(), s.one);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << negated.size()); ++mask) {
    for (std::size_t k = 0; k < negated.size(); ++k) y[negated[k]] = (mask >> k) & 1U ? s.zero : s.one;
    Interpretation x = stable_lower(p, ApproximatorKind::fitting, y, opts);
    Interpretation upper = stable_upper(p, ApproximatorKind::fitting, x, opts);
    if (pattern_of(upper) == mask && interp_leq(s, x, upper)) found.push_back({std::move(x), std::move(upper)});
  }
  return found;
}

/// Tries every candidate upper bound y and keeps those reproduced by the stable operator.
inline std::vector<ApproximationPair> ultimate_stable_search(const Program& p, const std::vector<Value>& candidates,
                                                             const EvalOptions& opts) {
  const auto& s = p.semiring();
  const std::size_t n = p.atoms().size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > opts.search_cap / candidates.size()) {
      throw Error(ErrorCode::search_space_too_large,
                  std::to_string(candidates.size()) + " values over " + std::to_string(n) +
                      " atoms exceed the stable search cap of " + std::to_string(opts.search_cap) + " candidates");
    }
    total *= candidates.size();
  }
  std::vector<ApproximationPair> found;
  std::vector<std::size_t> digit(n, 0);
  Interpretation y = Interpretation::constant(p.universe(), candidates.front());
  for (std::size_t t = 0; t < total; ++t) {
    try {
      Interpretation x = stable_lower(p, ApproximatorKind::ultimate, y, opts);
      if (interp_leq(s, x, y) && stable_upper(p, ApproximatorKind::ultimate, x, opts) == y) found.push_back({x, y});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::inconsistent_pair && e.code() != ErrorCode::non_ascending_chain) throw;
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (++digit[k] < candidates.size()) {
        y[k] = candidates[digit[k]];
        break;
      }
      digit[k] = 0;
      y[k] = candidates[0];
    }
  }
  return found;
}

}  // namespace detail

/**
 * All consistent stable fixpoints. Fitting's operator is searched exactly over
 * zero patterns of negated atoms; the ultimate operator over candidate upper
 * bounds drawn from the carrier (finite semirings) or the value closure.
 */
inline SemanticsResult enumerate_stable_fixpoints(const Program& p, ApproximatorKind kind,
                                                  const EvalOptions& opts = {}) {
  const auto& s = p.semiring();
  auto notes = detail::admit(p, kind, opts);
  std::vector<ApproximationPair> found;
  if (kind == ApproximatorKind::fitting) {
    found = detail::fitting_stable_search(p, opts);
  } else {
    std::vector<Value> candidates;
    if (s.is_finite()) {
      candidates = s.enumerate();
    } else {
      candidates = value_closure(p);
      notes.emplace_back(value_closure_note);
    }
    found = detail::ultimate_stable_search(p, candidates, opts);
  }
  std::sort(found.begin(), found.end(), detail::pair_before);
  bool exact = detail::all_exact(found);
  return {SemanticsKind::stable_set, kind, s.name, std::move(found), exact, {}, std::move(notes)};
}

}  // namespace sclp

#endif  // SCLP_SEMANTICS_HPP
