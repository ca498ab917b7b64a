#ifndef SCLP_FIXPOINT_HPP
#define SCLP_FIXPOINT_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sclp/error.hpp"

namespace sclp {

inline constexpr std::size_t default_iteration_cap = 10'000;
/// Consecutive strict increases of one coordinate after which a cap error reports suspected divergence.
inline constexpr std::size_t divergence_streak = 50;

/**
 * Kleene iterates x0 = bottom, x1 = op(x0), ... up to and including the first
 * repeat. `iterations_used` is the index of the first iterate equal to the
 * fixpoint (at least 1), so steps[1..iterations_used] are the columns a paper
 * style table shows.
 */
template <class T>
struct Trace {
  std::vector<T> steps;
  bool converged = false;
  std::size_t iterations_used = 0;
  std::size_t cap = default_iteration_cap;
};

template <class T>
struct FixpointRun {
  T value;
  Trace<T> trace;
};

/**
 * Least fixpoint by Kleene iteration from `bottom`.
 *
 * `leq` is the order the chain must ascend in; a step that is not above its
 * predecessor raises NonAscendingChain. `rises(prev, next)` reports, per
 * coordinate, whether that coordinate strictly increased; it feeds the
 * divergence hint attached to IterationCapExceeded.
 */
template <class T, class Op, class Leq, class Rises>
FixpointRun<T> kleene_lfp(Op&& op, T bottom, std::size_t cap, Leq&& leq, Rises&& rises, bool keep_trace = true) {
  Trace<T> trace;
  trace.cap = cap;
  if (keep_trace) trace.steps.push_back(bottom);
  T current = std::move(bottom);
  std::vector<std::size_t> streak;
  std::size_t last_change = 0;
  for (std::size_t i = 1; i <= cap; ++i) {
    T next = op(current);
    if (next == current) {
      if (keep_trace) trace.steps.push_back(next);
      trace.converged = true;
      trace.iterations_used = std::max<std::size_t>(last_change, 1);
      return {std::move(next), std::move(trace)};
    }
    if (!leq(current, next)) {
      throw Error(ErrorCode::non_ascending_chain,
                  "iterate " + std::to_string(i) + " is not above iterate " + std::to_string(i - 1));
    }
    std::vector<bool> up = rises(current, next);
    if (streak.size() < up.size()) streak.resize(up.size(), 0);
    for (std::size_t k = 0; k < up.size(); ++k) streak[k] = up[k] ? streak[k] + 1 : 0;
    last_change = i;
    if (keep_trace) trace.steps.push_back(next);
    current = std::move(next);
  }
  bool diverging = std::any_of(streak.begin(), streak.end(), [](std::size_t n) { return n >= divergence_streak; });
  throw IterationCapExceeded(cap, diverging);
}

}  // namespace sclp

#endif  // SCLP_FIXPOINT_HPP
