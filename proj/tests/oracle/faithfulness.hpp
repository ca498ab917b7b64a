// Compares the engine's Fitting-based well-founded and stable fixpoints on
// Boolean programs with the three-valued oracle.
#ifndef SCLP_TESTS_ORACLE_FAITHFULNESS_HPP
#define SCLP_TESTS_ORACLE_FAITHFULNESS_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sclp/sclp.hpp"
#include "three_valued.hpp"

namespace oracle {

inline ThreeValued to_three_valued(const sclp::ApproximationPair& pair) {
  ThreeValued out(pair.lower.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const bool lo = std::get<bool>(pair.lower[i]);
    const bool hi = std::get<bool>(pair.upper[i]);
    out[i] = lo ? 2 : (hi ? 1 : 0);
  }
  return out;
}

inline std::string show(const ThreeValued& v) {
  std::string out;
  for (int x : v) out += "f?t"[x];
  return out;
}

/// Empty when the engine agrees with the oracle, otherwise a description of the mismatch.
inline std::optional<std::string> compare_with_engine(const NormalProgram& raw, const sclp::SemiringPtr& boolean) {
  const NormalProgram p = compact(raw);
  const std::string text = render(p);
  const sclp::Program prog = sclp::parse_program(text, boolean);
  if (static_cast<int>(prog.atoms().size()) != p.atoms) return "atom universe differs for\n" + text;

  sclp::EvalOptions opts;
  opts.keep_trace = false;
  auto wf = sclp::well_founded(prog, sclp::ApproximatorKind::fitting, opts);
  auto expected_wf = well_founded_model(p);
  auto got_wf = to_three_valued(std::get<sclp::ApproximationPair>(wf.value));
  if (!expected_wf || *expected_wf != got_wf) {
    return "well-founded: engine " + show(got_wf) + ", oracle " + (expected_wf ? show(*expected_wf) : "none") +
           " for\n" + text;
  }

  auto stable = sclp::enumerate_stable_fixpoints(prog, sclp::ApproximatorKind::fitting, opts);
  std::vector<ThreeValued> got;
  for (const auto& pair : std::get<std::vector<sclp::ApproximationPair>>(stable.value)) got.push_back(to_three_valued(pair));
  auto expected = partial_stable_models(p);
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  if (got != expected) {
    std::string g, e;
    for (const auto& x : got) g += show(x) + " ";
    for (const auto& x : expected) e += show(x) + " ";
    return "stable: engine [" + g + "], oracle [" + e + "] for\n" + text;
  }
  return std::nullopt;
}

/// Every body over `atoms` atoms with at most `max_len` distinct literals, as (pos, neg) lists.
inline std::vector<Rule> all_bodies(int atoms, int max_len) {
  std::vector<std::pair<int, bool>> literals;
  for (int a = 0; a < atoms; ++a) {
    literals.emplace_back(a, false);
    literals.emplace_back(a, true);
  }
  std::vector<Rule> out;
  std::function<void(std::size_t, Rule&, int)> go = [&](std::size_t from, Rule& cur, int len) {
    out.push_back(cur);
    if (len == max_len) return;
    for (std::size_t i = from; i < literals.size(); ++i) {
      auto [a, neg] = literals[i];
      (neg ? cur.neg : cur.pos).push_back(a);
      go(i + 1, cur, len + 1);
      (neg ? cur.neg : cur.pos).pop_back();
    }
  };
  Rule empty;
  go(0, empty, 0);
  return out;
}

/**
 * Calls `visit` on every program that is a set of at most `max_rules` distinct
 * clauses over `atoms` atoms with at most `max_len` body literals. Returns the
 * number of programs visited.
 */
inline std::size_t for_each_small_program(int atoms, int max_len, int max_rules,
                                          const std::function<void(const NormalProgram&)>& visit) {
  std::vector<Rule> clauses;
  for (int h = 0; h < atoms; ++h) {
    for (auto body : all_bodies(atoms, max_len)) {
      body.head = h;
      clauses.push_back(body);
    }
  }
  std::size_t count = 0;
  NormalProgram p;
  p.atoms = atoms;
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    visit(p);
    ++count;
    if (static_cast<int>(p.rules.size()) == max_rules) return;
    for (std::size_t i = from; i < clauses.size(); ++i) {
      p.rules.push_back(clauses[i]);
      go(i + 1);
      p.rules.pop_back();
    }
  };
  go(0);
  return count;
}

inline NormalProgram random_boolean_program(std::mt19937_64& rng, int atoms, int max_rules, int max_len) {
  std::uniform_int_distribution<int> atom(0, atoms - 1), rules(1, max_rules), len(0, max_len), kind(0, 9);
  NormalProgram p;
  p.atoms = atoms;
  const int n = rules(rng);
  for (int r = 0; r < n; ++r) {
    Rule rule;
    rule.head = atom(rng);
    const int l = len(rng);
    for (int i = 0; i < l; ++i) {
      const int k = kind(rng);
      if (k == 0) {
        rule.has_true = true;
      } else if (k == 1) {
        rule.blocked = true;
      } else if (k < 6) {
        rule.pos.push_back(atom(rng));
      } else {
        rule.neg.push_back(atom(rng));
      }
    }
    p.rules.push_back(rule);
  }
  return p;
}

}  // namespace oracle

#endif  // SCLP_TESTS_ORACLE_FAITHFULNESS_HPP
