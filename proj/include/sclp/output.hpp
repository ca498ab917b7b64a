#ifndef SCLP_OUTPUT_HPP
#define SCLP_OUTPUT_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "sclp/interpretation.hpp"
#include "sclp/semantics.hpp"

namespace sclp {

namespace detail {

inline std::string cell(const TraceStep& step, std::size_t atom) {
  if (const auto* I = std::get_if<Interpretation>(&step)) return to_string((*I)[atom]);
  const auto& p = std::get<ApproximationPair>(step);
  return "(" + to_string(p.lower[atom]) + "," + to_string(p.upper[atom]) + ")";
}

inline std::string render_grid(const std::vector<Atom>& atoms, const std::vector<std::string>& headers,
                               const std::vector<TraceStep>& columns) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({""});
  rows.back().insert(rows.back().end(), headers.begin(), headers.end());
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    rows.push_back({to_string(atoms[a])});
    for (const auto& col : columns) rows.back().push_back(cell(col, a));
  }
  std::vector<std::size_t> width(headers.size() + 1, 0);
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c) line += "  ";
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size(), ' ');
    }
    out += line + "\n";
  }
  return out;
}

inline const std::vector<Atom>& atoms_of(const SemanticsValue& v) {
  if (const auto* I = std::get_if<Interpretation>(&v)) return I->universe()->atoms;
  if (const auto* p = std::get_if<ApproximationPair>(&v)) return p->lower.universe()->atoms;
  static const std::vector<Atom> none;
  return none;
}

inline std::string notes_block(const SemanticsResult& r, const char* prefix) {
  std::string out;
  for (const auto& n : r.notes) out += std::string(prefix) + n + "\n";
  return out;
}

}  // namespace detail

/**
 * Atoms as rows, iterations as columns. Minimal models show I1..In; pair
 * semantics show the precision bottom followed by A1..An. Without a trace the
 * final value is a single column.
 */
inline std::string emit_table(const SemanticsResult& r) {
  std::string out = detail::notes_block(r, "% ");
  if (const auto* set = std::get_if<std::vector<ApproximationPair>>(&r.value)) {
    if (set->empty()) return out + "no stable fixpoints\n";
    std::vector<std::string> headers;
    std::vector<TraceStep> cols;
    for (std::size_t i = 0; i < set->size(); ++i) {
      headers.push_back("S" + std::to_string(i + 1) + ((*set)[i].is_exact() ? "" : "*"));
      cols.emplace_back((*set)[i]);
    }
    return out + detail::render_grid(set->front().lower.universe()->atoms, headers, cols);
  }
  if (const auto* b = std::get_if<bool>(&r.value)) return out + (*b ? "stable\n" : "not stable\n");

  const auto& atoms = detail::atoms_of(r.value);
  const auto& steps = r.trace.steps;
  std::vector<std::string> headers;
  std::vector<TraceStep> cols;
  if (steps.empty()) {
    headers.push_back(r.kind == SemanticsKind::minimal_model ? "value" : "pair");
    if (const auto* I = std::get_if<Interpretation>(&r.value)) {
      cols.emplace_back(*I);
    } else {
      cols.emplace_back(std::get<ApproximationPair>(r.value));
    }
  } else if (r.kind == SemanticsKind::minimal_model) {
    for (std::size_t i = 1; i <= r.trace.iterations_used; ++i) {
      headers.push_back("I" + std::to_string(i));
      cols.push_back(steps[i]);
    }
  } else {
    headers.emplace_back("bot_p");
    cols.push_back(steps[0]);
    for (std::size_t i = 1; i <= r.trace.iterations_used; ++i) {
      headers.push_back("A" + std::to_string(i));
      cols.push_back(steps[i]);
    }
  }
  return out + detail::render_grid(atoms, headers, cols);
}

/// Canonical `atom = value` text; pairs use [lower]/[upper] sections.
inline std::string emit_plain(const SemanticsResult& r) {
  std::string out = detail::notes_block(r, "% ");
  if (const auto* I = std::get_if<Interpretation>(&r.value)) return out + format_interpretation(*I);
  if (const auto* p = std::get_if<ApproximationPair>(&r.value)) return out + format_pair(*p);
  if (const auto* b = std::get_if<bool>(&r.value)) return out + (*b ? "stable\n" : "not stable\n");
  const auto& set = std::get<std::vector<ApproximationPair>>(r.value);
  for (std::size_t i = 0; i < set.size(); ++i) {
    out += "% stable fixpoint " + std::to_string(i + 1) + (set[i].is_exact() ? " (exact)" : "") + "\n";
    out += format_pair(set[i]);
  }
  return out;
}

inline nlohmann::ordered_json interpretation_json(const Interpretation& I) {
  auto arr = nlohmann::ordered_json::array();
  const auto& atoms = I.universe()->atoms;
  for (std::size_t i = 0; i < atoms.size(); ++i) arr.push_back({{"atom", to_string(atoms[i])}, {"value", to_string(I[i])}});
  return arr;
}

inline nlohmann::ordered_json pair_json(const ApproximationPair& p) {
  return {{"lower", interpretation_json(p.lower)}, {"upper", interpretation_json(p.upper)}, {"exact", p.is_exact()}};
}

/// Standalone interpretation document: {semiring, assignment: [{atom, value}]}.
inline nlohmann::ordered_json interpretation_document(const Interpretation& I, const std::string& semiring) {
  return {{"semiring", semiring}, {"assignment", interpretation_json(I)}};
}

inline nlohmann::ordered_json result_json(const SemanticsResult& r, bool with_trace) {
  nlohmann::ordered_json doc;
  doc["kind"] = std::string(to_string(r.kind));
  doc["approximator"] = std::string(to_string(r.approximator));
  doc["semiring"] = r.semiring;
  doc["exact"] = r.exact;
  if (const auto* I = std::get_if<Interpretation>(&r.value)) {
    doc["interpretation"] = interpretation_json(*I);
  } else if (const auto* p = std::get_if<ApproximationPair>(&r.value)) {
    doc["pair"] = pair_json(*p);
  } else if (const auto* b = std::get_if<bool>(&r.value)) {
    doc["stable"] = *b;
  } else {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& q : std::get<std::vector<ApproximationPair>>(r.value)) arr.push_back(pair_json(q));
    doc["pairs"] = arr;
  }
  doc["notes"] = r.notes;
  if (with_trace) {
    auto steps = nlohmann::ordered_json::array();
    for (const auto& s : r.trace.steps) {
      if (const auto* I = std::get_if<Interpretation>(&s)) {
        steps.push_back(interpretation_json(*I));
      } else {
        steps.push_back(pair_json(std::get<ApproximationPair>(s)));
      }
    }
    doc["trace"] = {{"converged", r.trace.converged},
                    {"iterations_used", r.trace.iterations_used},
                    {"cap", r.trace.cap},
                    {"steps", steps}};
  }
  return doc;
}

}  // namespace sclp

#endif  // SCLP_OUTPUT_HPP
