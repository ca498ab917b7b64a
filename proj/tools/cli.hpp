#ifndef SCLP_TOOLS_CLI_HPP
#define SCLP_TOOLS_CLI_HPP

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sclp/output.hpp"
#include "sclp/sclp.hpp"

namespace sclp::cli {

enum ExitCode : int { ok = 0, usage = 1, evaluation = 2 };

struct Config {
  std::string program_path;
  std::string semiring = "bool";
  std::string semantics = "lfp";
  std::string approximator = "fitting";
  std::string format = "table";
  std::size_t max_iterations = default_iteration_cap;
  bool trace = false;
  bool dedup = false;
  bool unsafe_fitting = false;
  std::string pair_path;
  std::string interp_path;
  std::vector<std::string> properties;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io_error, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Program load_program(const Config& cfg, const SemiringPtr& semiring) {
  try {
    Program p = parse_program(read_file(cfg.program_path), semiring);
    return cfg.dedup ? p.deduplicated() : p;
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), cfg.program_path + ":" + e.what());
  }
}

inline std::string render(const SemanticsResult& r, const Config& cfg) {
  if (cfg.format == "json") return result_json(r, cfg.trace).dump(2) + "\n";
  if (cfg.format == "plain") return emit_plain(r);
  return emit_table(r);
}

inline ApproximatorKind approximator_of(const Config& cfg) {
  return cfg.approximator == "ultimate" ? ApproximatorKind::ultimate : ApproximatorKind::fitting;
}

inline int cmd_parse(const Config& cfg, std::ostream& out) {
  auto semiring = make_semiring(cfg.semiring);
  Program p = load_program(cfg, semiring);
  if (cfg.format == "json") {
    nlohmann::ordered_json doc;
    doc["semiring"] = semiring->name;
    doc["clauses"] = p.clauses().size();
    doc["positive"] = p.is_positive();
    auto atoms = nlohmann::ordered_json::array();
    for (const auto& a : p.atoms()) atoms.push_back(to_string(a));
    doc["atoms"] = atoms;
    auto clauses = nlohmann::ordered_json::array();
    for (const auto& c : p.clauses()) clauses.push_back(to_string(c));
    doc["program"] = clauses;
    out << doc.dump(2) << "\n";
    return ok;
  }
  out << "% " << p.clauses().size() << " clauses, " << p.atoms().size() << " atoms, "
      << (p.is_positive() ? "positive" : "with negation") << ", semiring " << semiring->name << "\n";
  out << print_program(p);
  return ok;
}

inline int cmd_eval(const Config& cfg, std::ostream& out) {
  auto semiring = make_semiring(cfg.semiring);
  Program p = load_program(cfg, semiring);
  EvalOptions opts;
  opts.max_iterations = cfg.max_iterations;
  opts.unsafe_fitting = cfg.unsafe_fitting;
  const auto kind = approximator_of(cfg);
  SemanticsResult r = [&] {
    if (cfg.semantics == "lfp") return minimal_model(p, opts);
    if (cfg.semantics == "kk") return kripke_kleene(p, kind, opts);
    if (cfg.semantics == "wf") return well_founded(p, kind, opts);
    if (cfg.semantics == "stable") return enumerate_stable_fixpoints(p, kind, opts);
    if (cfg.pair_path.empty()) throw UsageError("--semantics stable-check needs --pair FILE");
    auto pair = parse_pair(read_file(cfg.pair_path), *semiring, p.universe());
    return stable_check(p, kind, pair, opts);
  }();
  out << render(r, cfg);
  return ok;
}

inline int cmd_models(const Config& cfg, std::ostream& out) {
  auto semiring = make_semiring(cfg.semiring);
  Program p = load_program(cfg, semiring);
  Interpretation I = parse_interpretation(read_file(cfg.interp_path), *semiring, p.universe());
  const bool sem = is_semiring_model(p, I);
  const bool trad = is_traditional_model(p, I);
  Interpretation image = tp(p, I);
  const std::string note = p.is_positive() ? "" : "negated atoms read the same interpretation (two-valued extension)";
  if (cfg.format == "json") {
    nlohmann::ordered_json doc;
    doc["semiring"] = semiring->name;
    doc["semiring_model"] = sem;
    doc["traditional_model"] = trad;
    doc["tp"] = interpretation_json(image);
    doc["notes"] = note.empty() ? std::vector<std::string>{} : std::vector<std::string>{note};
    out << doc.dump(2) << "\n";
    return ok;
  }
  if (!note.empty()) out << "% " << note << "\n";
  out << "semiring model: " << (sem ? "yes" : "no") << "\n";
  out << "traditional model: " << (trad ? "yes" : "no") << "\n";
  out << "[tp]\n" << format_interpretation(image);
  return ok;
}

inline const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = {
      "semiring-laws",     "no-additive-inverses",          "monotone-ops",
      "natural-bottom-is-zero", "natural-top-iff-absorbing", "orders-coincide",
      "idempotent-implies-natural-order", "natural-complete-lattice", "positively-ordered",
      "complete-lattice"};
  return names;
}

inline std::vector<PropertyReport> run_properties(const SemiringSpec& s, const std::vector<std::string>& wanted) {
  std::vector<PropertyReport> reports;
  if (s.is_finite()) {
    reports = order_theory_suite(s);
  } else {
    reports.push_back(check_semiring_laws_sampled(s, 0x5c1f00d, 1000));
    reports.back().detail += " (sampled)";
    for (const auto& name : property_names()) {
      if (name == "semiring-laws") continue;
      if (name == "positively-ordered") {
        reports.push_back(check_positively_ordered(s));
        continue;
      }
      PropertyReport r;
      r.property = name;
      r.verdict = Verdict::skipped;
      r.detail = "carrier is not enumerable";
      reports.push_back(r);
    }
  }
  if (wanted.empty()) return reports;
  std::vector<PropertyReport> chosen;
  for (const auto& w : wanted) {
    auto it = std::find_if(reports.begin(), reports.end(), [&](const PropertyReport& r) { return r.property == w; });
    if (it->verdict == Verdict::skipped && it->detail == "carrier is not enumerable") {
      throw Error(ErrorCode::not_enumerable, "property '" + w + "' needs a finite carrier; '" + s.name + "' is infinite");
    }
    chosen.push_back(*it);
  }
  return chosen;
}

inline int cmd_check(const Config& cfg, std::ostream& out) {
  auto semiring = make_semiring(cfg.semiring);
  auto reports = run_properties(*semiring, cfg.properties);
  if (cfg.format == "json") {
    nlohmann::ordered_json doc;
    doc["semiring"] = semiring->name;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
      nlohmann::ordered_json j;
      j["property"] = r.property;
      j["verdict"] = std::string(to_string(r.verdict));
      j["detail"] = r.detail;
      auto cex = nlohmann::ordered_json::array();
      for (const auto& v : r.counterexample) cex.push_back(to_string(v));
      j["counterexample"] = cex;
      if (r.witness) j["witness"] = to_string(*r.witness);
      arr.push_back(j);
    }
    doc["reports"] = arr;
    out << doc.dump(2) << "\n";
  } else {
    out << "semiring " << semiring->name << "\n";
    for (const auto& r : reports) {
      out << "  " << r.property << ": " << to_string(r.verdict) << " - " << r.detail << "\n";
    }
  }
  return ok;
}

inline int cmd_list(std::ostream& out) {
  std::size_t width = 0;
  for (const auto& e : list_semirings()) width = std::max(width, e.syntax.size());
  for (const auto& e : list_semirings()) {
    out << e.syntax << std::string(width - e.syntax.size() + 2, ' ') << e.description << "\n";
  }
  return ok;
}

/// Runs one invocation. Exit codes: 0 success, 1 usage error, 2 evaluation error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Evaluate semiring-based constraint logic programs with negation", "sclp"};
  app.require_subcommand(1);

  auto add_semiring = [&](CLI::App* sub) {
    sub->add_option("--semiring,-s", cfg.semiring, "Semiring name or table:<path> (see list-semirings)");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format,-f", cfg.format, "Output format")->check(CLI::IsMember({"table", "json", "plain"}));
  };
  auto add_program = [&](CLI::App* sub) {
    sub->add_option("program", cfg.program_path, "Program file")->required();
    sub->add_flag("--dedup", cfg.dedup, "Drop duplicate clauses before evaluation");
  };

  auto* parse = app.add_subcommand("parse", "Parse and pretty-print a program");
  add_program(parse);
  add_semiring(parse);
  add_format(parse);

  auto* eval = app.add_subcommand("eval", "Evaluate a program under a semantics");
  add_program(eval);
  add_semiring(eval);
  add_format(eval);
  eval->add_option("--semantics", cfg.semantics, "lfp, kk, wf, stable or stable-check")
      ->check(CLI::IsMember({"lfp", "kk", "wf", "stable", "stable-check"}));
  eval->add_option("--approximator,-a", cfg.approximator, "fitting or ultimate")
      ->check(CLI::IsMember({"fitting", "ultimate"}));
  eval->add_option("--max-iterations", cfg.max_iterations, "Kleene iteration cap")->check(CLI::PositiveNumber);
  eval->add_flag("--trace", cfg.trace, "Include the iteration trace in json output");
  eval->add_flag("--unsafe-fitting", cfg.unsafe_fitting,
                 "Allow Fitting's operator on semirings that are not positively ordered");
  eval->add_option("--pair", cfg.pair_path, "Pair file for stable-check ([lower]/[upper] sections)");

  auto* models = app.add_subcommand("models", "Check whether an interpretation is a model");
  add_program(models);
  add_semiring(models);
  add_format(models);
  models->add_option("--interp", cfg.interp_path, "Interpretation file (atom = value lines)")->required();

  auto* check = app.add_subcommand("check-semiring", "Run order-theoretic property checks on a semiring");
  add_semiring(check);
  add_format(check);
  check->add_option("--property,-p", cfg.properties, "Property to check (repeatable; default all)")
      ->check(CLI::IsMember(property_names()));

  auto* list = app.add_subcommand("list-semirings", "List the available semirings");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? ok : usage;
  }

  try {
    if (parse->parsed()) return cmd_parse(cfg, out);
    if (eval->parsed()) return cmd_eval(cfg, out);
    if (models->parsed()) return cmd_models(cfg, out);
    if (check->parsed()) return cmd_check(cfg, out);
    if (list->parsed()) return cmd_list(out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return usage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    const bool bad_argument = e.code() == ErrorCode::unknown_semiring || e.code() == ErrorCode::io_error;
    return bad_argument ? usage : evaluation;
  }
  return usage;
}

}  // namespace sclp::cli

#endif  // SCLP_TOOLS_CLI_HPP
