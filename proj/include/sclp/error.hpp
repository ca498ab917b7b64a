#ifndef SCLP_ERROR_HPP
#define SCLP_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sclp {

/** Every failure the engine can report. Each maps to one named CLI diagnostic. */
enum class ErrorCode {
  parse_error,
  value_not_in_carrier,
  not_positive_program,
  not_positively_ordered,
  not_complete_lattice,
  not_enumerable,
  iteration_cap_exceeded,
  non_ascending_chain,
  search_space_too_large,
  interval_too_large,
  inconsistent_pair,
  universe_mismatch,
  no_glb,
  table_load_error,
  unknown_semiring,
  io_error,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::value_not_in_carrier: return "ValueNotInCarrier";
    case ErrorCode::not_positive_program: return "NotPositiveProgram";
    case ErrorCode::not_positively_ordered: return "NotPositivelyOrdered";
    case ErrorCode::not_complete_lattice: return "NotCompleteLattice";
    case ErrorCode::not_enumerable: return "NotEnumerable";
    case ErrorCode::iteration_cap_exceeded: return "IterationCapExceeded";
    case ErrorCode::non_ascending_chain: return "NonAscendingChain";
    case ErrorCode::search_space_too_large: return "SearchSpaceTooLarge";
    case ErrorCode::interval_too_large: return "IntervalTooLarge";
    case ErrorCode::inconsistent_pair: return "InconsistentPair";
    case ErrorCode::universe_mismatch: return "UniverseMismatch";
    case ErrorCode::no_glb: return "NoGlb";
    case ErrorCode::table_load_error: return "TableLoadError";
    case ErrorCode::unknown_semiring: return "UnknownSemiring";
    case ErrorCode::io_error: return "IoError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorCode::parse_error, std::to_string(line) + ":" + std::to_string(column) +
                                          ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class IterationCapExceeded : public Error {
 public:
  IterationCapExceeded(std::size_t cap, bool divergence_suspected)
      : Error(ErrorCode::iteration_cap_exceeded,
              "no fixpoint within " + std::to_string(cap) + " iterations" +
                  (divergence_suspected ? " (DivergenceSuspected: a value kept increasing)" : "")),
        cap_(cap),
        divergence_suspected_(divergence_suspected) {}

  std::size_t cap() const noexcept { return cap_; }
  bool divergence_suspected() const noexcept { return divergence_suspected_; }

 private:
  std::size_t cap_;
  bool divergence_suspected_;
};

}  // namespace sclp

#endif  // SCLP_ERROR_HPP
