#pragma once

#include <stdexcept>
#include <string>

namespace cremona {

// Every failure the library can signal. The CLI maps these to exit codes:
// validation errors (bad input) exit 1, domain errors (legal input, no
// answer) exit 2, internal invariant violations exit 3.
enum class ErrorKind {
  context_mismatch,
  zero_polynomial,
  empty_list,
  not_divisible,
  not_homogeneous,
  degree_mismatch,
  all_zero,
  composed_to_zero,
  singular_matrix,
  not_linear,
  not_inverse_pair,
  inconsistent_star_certificate,
  collapse_point,
  degenerate_mobius,
  bad_reduction_exhausted,
  parse_error,
  invalid_argument,
  internal_invariant,
};

const char* to_string(ErrorKind k);

class CremonaError : public std::runtime_error {
 public:
  CremonaError(ErrorKind kind, const std::string& what, std::string detail = "")
      : std::runtime_error(what), kind_(kind), detail_(std::move(detail)) {}

  ErrorKind kind() const { return kind_; }

  // Machine-readable payload, e.g. the offending parameter value for
  // collapse_point. Empty when the message says it all.
  const std::string& detail() const { return detail_; }

  // 1 = validation, 2 = domain, 3 = internal.
  int category() const;

 private:
  ErrorKind kind_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what,
                              std::string detail = "") {
  throw CremonaError(kind, what, std::move(detail));
}

}  // namespace cremona
