#include "cremona/errors.hpp"

namespace cremona {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::context_mismatch: return "context_mismatch";
    case ErrorKind::zero_polynomial: return "zero_polynomial";
    case ErrorKind::empty_list: return "empty_list";
    case ErrorKind::not_divisible: return "not_divisible";
    case ErrorKind::not_homogeneous: return "not_homogeneous";
    case ErrorKind::degree_mismatch: return "degree_mismatch";
    case ErrorKind::all_zero: return "all_zero";
    case ErrorKind::composed_to_zero: return "composed_to_zero";
    case ErrorKind::singular_matrix: return "singular_matrix";
    case ErrorKind::not_linear: return "not_linear";
    case ErrorKind::not_inverse_pair: return "not_inverse_pair";
    case ErrorKind::inconsistent_star_certificate:
      return "inconsistent_star_certificate";
    case ErrorKind::collapse_point: return "collapse_point";
    case ErrorKind::degenerate_mobius: return "degenerate_mobius";
    case ErrorKind::bad_reduction_exhausted: return "bad_reduction_exhausted";
    case ErrorKind::parse_error: return "parse_error";
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::internal_invariant: return "internal_invariant";
  }
  return "unknown";
}

int CremonaError::category() const {
  switch (kind_) {
    case ErrorKind::context_mismatch:
    case ErrorKind::zero_polynomial:
    case ErrorKind::empty_list:
    case ErrorKind::not_homogeneous:
    case ErrorKind::degree_mismatch:
    case ErrorKind::all_zero:
    case ErrorKind::singular_matrix:
    case ErrorKind::not_linear:
    case ErrorKind::degenerate_mobius:
    case ErrorKind::parse_error:
    case ErrorKind::invalid_argument:
      return 1;
    case ErrorKind::not_divisible:
    case ErrorKind::composed_to_zero:
    case ErrorKind::not_inverse_pair:
    case ErrorKind::inconsistent_star_certificate:
    case ErrorKind::collapse_point:
    case ErrorKind::bad_reduction_exhausted:
      return 2;
    case ErrorKind::internal_invariant:
      return 3;
  }
  return 3;
}

}  // namespace cremona
