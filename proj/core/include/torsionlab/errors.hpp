#pragma once

#include <stdexcept>
#include <string>

namespace torsionlab {

enum class errc {
  bad_args,
  bad_group,
  bad_weight,
  bad_sigma,
  not_dominant,
  theta_invariant_weight,
  variable_mismatch,
  basis_mismatch,
  duplicate_abscissa,
  degree_mismatch,
  non_integer_ratio,
  negative_multiplicity,
  odd_dual_dimension,
  identity_failure,
  parse_error,
  io_error,
};

// Stable machine-readable code, e.g. for CLI error documents.
inline const char* error_code_name(errc c) {
  switch (c) {
    case errc::bad_args: return "BAD_ARGS";
    case errc::bad_group: return "BAD_GROUP";
    case errc::bad_weight: return "BAD_WEIGHT";
    case errc::bad_sigma: return "BAD_SIGMA";
    case errc::not_dominant: return "NOT_DOMINANT";
    case errc::theta_invariant_weight: return "THETA_INVARIANT_WEIGHT";
    case errc::variable_mismatch: return "VARIABLE_MISMATCH";
    case errc::basis_mismatch: return "BASIS_MISMATCH";
    case errc::duplicate_abscissa: return "DUPLICATE_ABSCISSA";
    case errc::degree_mismatch: return "DEGREE_MISMATCH";
    case errc::non_integer_ratio: return "NON_INTEGER_RATIO";
    case errc::negative_multiplicity: return "NEGATIVE_MULTIPLICITY";
    case errc::odd_dual_dimension: return "ODD_DUAL_DIMENSION";
    case errc::identity_failure: return "IDENTITY_FAILURE";
    case errc::parse_error: return "PARSE_ERROR";
    case errc::io_error: return "IO_ERROR";
  }
  return "UNKNOWN";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace torsionlab
