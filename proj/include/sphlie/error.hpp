#pragma once

#include <stdexcept>
#include <string>

namespace sphlie {

enum class errc {
  dimension_mismatch,
  invalid_subset,
  not_in_positive_lattice,
  parent_mismatch,
  not_normalizing,
  not_subalgebra,
  not_spherical,
  no_adapted_parabolic,
  generator_not_vanishing_on_a_h,
  inconsistent_sign,
  consistency_failure,
  not_wavefront,
  no_positive_solution,
  f_q_not_contained,
  parent_not_unimodular,
  edge_mismatch,
  not_tempered,
  assertion_failure,
  unsupported_entry,
  parse_error,
};

const char* errc_name(errc c);

/// Domain error with a stable machine-readable code.
class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

} // namespace sphlie
