#pragma once
#include <stdexcept>
#include <string>
#include <string_view>

namespace ga {

enum class Errc {
  dimension_exceeded,
  negative_tolerance,
  algebra_mismatch,
  null_versor,
  not_a_versor,
  no_volume_element,
  non_bivector,
  dependent_vectors,
  null_volume,
  frame_size,
  non_vector,
  non_homogeneous,
  non_blade,
  non_invertible_blade,
  null_vector,
  mixed_parity,
  dependent_input,
  null_intermediate_blade,
  not_skew,
  singular_map,
  not_an_isometry,
  factorization_failure,
  zero_blade,
  syntax_error,
  unknown_basis_index,
  unbound_name,
  zero_radius,
  collision,
  nonfinite_state,
  out_of_branch,
  invalid_argument,
};

std::string_view errc_name(Errc code) noexcept;

// All library failures are reported as ga::Error; code() identifies the failure mode.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string &what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code), detail_(what) {}

  Errc code() const noexcept { return code_; }
  // Message without the code prefix.
  const std::string &detail() const noexcept { return detail_; }

private:
  Errc code_;
  std::string detail_;
};

} // namespace ga
