#include "ga/error.hpp"

namespace ga {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
  case Errc::dimension_exceeded: return "dimension-exceeded";
  case Errc::negative_tolerance: return "negative-tolerance";
  case Errc::algebra_mismatch: return "algebra-mismatch";
  case Errc::null_versor: return "null-versor";
  case Errc::not_a_versor: return "not-a-versor";
  case Errc::no_volume_element: return "no-volume-element";
  case Errc::non_bivector: return "non-bivector";
  case Errc::dependent_vectors: return "dependent-vectors";
  case Errc::null_volume: return "null-volume";
  case Errc::frame_size: return "frame-size";
  case Errc::non_vector: return "non-vector";
  case Errc::non_homogeneous: return "non-homogeneous";
  case Errc::non_blade: return "non-blade";
  case Errc::non_invertible_blade: return "non-invertible-blade";
  case Errc::null_vector: return "null-vector";
  case Errc::mixed_parity: return "mixed-parity";
  case Errc::dependent_input: return "dependent-input";
  case Errc::null_intermediate_blade: return "null-intermediate-blade";
  case Errc::not_skew: return "not-skew";
  case Errc::singular_map: return "singular-map";
  case Errc::not_an_isometry: return "not-an-isometry";
  case Errc::factorization_failure: return "factorization-failure";
  case Errc::zero_blade: return "zero-blade";
  case Errc::syntax_error: return "syntax-error";
  case Errc::unknown_basis_index: return "unknown-basis-index";
  case Errc::unbound_name: return "unbound-name";
  case Errc::zero_radius: return "zero-radius";
  case Errc::collision: return "collision";
  case Errc::nonfinite_state: return "nonfinite-state";
  case Errc::out_of_branch: return "out-of-branch";
  case Errc::invalid_argument: return "invalid-argument";
  }
  return "unknown";
}

} // namespace ga
