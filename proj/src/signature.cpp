#include "ga/signature.hpp"

#include <cmath>
#include <string>

#include "ga/error.hpp"

namespace ga {

Signature make_algebra(int p, int q, double tolerance, int max_dimension) {
  if (max_dimension > hard_max_dimension)
    throw Error(Errc::dimension_exceeded,
                "maximum dimension is limited to " +
                    std::to_string(hard_max_dimension));
  if (p < 0 || q < 0 || p + q > max_dimension)
    throw Error(Errc::dimension_exceeded,
                "signature (" + std::to_string(p) + "," + std::to_string(q) +
                    ") exceeds dimension limit " +
                    std::to_string(max_dimension));
  if (!(tolerance >= 0.0) || !std::isfinite(tolerance))
    throw Error(Errc::negative_tolerance, "tolerance must be finite and >= 0");
  Signature sig;
  sig.p_ = p;
  sig.q_ = q;
  sig.tolerance_ = tolerance;
  return sig;
}

Signature Signature::with_tolerance(double tolerance) const {
  return make_algebra(p_, q_, tolerance, hard_max_dimension);
}

std::vector<int> BasisBlade::indices() const {
  std::vector<int> out;
  for (std::uint32_t b = bits; b != 0; b &= b - 1)
    out.push_back(std::countr_zero(b) + 1);
  return out;
}

BasisBlade BasisBlade::from_indices(const std::vector<int> &ascending) {
  BasisBlade b;
  for (int i : ascending)
    b.bits |= 1u << (i - 1);
  return b;
}

} // namespace ga
