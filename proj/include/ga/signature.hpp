#pragma once
#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace ga {

inline constexpr int default_max_dimension = 12;
inline constexpr int hard_max_dimension = 31;
inline constexpr double default_tolerance = 1e-10;

// ========================================================================
// SIGNATURE
// ========================================================================

// Diagonal metric with p basis vectors squaring to +1 followed by q squaring
// to -1. Basis vectors are numbered 1..n externally; bit i-1 internally.
class Signature {
public:
  Signature() = default;

  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  int n() const noexcept { return p_ + q_; }
  double tolerance() const noexcept { return tolerance_; }

  // Square of basis vector e_index (1-based).
  int metric(int index) const noexcept { return index <= p_ ? 1 : -1; }
  int metric_bit(int bit) const noexcept { return bit < p_ ? 1 : -1; }

  std::uint32_t full_mask() const noexcept {
    return n() == 0 ? 0u : (~0u >> (32 - n()));
  }

  Signature with_tolerance(double tolerance) const;

  // Algebras are the same when their metrics agree; tolerance is a
  // numerical setting, not part of the algebra.
  friend bool operator==(const Signature &a, const Signature &b) noexcept {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }

private:
  friend Signature make_algebra(int p, int q, double tolerance,
                                int max_dimension);
  int p_ = 0;
  int q_ = 0;
  double tolerance_ = default_tolerance;
};

// Throws Errc::dimension_exceeded when p+q > max_dimension (or either count
// is negative) and Errc::negative_tolerance for tolerance < 0 or NaN.
Signature make_algebra(int p, int q, double tolerance = default_tolerance,
                       int max_dimension = default_max_dimension);

// ========================================================================
// BASIS BLADES
// ========================================================================

// e_{i1} e_{i2} ... e_{ir} with i1 < ... < ir, stored as a bit set.
struct BasisBlade {
  std::uint32_t bits = 0;

  int grade() const noexcept { return std::popcount(bits); }
  bool contains(int index) const noexcept {
    return (bits >> (index - 1)) & 1u;
  }
  std::vector<int> indices() const;

  static BasisBlade from_indices(const std::vector<int> &ascending);

  friend bool operator==(BasisBlade, BasisBlade) noexcept = default;
};

// Canonical term order: by grade, then lexicographically by index sequence.
// For equal grade the first differing index is the lowest bit of a ^ b.
inline bool canonical_less(BasisBlade a, BasisBlade b) noexcept {
  const int ga = a.grade(), gb = b.grade();
  if (ga != gb)
    return ga < gb;
  const std::uint32_t diff = a.bits ^ b.bits;
  if (diff == 0)
    return false;
  return (a.bits & (diff & (~diff + 1))) != 0;
}

struct BladeProduct {
  BasisBlade blade;
  double sign;
};

// Product of two basis blades: index sets combine by symmetric difference,
// the sign collects the reordering parity and the metric of shared vectors.
inline BladeProduct blade_product(BasisBlade x, BasisBlade y,
                                  const Signature &sig) noexcept {
  int swaps = 0;
  for (std::uint32_t a = x.bits >> 1; a != 0; a >>= 1)
    swaps += std::popcount(a & y.bits);
  int sign = (swaps & 1) ? -1 : 1;
  for (std::uint32_t shared = x.bits & y.bits; shared != 0;
       shared &= shared - 1)
    sign *= sig.metric_bit(std::countr_zero(shared));
  return {BasisBlade{x.bits ^ y.bits}, static_cast<double>(sign)};
}

} // namespace ga
