#pragma once
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "ga/signature.hpp"

namespace ga {

// Set of grades 0..31 present in a multivector.
struct GradeSet {
  std::uint64_t mask = 0;

  bool contains(int r) const noexcept {
    return r >= 0 && r < 64 && ((mask >> r) & 1u);
  }
  void insert(int r) noexcept { mask |= std::uint64_t{1} << r; }
  bool empty() const noexcept { return mask == 0; }
  int size() const noexcept { return std::popcount(mask); }
  bool subset_of(GradeSet other) const noexcept {
    return (mask & ~other.mask) == 0;
  }
  std::vector<int> to_vector() const;

  friend GradeSet operator|(GradeSet a, GradeSet b) noexcept {
    return {a.mask | b.mask};
  }
  friend bool operator==(GradeSet, GradeSet) noexcept = default;
};

// Sparse multivector: basis blade -> coefficient, kept in canonical order
// with no coefficient of magnitude <= tolerance. Zero is the empty map.
class Multivector {
public:
  struct Term {
    BasisBlade blade;
    double coeff;
  };

  explicit Multivector(const Signature &sig) : sig_(sig) {}
  // Sums duplicate blades and drops negligible coefficients.
  Multivector(const Signature &sig, std::vector<Term> terms);

  static Multivector scalar(const Signature &sig, double value);
  static Multivector basis_vector(const Signature &sig, int index);
  static Multivector blade(const Signature &sig, BasisBlade b,
                           double coeff = 1.0);
  // Vector with components along e1..e_k (k <= n).
  static Multivector vector(const Signature &sig, std::span<const double> xs);
  static Multivector vector(const Signature &sig,
                            std::initializer_list<double> xs) {
    return vector(sig, std::span<const double>(xs.begin(), xs.size()));
  }
  // I = e1 e2 ... en.
  static Multivector volume_element(const Signature &sig);

  const Signature &algebra() const noexcept { return sig_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  double coeff(BasisBlade b) const noexcept;
  double scalar_part() const noexcept { return coeff(BasisBlade{}); }
  // Components along e1..en.
  std::vector<double> vector_part() const;
  double max_abs_coeff() const noexcept;

  GradeSet grades() const noexcept;
  // The single grade when homogeneous; nullopt for zero or mixed grade.
  std::optional<int> grade() const noexcept;
  bool is_scalar() const noexcept;
  bool is_vector() const noexcept { return is_zero() || grade() == 1; }

  Multivector &operator+=(const Multivector &other);
  Multivector &operator-=(const Multivector &other);
  Multivector &operator*=(double s);
  Multivector &operator/=(double s) { return *this *= 1.0 / s; }

  friend Multivector operator+(Multivector a, const Multivector &b) {
    return a += b;
  }
  friend Multivector operator-(Multivector a, const Multivector &b) {
    return a -= b;
  }
  friend Multivector operator-(Multivector a) { return a *= -1.0; }
  friend Multivector operator*(Multivector a, double s) { return a *= s; }
  friend Multivector operator*(double s, Multivector a) { return a *= s; }
  friend Multivector operator/(Multivector a, double s) { return a /= s; }
  friend Multivector operator+(Multivector a, double s);
  friend Multivector operator+(double s, Multivector a) { return a + s; }
  friend Multivector operator-(Multivector a, double s) { return a + (-s); }
  friend Multivector operator-(double s, Multivector a) { return -a + s; }
  // Geometric product.
  friend Multivector operator*(const Multivector &a, const Multivector &b);

  // Exact equality of algebra and stored terms.
  friend bool operator==(const Multivector &a, const Multivector &b) noexcept;

private:
  void normalize();

  Signature sig_;
  std::vector<Term> terms_;
};

// Largest coefficient difference; algebras must match.
double max_abs_diff(const Multivector &a, const Multivector &b);
bool approx_equal(const Multivector &a, const Multivector &b, double tol);

// ========================================================================
// PRODUCTS
// ========================================================================

Multivector geometric_product(const Multivector &a, const Multivector &b);
Multivector outer_product(const Multivector &a, const Multivector &b);
Multivector left_contraction(const Multivector &a, const Multivector &b);
Multivector right_contraction(const Multivector &a, const Multivector &b);
// <~A B>, the metric pairing of multivectors.
double scalar_product(const Multivector &a, const Multivector &b);
double norm_squared(const Multivector &a);
// 1/2 (AB - BA)
Multivector commutator(const Multivector &a, const Multivector &b);

// Zero when r < 0 or r > n.
Multivector grade_project(const Multivector &a, int r);
Multivector even_part(const Multivector &a);
Multivector odd_part(const Multivector &a);

// ========================================================================
// INVOLUTIONS, INVERSE, DUAL
// ========================================================================

enum class Involution { grade, reverse, clifford };

Multivector involution(const Multivector &a, Involution kind);
inline Multivector grade_involution(const Multivector &a) {
  return involution(a, Involution::grade);
}
inline Multivector reverse(const Multivector &a) {
  return involution(a, Involution::reverse);
}
inline Multivector clifford_conjugate(const Multivector &a) {
  return involution(a, Involution::clifford);
}
// Grade involution applied `times` times.
Multivector grade_involution(const Multivector &a, int times);

// Per-grade sign of each involution.
int involution_sign(Involution kind, int grade) noexcept;

// Accepted as a versor when all grades share one parity and A~A is a
// scalar within tolerance.
bool is_versor(const Multivector &a);
// ~A / |A|^2. Errc::not_a_versor when the versor test fails,
// Errc::null_versor when |A|^2 is within tolerance of zero.
Multivector versor_inverse(const Multivector &a);

// A I^-1 and A I. Errc::no_volume_element when n == 0.
Multivector dual(const Multivector &a);
Multivector inverse_dual(const Multivector &a);

// ========================================================================
// EXPONENTIALS
// ========================================================================

// exp(-B theta / 2): the rotor turning through theta in the plane of B.
// Blades use closed forms chosen by the sign of B^2; general bivectors use
// the power series. Errc::non_bivector when B has non-grade-2 terms.
Multivector exp_bivector(const Multivector &b, double theta);
// exp(A) by power series with scaling and squaring.
Multivector exp_series(const Multivector &a);

} // namespace ga
