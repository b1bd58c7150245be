#pragma once
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ga/frame.hpp"
#include "ga/multivector.hpp"

namespace ga {

// Linear map of vectors, stored as the images F(e_1)..F(e_n) of the
// orthonormal basis. Acting on multivectors it is the outermorphism.
class LinearMap {
public:
  // Errors: frame_size when images.size() != n, non_vector.
  LinearMap(const Signature &sig, std::vector<Multivector> images);

  static LinearMap identity(const Signature &sig);
  static LinearMap zero(const Signature &sig);
  static LinearMap diagonal(const Signature &sig,
                            const std::vector<double> &lambdas);
  // columns[j] = components of F(e_(j+1)).
  static LinearMap from_columns(const Signature &sig,
                                const std::vector<std::vector<double>> &columns);
  // F(a_i) = images[i] on an arbitrary frame.
  static LinearMap from_frame_images(const Frame &f,
                                     const std::vector<Multivector> &images);

  const Signature &algebra() const noexcept { return sig_; }
  int dimension() const noexcept { return sig_.n(); }
  const std::vector<Multivector> &images() const noexcept { return images_; }
  const Multivector &image(int index) const {
    return images_.at(static_cast<std::size_t>(index - 1));
  }
  // matrix()[i][j] = e_(i+1) component of F(e_(j+1)).
  std::vector<std::vector<double>> matrix() const;

  friend LinearMap operator+(const LinearMap &a, const LinearMap &b);
  friend LinearMap operator-(const LinearMap &a, const LinearMap &b);
  friend LinearMap operator*(double s, const LinearMap &a);

private:
  Signature sig_;
  std::vector<Multivector> images_;
};

bool approx_equal(const LinearMap &a, const LinearMap &b, double tol);

// Outermorphism: F(a_1 ^ .. ^ a_r) = F(a_1) ^ .. ^ F(a_r), F(scalar) =
// scalar. Errc::algebra_mismatch.
Multivector apply(const LinearMap &f, const Multivector &a);
// (G o F)(a) = G(F(a))
LinearMap compose(const LinearMap &g, const LinearMap &f);

// <adj(F)(v) * u> = <v * F(u)>.
LinearMap adjoint(const LinearMap &f);

struct SymmetricSkew {
  LinearMap symmetric;
  LinearMap skew;
};
SymmetricSkew symmetric_skew_split(const LinearMap &f);

bool is_symmetric(const LinearMap &f);
bool is_skew(const LinearMap &f);
bool is_normal(const LinearMap &f);
bool is_isometry(const LinearMap &f);

// A_2 = 1/2 sum_i a^i ^ F(a_i), so that F(a) = a <| A_2.
// Errc::not_skew.
Multivector skew_to_bivector(const LinearMap &f);
// a -> a <| A_2 for a bivector A_2. Errc::non_bivector.
LinearMap skew_from_bivector(const Multivector &bivector);

// F(I) = det(F) I.
double determinant(const LinearMap &f);
// F^-1(A) = dual(adj(F)(inverse_dual(A))) / det(F). Errc::singular_map.
LinearMap operator_inverse(const LinearMap &f);

// Largest r for which some r-blade has a nonzero image.
int rank(const LinearMap &f);

// Versor V (product of invertible vectors, |V|^2 = +-1) with
// F(a) = V a^(r) V^-1. Errors: not_an_isometry, factorization_failure.
Multivector factor_isometry(const LinearMap &f);
// The isometry a -> V a^(r) V^-1.
LinearMap versor_map(const Multivector &v);

// lambda when F(A) = lambda A within tolerance. Errc::zero_blade.
std::optional<double> eigenblade_check(const LinearMap &f,
                                       const Multivector &blade);

struct Eigensystem {
  std::vector<double> values;
  Frame vectors;
};
// Eigenvalues and orthonormal eigenvectors of a symmetric map on a
// Euclidean algebra (q = 0). Errc::invalid_argument otherwise.
Eigensystem symmetric_eigensystem(const LinearMap &f);
// sum_i lambda_i <a * a^i> a_i
Multivector spectral_apply(const std::vector<double> &values,
                           const Frame &eigenvectors, const Multivector &a);

// Text form: n lines, line i is F(e_i) in canonical multivector text.
std::string format_linear_map(const LinearMap &f);
LinearMap parse_linear_map(std::string_view text, const Signature &sig);

} // namespace ga
