#include "ga/linear_map.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "ga/error.hpp"
#include "ga/text.hpp"
#include "ga/transforms.hpp"

namespace ga {

namespace {

double scale_of(const LinearMap &f) {
  double s = 1.0;
  for (const auto &img : f.images())
    s = std::max(s, img.max_abs_coeff());
  return s;
}

Multivector basis(const Signature &sig, int i) {
  return Multivector::basis_vector(sig, i);
}

// e^i = e_i / e_i^2
Multivector reciprocal_basis(const Signature &sig, int i) {
  return basis(sig, i) / static_cast<double>(sig.metric(i));
}

} // namespace

LinearMap::LinearMap(const Signature &sig, std::vector<Multivector> images)
    : sig_(sig), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != sig_.n())
    throw Error(Errc::frame_size, "a linear map needs exactly n images");
  for (const auto &img : images_) {
    if (!(img.algebra() == sig_))
      throw Error(Errc::algebra_mismatch, "image from a different algebra");
    if (!img.is_vector())
      throw Error(Errc::non_vector, "images of vectors must be vectors");
  }
}

LinearMap LinearMap::identity(const Signature &sig) {
  std::vector<Multivector> images;
  for (int i = 1; i <= sig.n(); ++i)
    images.push_back(basis(sig, i));
  return LinearMap(sig, std::move(images));
}

LinearMap LinearMap::zero(const Signature &sig) {
  return LinearMap(sig, std::vector<Multivector>(
                            static_cast<std::size_t>(sig.n()), Multivector(sig)));
}

LinearMap LinearMap::diagonal(const Signature &sig,
                              const std::vector<double> &lambdas) {
  if (static_cast<int>(lambdas.size()) != sig.n())
    throw Error(Errc::frame_size, "diagonal needs n entries");
  std::vector<Multivector> images;
  for (int i = 1; i <= sig.n(); ++i)
    images.push_back(lambdas[static_cast<std::size_t>(i - 1)] * basis(sig, i));
  return LinearMap(sig, std::move(images));
}

LinearMap LinearMap::from_columns(const Signature &sig,
                                  const std::vector<std::vector<double>> &columns) {
  std::vector<Multivector> images;
  for (const auto &col : columns)
    images.push_back(Multivector::vector(sig, col));
  return LinearMap(sig, std::move(images));
}

LinearMap LinearMap::from_frame_images(const Frame &f,
                                       const std::vector<Multivector> &images) {
  const Signature &sig = f.algebra();
  if (f.size() != sig.n() || images.size() != f.vectors().size())
    throw Error(Errc::frame_size, "need a full frame and one image per vector");
  // e_j = sum_i (e_j * a^i) a_i
  std::vector<Multivector> out;
  for (int j = 1; j <= sig.n(); ++j) {
    Multivector img(sig);
    for (std::size_t i = 0; i < images.size(); ++i)
      img += scalar_product(basis(sig, j), f.reciprocal()[i]) * images[i];
    out.push_back(img);
  }
  return LinearMap(sig, std::move(out));
}

std::vector<std::vector<double>> LinearMap::matrix() const {
  const auto n = static_cast<std::size_t>(sig_.n());
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (std::size_t j = 0; j < n; ++j) {
    const auto col = images_[j].vector_part();
    for (std::size_t i = 0; i < n; ++i)
      m[i][j] = col[i];
  }
  return m;
}

LinearMap operator+(const LinearMap &a, const LinearMap &b) {
  if (!(a.sig_ == b.sig_))
    throw Error(Errc::algebra_mismatch, "maps on different algebras");
  std::vector<Multivector> images;
  for (std::size_t i = 0; i < a.images_.size(); ++i)
    images.push_back(a.images_[i] + b.images_[i]);
  return LinearMap(a.sig_, std::move(images));
}

LinearMap operator-(const LinearMap &a, const LinearMap &b) {
  return a + (-1.0) * b;
}

LinearMap operator*(double s, const LinearMap &a) {
  std::vector<Multivector> images;
  for (const auto &img : a.images_)
    images.push_back(s * img);
  return LinearMap(a.sig_, std::move(images));
}

bool approx_equal(const LinearMap &a, const LinearMap &b, double tol) {
  if (!(a.algebra() == b.algebra()))
    return false;
  for (std::size_t i = 0; i < a.images().size(); ++i)
    if (!approx_equal(a.images()[i], b.images()[i], tol))
      return false;
  return true;
}

// ------------------------------------------------------------------------

Multivector apply(const LinearMap &f, const Multivector &a) {
  if (!(f.algebra() == a.algebra()))
    throw Error(Errc::algebra_mismatch, "map and operand on different algebras");
  Multivector out(a.algebra());
  for (const auto &t : a.terms()) {
    Multivector img = Multivector::scalar(a.algebra(), t.coeff);
    for (std::uint32_t bits = t.blade.bits; bits != 0 && !img.is_zero();
         bits &= bits - 1)
      img = outer_product(img, f.images()[static_cast<std::size_t>(
                                   std::countr_zero(bits))]);
    out += img;
  }
  return out;
}

LinearMap compose(const LinearMap &g, const LinearMap &f) {
  std::vector<Multivector> images;
  for (const auto &img : f.images())
    images.push_back(apply(g, img));
  return LinearMap(f.algebra(), std::move(images));
}

LinearMap adjoint(const LinearMap &f) {
  const Signature &sig = f.algebra();
  std::vector<Multivector> images;
  for (int k = 1; k <= sig.n(); ++k) {
    Multivector img(sig);
    for (int j = 1; j <= sig.n(); ++j)
      img += scalar_product(basis(sig, k), f.image(j)) * reciprocal_basis(sig, j);
    images.push_back(img);
  }
  return LinearMap(sig, std::move(images));
}

SymmetricSkew symmetric_skew_split(const LinearMap &f) {
  const LinearMap adj = adjoint(f);
  return {0.5 * (f + adj), 0.5 * (f - adj)};
}

bool is_symmetric(const LinearMap &f) {
  return approx_equal(f, adjoint(f), f.algebra().tolerance() * scale_of(f));
}

bool is_skew(const LinearMap &f) {
  return approx_equal((-1.0) * f, adjoint(f),
                      f.algebra().tolerance() * scale_of(f));
}

bool is_normal(const LinearMap &f) {
  const LinearMap adj = adjoint(f);
  const double s = scale_of(f);
  return approx_equal(compose(adj, f), compose(f, adj),
                      f.algebra().tolerance() * s * s);
}

bool is_isometry(const LinearMap &f) {
  const Signature &sig = f.algebra();
  const double s = scale_of(f);
  for (int i = 1; i <= sig.n(); ++i)
    for (int j = i; j <= sig.n(); ++j) {
      const double want = (i == j) ? sig.metric(i) : 0.0;
      const double got =
          left_contraction(f.image(i), f.image(j)).scalar_part();
      if (std::abs(got - want) > sig.tolerance() * s * s)
        return false;
    }
  return true;
}

Multivector skew_to_bivector(const LinearMap &f) {
  if (!is_skew(f))
    throw Error(Errc::not_skew, "map is not skew symmetric");
  const Signature &sig = f.algebra();
  Multivector out(sig);
  for (int i = 1; i <= sig.n(); ++i)
    out += outer_product(reciprocal_basis(sig, i), f.image(i));
  return 0.5 * out;
}

LinearMap skew_from_bivector(const Multivector &bivector) {
  const Signature &sig = bivector.algebra();
  if (!bivector.grades().subset_of(GradeSet{std::uint64_t{1} << 2}))
    throw Error(Errc::non_bivector, "skew maps come from bivectors");
  std::vector<Multivector> images;
  for (int i = 1; i <= sig.n(); ++i)
    images.push_back(left_contraction(basis(sig, i), bivector));
  return LinearMap(sig, std::move(images));
}

double determinant(const LinearMap &f) {
  const Signature &sig = f.algebra();
  if (sig.n() == 0)
    return 1.0;
  return dual(apply(f, Multivector::volume_element(sig))).scalar_part();
}

LinearMap operator_inverse(const LinearMap &f) {
  const Signature &sig = f.algebra();
  const double det = determinant(f);
  double scale = 1.0;
  for (const auto &img : f.images())
    scale *= std::max(1.0, img.max_abs_coeff());
  if (std::abs(det) <= sig.tolerance() * scale)
    throw Error(Errc::singular_map, "determinant vanishes; map is singular");
  const LinearMap adj = adjoint(f);
  std::vector<Multivector> images;
  for (int i = 1; i <= sig.n(); ++i)
    images.push_back(grade_project(
        dual(apply(adj, inverse_dual(basis(sig, i)))) / det, 1));
  return LinearMap(sig, std::move(images));
}

int rank(const LinearMap &f) {
  const Signature &sig = f.algebra();
  const double s = scale_of(f);
  int best = 0;
  for (std::uint32_t bits = 1; bits <= sig.full_mask() && sig.n() > 0; ++bits) {
    const int r = std::popcount(bits);
    if (r <= best)
      continue;
    const Multivector img = apply(f, Multivector::blade(sig, BasisBlade{bits}));
    if (img.max_abs_coeff() > sig.tolerance() * std::pow(s, r))
      best = r;
  }
  return best;
}

// ------------------------------------------------------------------------

LinearMap versor_map(const Multivector &v) {
  const Signature &sig = v.algebra();
  std::vector<Multivector> images;
  for (int i = 1; i <= sig.n(); ++i)
    images.push_back(grade_project(apply_versor(basis(sig, i), v), 1));
  return LinearMap(sig, std::move(images));
}

Multivector factor_isometry(const LinearMap &f) {
  const Signature &sig = f.algebra();
  const double tol = sig.tolerance();
  if (!is_isometry(f))
    throw Error(Errc::not_an_isometry, "map does not preserve inner products");

  // Axes shorter than this are too badly conditioned to reflect along.
  const double axis_floor = std::sqrt(tol);
  Multivector versor = Multivector::scalar(sig, 1.0);
  LinearMap residual = f;
  for (int i = 1; i <= sig.n(); ++i) {
    const Multivector e = basis(sig, i);
    const Multivector u = residual.image(i);
    const Multivector d = u - e;
    if (d.max_abs_coeff() <= tol)
      continue;
    const Multivector s = u + e;
    const double d2 = std::abs(norm_squared(d));
    const double s2 = std::abs(norm_squared(s));
    if (d2 > axis_floor || (d2 > tol && d2 >= s2)) {
      // Reflection along u - e sends e to u and fixes e_1..e_(i-1).
      residual = compose(versor_map(d), residual);
      versor = versor * d;
    } else if (s2 > tol) {
      // Reflection along e then along u + e sends e to u.
      residual = compose(versor_map(e), compose(versor_map(s), residual));
      versor = versor * s * e;
    } else {
      throw Error(Errc::factorization_failure,
                  "both candidate reflection axes are null at e" +
                      std::to_string(i));
    }
  }
  const double n2 = norm_squared(versor);
  versor = versor / std::sqrt(std::abs(n2));

  const LinearMap rebuilt = versor_map(versor);
  if (!approx_equal(rebuilt, f, axis_floor))
    throw Error(Errc::factorization_failure,
                "reflection product does not reproduce the map");
  return versor;
}

std::optional<double> eigenblade_check(const LinearMap &f,
                                       const Multivector &blade) {
  if (blade.is_zero())
    throw Error(Errc::zero_blade, "eigenblade candidate is zero");
  const Multivector image = apply(f, blade);
  const Multivector::Term *lead = &blade.terms().front();
  for (const auto &t : blade.terms())
    if (std::abs(t.coeff) > std::abs(lead->coeff))
      lead = &t;
  const double lambda = image.coeff(lead->blade) / lead->coeff;
  const double scale = std::max(1.0, image.max_abs_coeff()) *
                       std::max(1.0, blade.max_abs_coeff());
  if (max_abs_diff(image, lambda * blade) > f.algebra().tolerance() * scale)
    return std::nullopt;
  return lambda;
}

Eigensystem symmetric_eigensystem(const LinearMap &f) {
  const Signature &sig = f.algebra();
  if (sig.q() != 0)
    throw Error(Errc::invalid_argument,
                "spectral decomposition is provided for Euclidean algebras only");
  if (!is_symmetric(f))
    throw Error(Errc::invalid_argument, "map is not symmetric");
  const int n = sig.n();
  const auto m = f.matrix();
  Eigen::MatrixXd mat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      mat(i, j) = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(mat);
  std::vector<double> values;
  std::vector<Multivector> vectors;
  for (int k = 0; k < n; ++k) {
    values.push_back(solver.eigenvalues()(k));
    std::vector<double> xs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      xs[static_cast<std::size_t>(i)] = solver.eigenvectors()(i, k);
    vectors.push_back(Multivector::vector(sig, xs));
  }
  return {std::move(values), reciprocal_frame(std::move(vectors))};
}

Multivector spectral_apply(const std::vector<double> &values,
                           const Frame &eigenvectors, const Multivector &a) {
  Multivector out(a.algebra());
  for (std::size_t i = 0; i < values.size(); ++i)
    out += values[i] * scalar_product(a, eigenvectors.reciprocal()[i]) *
           eigenvectors.vectors()[i];
  return out;
}

std::string format_linear_map(const LinearMap &f) {
  std::string out;
  for (const auto &img : f.images()) {
    out += format(img);
    out += '\n';
  }
  return out;
}

LinearMap parse_linear_map(std::string_view text, const Signature &sig) {
  std::vector<Multivector> images;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.empty())
      continue;
    images.push_back(parse_multivector(line, sig));
  }
  return LinearMap(sig, std::move(images));
}

} // namespace ga
