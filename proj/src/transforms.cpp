#include "ga/transforms.hpp"

#include <algorithm>
#include <cmath>

#include "ga/error.hpp"

namespace ga {

namespace {

double scale_of(const Multivector &a) { return std::max(1.0, a.max_abs_coeff()); }

bool negligible(const Multivector &a, double scale) {
  return a.max_abs_coeff() <= a.algebra().tolerance() * scale;
}

// Inverse of an invertible blade, validating the blade first.
Multivector blade_inverse(const Multivector &blade) {
  if (blade.is_zero())
    throw Error(Errc::non_invertible_blade, "the zero blade has no inverse");
  if (!is_blade(blade))
    throw Error(Errc::non_blade, "operand is not a blade");
  const double n2 = norm_squared(blade);
  if (std::abs(n2) <= blade.algebra().tolerance())
    throw Error(Errc::non_invertible_blade,
                "blade is null (degenerate subspace) and has no inverse");
  return reverse(blade) / n2;
}

Multivector require_vector(const Multivector &v, const char *what) {
  if (!v.is_vector())
    throw Error(Errc::non_vector, std::string(what) + " must be a vector");
  return v;
}

} // namespace

bool is_blade(const Multivector &a) {
  const auto grade = a.grade();
  if (!grade)
    return false;
  if (a.algebra().n() <= 3 || *grade <= 1 || *grade >= a.algebra().n() - 1)
    return true;
  const double s = scale_of(a) * scale_of(a);
  if (!negligible(outer_product(a, a), s))
    return false;
  return negligible(a * reverse(a) - (a * reverse(a)).scalar_part(), s);
}

Multivector project(const Multivector &b, const Multivector &blade) {
  return left_contraction(b, blade) * blade_inverse(blade);
}

Multivector reject(const Multivector &b, const Multivector &blade) {
  return outer_product(b, blade) * blade_inverse(blade);
}

Multivector reflect(const Multivector &b, const Multivector &blade) {
  const Multivector inv = blade_inverse(blade);
  return blade * grade_involution(b, *blade.grade()) * inv;
}

Multivector rotor_from_two_vectors(const Multivector &m, const Multivector &n) {
  require_vector(m, "first rotor factor");
  require_vector(n, "second rotor factor");
  for (const Multivector *v : {&m, &n})
    if (std::abs(norm_squared(*v)) <= v->algebra().tolerance())
      throw Error(Errc::null_vector, "rotor factors must be invertible vectors");
  return m * n;
}

int versor_parity(const Multivector &v) {
  if (v.is_zero())
    throw Error(Errc::null_versor, "the zero multivector is not a versor");
  const Multivector even = even_part(v);
  if (even.is_zero())
    return 1;
  if (even.size() == v.size())
    return 0;
  throw Error(Errc::mixed_parity, "versor mixes even and odd grades");
}

Multivector apply_versor(const Multivector &b, const Multivector &v) {
  const int parity = versor_parity(v);
  return v * grade_involution(b, parity) * versor_inverse(v);
}

std::vector<Multivector> gram_schmidt(const std::vector<Multivector> &vs) {
  std::vector<Multivector> out;
  if (vs.empty())
    return out;
  const Signature &sig = vs.front().algebra();
  const double tol = sig.tolerance();

  out.push_back(require_vector(vs.front(), "gram_schmidt input"));
  if (negligible(out.front(), 1.0))
    throw Error(Errc::dependent_input, "first input vector is zero");
  Multivector span = out.front();
  for (std::size_t j = 1; j < vs.size(); ++j) {
    const Multivector &a = require_vector(vs[j], "gram_schmidt input");
    const Multivector wedge = outer_product(a, span);
    if (negligible(wedge, scale_of(a) * scale_of(span)))
      throw Error(Errc::dependent_input,
                  "input vector " + std::to_string(j + 1) +
                      " lies in the span of the previous ones");
    const double n2 = norm_squared(span);
    if (std::abs(n2) <= tol)
      throw Error(Errc::null_intermediate_blade,
                  "intermediate span is null; orthogonalisation is undefined");
    const Multivector b = grade_project(wedge * reverse(span) / n2, 1);
    out.push_back(b);
    span = outer_product(span, b);
  }
  return out;
}

} // namespace ga
