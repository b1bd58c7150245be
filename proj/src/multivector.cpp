#include "ga/multivector.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ga/error.hpp"

namespace ga {

namespace {

void require_same_algebra(const Multivector &a, const Multivector &b) {
  if (!(a.algebra() == b.algebra()))
    throw Error(Errc::algebra_mismatch,
                "operands belong to algebras (" +
                    std::to_string(a.algebra().p()) + "," +
                    std::to_string(a.algebra().q()) + ") and (" +
                    std::to_string(b.algebra().p()) + "," +
                    std::to_string(b.algebra().q()) + ")");
}

// Bilinear extension of blade_product, restricted to blade pairs accepted
// by `keep`. The grade filters of the derived products reduce to index-set
// tests because each blade pair multiplies to a single blade.
template <class Keep>
Multivector product(const Multivector &a, const Multivector &b, Keep keep) {
  require_same_algebra(a, b);
  const Signature &sig = a.algebra();
  std::vector<Multivector::Term> out;
  out.reserve(a.size() * b.size());
  for (const auto &ta : a.terms()) {
    for (const auto &tb : b.terms()) {
      if (!keep(ta.blade.bits, tb.blade.bits))
        continue;
      const auto [blade, sign] = blade_product(ta.blade, tb.blade, sig);
      out.push_back({blade, sign * ta.coeff * tb.coeff});
    }
  }
  return Multivector(sig, std::move(out));
}

Multivector filter_grades(const Multivector &a, auto pred) {
  std::vector<Multivector::Term> out;
  for (const auto &t : a.terms())
    if (pred(t.blade.grade()))
      out.push_back(t);
  return Multivector(a.algebra(), std::move(out));
}

} // namespace

// ------------------------------------------------------------------------

std::vector<int> GradeSet::to_vector() const {
  std::vector<int> out;
  for (std::uint64_t m = mask; m != 0; m &= m - 1)
    out.push_back(std::countr_zero(m));
  return out;
}

Multivector::Multivector(const Signature &sig, std::vector<Term> terms)
    : sig_(sig), terms_(std::move(terms)) {
  normalize();
}

void Multivector::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term &x, const Term &y) {
    return canonical_less(x.blade, y.blade);
  });
  std::size_t w = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    Term acc = terms_[i++];
    while (i < terms_.size() && terms_[i].blade == acc.blade)
      acc.coeff += terms_[i++].coeff;
    if (std::abs(acc.coeff) > sig_.tolerance() || std::isnan(acc.coeff))
      terms_[w++] = acc;
  }
  terms_.resize(w);
}

Multivector Multivector::scalar(const Signature &sig, double value) {
  return Multivector(sig, {{BasisBlade{}, value}});
}

Multivector Multivector::basis_vector(const Signature &sig, int index) {
  if (index < 1 || index > sig.n())
    throw Error(Errc::invalid_argument,
                "basis index " + std::to_string(index) + " outside 1.." +
                    std::to_string(sig.n()));
  return Multivector(sig, {{BasisBlade{1u << (index - 1)}, 1.0}});
}

Multivector Multivector::blade(const Signature &sig, BasisBlade b,
                               double coeff) {
  if ((b.bits & ~sig.full_mask()) != 0)
    throw Error(Errc::invalid_argument, "basis blade outside the algebra");
  return Multivector(sig, {{b, coeff}});
}

Multivector Multivector::vector(const Signature &sig,
                                std::span<const double> xs) {
  if (static_cast<int>(xs.size()) > sig.n())
    throw Error(Errc::invalid_argument,
                "vector has more components than the algebra dimension");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < xs.size(); ++i)
    terms.push_back({BasisBlade{1u << i}, xs[i]});
  return Multivector(sig, std::move(terms));
}

Multivector Multivector::volume_element(const Signature &sig) {
  return Multivector(sig, {{BasisBlade{sig.full_mask()}, 1.0}});
}

double Multivector::coeff(BasisBlade b) const noexcept {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), b,
      [](const Term &t, BasisBlade key) { return canonical_less(t.blade, key); });
  return (it != terms_.end() && it->blade == b) ? it->coeff : 0.0;
}

std::vector<double> Multivector::vector_part() const {
  std::vector<double> out(static_cast<std::size_t>(sig_.n()), 0.0);
  for (const auto &t : terms_)
    if (t.blade.grade() == 1)
      out[static_cast<std::size_t>(std::countr_zero(t.blade.bits))] = t.coeff;
  return out;
}

double Multivector::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (const auto &t : terms_)
    m = std::max(m, std::abs(t.coeff));
  return m;
}

GradeSet Multivector::grades() const noexcept {
  GradeSet g;
  for (const auto &t : terms_)
    g.insert(t.blade.grade());
  return g;
}

std::optional<int> Multivector::grade() const noexcept {
  const GradeSet g = grades();
  if (g.size() != 1)
    return std::nullopt;
  return std::countr_zero(g.mask);
}

bool Multivector::is_scalar() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].blade.bits == 0);
}

Multivector &Multivector::operator+=(const Multivector &other) {
  require_same_algebra(*this, other);
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  normalize();
  return *this;
}

Multivector &Multivector::operator-=(const Multivector &other) {
  require_same_algebra(*this, other);
  for (const auto &t : other.terms_)
    terms_.push_back({t.blade, -t.coeff});
  normalize();
  return *this;
}

Multivector &Multivector::operator*=(double s) {
  for (auto &t : terms_)
    t.coeff *= s;
  normalize();
  return *this;
}

Multivector operator+(Multivector a, double s) {
  a.terms_.push_back({BasisBlade{}, s});
  a.normalize();
  return a;
}

Multivector operator*(const Multivector &a, const Multivector &b) {
  return geometric_product(a, b);
}

bool operator==(const Multivector &a, const Multivector &b) noexcept {
  if (!(a.sig_ == b.sig_) || a.terms_.size() != b.terms_.size())
    return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].blade == b.terms_[i].blade) ||
        a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

double max_abs_diff(const Multivector &a, const Multivector &b) {
  require_same_algebra(a, b);
  double m = 0.0;
  auto ta = a.terms(), tb = b.terms();
  std::size_t i = 0, j = 0;
  while (i < ta.size() || j < tb.size()) {
    if (j == tb.size() ||
        (i < ta.size() && canonical_less(ta[i].blade, tb[j].blade))) {
      m = std::max(m, std::abs(ta[i++].coeff));
    } else if (i == ta.size() || canonical_less(tb[j].blade, ta[i].blade)) {
      m = std::max(m, std::abs(tb[j++].coeff));
    } else {
      m = std::max(m, std::abs(ta[i++].coeff - tb[j++].coeff));
    }
  }
  return m;
}

bool approx_equal(const Multivector &a, const Multivector &b, double tol) {
  return max_abs_diff(a, b) <= tol;
}

// ------------------------------------------------------------------------

Multivector geometric_product(const Multivector &a, const Multivector &b) {
  return product(a, b, [](std::uint32_t, std::uint32_t) { return true; });
}

Multivector outer_product(const Multivector &a, const Multivector &b) {
  return product(a, b,
                 [](std::uint32_t x, std::uint32_t y) { return (x & y) == 0; });
}

Multivector left_contraction(const Multivector &a, const Multivector &b) {
  return product(a, b,
                 [](std::uint32_t x, std::uint32_t y) { return (x & y) == x; });
}

Multivector right_contraction(const Multivector &a, const Multivector &b) {
  return product(a, b,
                 [](std::uint32_t x, std::uint32_t y) { return (x & y) == y; });
}

double scalar_product(const Multivector &a, const Multivector &b) {
  require_same_algebra(a, b);
  double sum = 0.0;
  for (const auto &t : a.terms()) {
    const double other = b.coeff(t.blade);
    if (other == 0.0)
      continue;
    // ~e_I e_I = product of the squares of its vectors.
    const auto [blade, sign] = blade_product(t.blade, t.blade, a.algebra());
    sum += involution_sign(Involution::reverse, t.blade.grade()) * sign *
           t.coeff * other;
  }
  return sum;
}

double norm_squared(const Multivector &a) { return scalar_product(a, a); }

Multivector commutator(const Multivector &a, const Multivector &b) {
  return 0.5 * (a * b - b * a);
}

Multivector grade_project(const Multivector &a, int r) {
  return filter_grades(a, [r](int g) { return g == r; });
}

Multivector even_part(const Multivector &a) {
  return filter_grades(a, [](int g) { return g % 2 == 0; });
}

Multivector odd_part(const Multivector &a) {
  return filter_grades(a, [](int g) { return g % 2 == 1; });
}

// ------------------------------------------------------------------------

int involution_sign(Involution kind, int r) noexcept {
  int exponent = 0;
  switch (kind) {
  case Involution::grade: exponent = r; break;
  case Involution::reverse: exponent = r * (r - 1) / 2; break;
  case Involution::clifford: exponent = r * (r + 1) / 2; break;
  }
  return (exponent % 2 == 0) ? 1 : -1;
}

Multivector involution(const Multivector &a, Involution kind) {
  std::vector<Multivector::Term> out(a.terms().begin(), a.terms().end());
  for (auto &t : out)
    t.coeff *= involution_sign(kind, t.blade.grade());
  return Multivector(a.algebra(), std::move(out));
}

Multivector grade_involution(const Multivector &a, int times) {
  return (times % 2 == 0) ? a : grade_involution(a);
}

bool is_versor(const Multivector &a) {
  if (a.is_zero())
    return false;
  const GradeSet g = a.grades();
  const std::uint64_t odd_mask = 0xAAAAAAAAAAAAAAAAull;
  if ((g.mask & odd_mask) != 0 && (g.mask & ~odd_mask) != 0)
    return false;
  const Multivector aa = a * reverse(a);
  const double scale = std::max(1.0, a.max_abs_coeff() * a.max_abs_coeff());
  for (const auto &t : aa.terms())
    if (t.blade.bits != 0 && std::abs(t.coeff) > a.algebra().tolerance() * scale)
      return false;
  return true;
}

Multivector versor_inverse(const Multivector &a) {
  if (a.is_zero())
    throw Error(Errc::null_versor, "zero has no inverse");
  if (!is_versor(a))
    throw Error(Errc::not_a_versor,
                "operand is not a versor (mixed parity or A~A not scalar)");
  const double n2 = norm_squared(a);
  if (std::abs(n2) <= a.algebra().tolerance())
    throw Error(Errc::null_versor, "versor has zero norm and is not invertible");
  return reverse(a) / n2;
}

Multivector dual(const Multivector &a) {
  const Signature &sig = a.algebra();
  if (sig.n() == 0)
    throw Error(Errc::no_volume_element,
                "the scalar-only algebra has no volume element");
  // I^-1 = ~I / |I|^2 with |I|^2 = (-1)^q.
  const double norm2 = (sig.q() % 2 == 0) ? 1.0 : -1.0;
  const Multivector inv_i =
      reverse(Multivector::volume_element(sig)) / norm2;
  return a * inv_i;
}

Multivector inverse_dual(const Multivector &a) {
  const Signature &sig = a.algebra();
  if (sig.n() == 0)
    throw Error(Errc::no_volume_element,
                "the scalar-only algebra has no volume element");
  return a * Multivector::volume_element(sig);
}

// ------------------------------------------------------------------------

Multivector exp_series(const Multivector &a) {
  const Signature &sig = a.algebra();
  double l1 = 0.0;
  for (const auto &t : a.terms())
    l1 += std::abs(t.coeff);
  int squarings = 0;
  if (l1 > 0.5)
    squarings = static_cast<int>(std::ceil(std::log2(l1 / 0.5)));
  const Multivector x = a / std::ldexp(1.0, squarings);

  // Exact-zero tolerance while summing so tiny series terms survive.
  const Signature fine = sig.with_tolerance(0.0);
  Multivector xf(fine, std::vector<Multivector::Term>(x.terms().begin(),
                                                      x.terms().end()));
  Multivector sum = Multivector::scalar(fine, 1.0);
  Multivector term = Multivector::scalar(fine, 1.0);
  constexpr int series_terms = 24;
  for (int k = 1; k < series_terms; ++k) {
    term = term * xf / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i)
    sum = sum * sum;
  return Multivector(sig, std::vector<Multivector::Term>(sum.terms().begin(),
                                                         sum.terms().end()));
}

Multivector exp_bivector(const Multivector &b, double theta) {
  const Signature &sig = b.algebra();
  if (!b.grades().subset_of(GradeSet{std::uint64_t{1} << 2}))
    throw Error(Errc::non_bivector, "exp_bivector needs a pure bivector");
  if (b.is_zero() || theta == 0.0)
    return Multivector::scalar(sig, 1.0);

  const double scale = b.max_abs_coeff() * b.max_abs_coeff();
  const Multivector bb = outer_product(b, b);
  if (bb.max_abs_coeff() > sig.tolerance() * std::max(1.0, scale))
    return exp_series(b * (-0.5 * theta));

  // Blade: B^2 is a scalar.
  const double sq = (b * b).scalar_part();
  const double half = 0.5 * theta;
  if (std::abs(sq) <= sig.tolerance())
    return 1.0 - b * half;
  const double beta = std::sqrt(std::abs(sq));
  if (sq < 0.0)
    return std::cos(beta * half) - b * (std::sin(beta * half) / beta);
  return std::cosh(beta * half) - b * (std::sinh(beta * half) / beta);
}

} // namespace ga
