#include "ga/frame.hpp"

#include <algorithm>
#include <cmath>

#include "ga/error.hpp"

namespace ga {

IndexString::IndexString(std::vector<int> indices)
    : indices_(std::move(indices)) {
  for (std::size_t i = 0; i < indices_.size(); ++i)
    if (indices_[i] < 1 || (i > 0 && indices_[i] <= indices_[i - 1]))
      throw Error(Errc::invalid_argument,
                  "index string must be strictly increasing from 1");
}

std::string IndexString::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i > 0)
      out += ',';
    out += std::to_string(indices_[i]);
  }
  return out + ")";
}

namespace {

Multivector wedge_all(const Signature &sig,
                      const std::vector<Multivector> &vs,
                      const std::vector<int> &indices) {
  Multivector out = Multivector::scalar(sig, 1.0);
  for (int i : indices)
    out = outer_product(out, vs[static_cast<std::size_t>(i - 1)]);
  return out;
}

std::vector<int> all_but(int count, int skipped) {
  std::vector<int> out;
  for (int i = 1; i <= count; ++i)
    if (i != skipped)
      out.push_back(i);
  return out;
}

// Subsets of {1..r} in canonical order.
std::vector<BasisBlade> subsets(int r) {
  std::vector<BasisBlade> out;
  for (std::uint32_t bits = 0; bits < (1u << r); ++bits)
    out.push_back(BasisBlade{bits});
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

} // namespace

Frame reciprocal_frame(std::vector<Multivector> vectors) {
  if (vectors.empty())
    throw Error(Errc::frame_size, "a frame needs at least one vector");
  const Signature sig = vectors.front().algebra();
  if (static_cast<int>(vectors.size()) > sig.n())
    throw Error(Errc::frame_size, "more frame vectors than dimensions");
  double scale = 1.0;
  for (const auto &v : vectors) {
    if (!(v.algebra() == sig))
      throw Error(Errc::algebra_mismatch, "frame vectors from different algebras");
    if (!v.is_vector())
      throw Error(Errc::non_vector, "frame members must be vectors");
    scale *= std::max(1.0, v.max_abs_coeff());
  }

  const int r = static_cast<int>(vectors.size());
  Frame f(sig);
  f.volume_ = wedge_all(sig, vectors, all_but(r, 0));
  if (f.volume_.max_abs_coeff() <= sig.tolerance() * scale)
    throw Error(Errc::dependent_vectors, "frame vectors are linearly dependent");
  const double n2 = norm_squared(f.volume_);
  if (std::abs(n2) <= sig.tolerance())
    throw Error(Errc::null_volume,
                "frame volume is null so the reciprocal frame is undefined");
  const Multivector volume_inv = reverse(f.volume_) / n2;

  for (int i = 1; i <= r; ++i) {
    const double sign = (i % 2 == 1) ? 1.0 : -1.0;
    f.reciprocal_.push_back(sign * (wedge_all(sig, vectors, all_but(r, i)) *
                                    volume_inv));
  }
  f.vectors_ = std::move(vectors);
  return f;
}

Frame standard_frame(const Signature &sig) {
  if (sig.n() == 0) {
    // The empty frame of the scalar algebra; its volume is the unit scalar.
    Frame f(sig);
    f.volume_ = Multivector::scalar(sig, 1.0);
    return f;
  }
  std::vector<Multivector> vs;
  for (int i = 1; i <= sig.n(); ++i)
    vs.push_back(Multivector::basis_vector(sig, i));
  return reciprocal_frame(std::move(vs));
}

Multivector Frame::reciprocal_volume() const {
  return wedge_all(sig_, reciprocal_, all_but(size(), 0));
}

Frame Frame::reciprocal_frame() const {
  if (reciprocal_.empty())
    return *this;
  return ga::reciprocal_frame(reciprocal_);
}

std::vector<BasisEntry> basis_blade_table(const Frame &f) {
  std::vector<BasisEntry> out;
  for (BasisBlade b : subsets(f.size())) {
    const auto idx = b.indices();
    out.push_back({IndexString(idx), wedge_all(f.algebra(), f.vectors(), idx),
                   wedge_all(f.algebra(), f.reciprocal(), idx)});
  }
  return out;
}

Multivector reciprocal_blade_by_complement(const Frame &f,
                                           const IndexString &index) {
  const int r = f.size();
  std::uint32_t bits = 0;
  int exponent = 0;
  for (int i : index.indices()) {
    if (i > r)
      throw Error(Errc::invalid_argument, "index exceeds frame size");
    bits |= 1u << (i - 1);
    exponent += i - 1;
  }
  const auto complement = BasisBlade{~bits & ((1u << r) - 1u)}.indices();
  const Multivector &vol = f.volume();
  const Multivector volume_inv = reverse(vol) / norm_squared(vol);
  const double sign = (exponent % 2 == 0) ? 1.0 : -1.0;
  return sign * (wedge_all(f.algebra(), f.vectors(), complement) * volume_inv);
}

Components components(const Multivector &a, const Frame &f, Expansion side) {
  Components out;
  for (const auto &entry : basis_blade_table(f)) {
    const Multivector &pair =
        side == Expansion::direct ? entry.reciprocal : entry.blade;
    const double c = scalar_product(a, pair);
    if (std::abs(c) > f.algebra().tolerance())
      out.emplace(entry.index, c);
  }
  return out;
}

Multivector reconstruct(const Components &c, const Frame &f, Expansion side) {
  const auto &basis = side == Expansion::direct ? f.vectors() : f.reciprocal();
  Multivector out(f.algebra());
  for (const auto &[index, value] : c) {
    for (int i : index.indices())
      if (i > f.size())
        throw Error(Errc::invalid_argument, "index exceeds frame size");
    out += value * wedge_all(f.algebra(), basis, index.indices());
  }
  return out;
}

Multivector expand_by_vectors(const Multivector &a_r, const Frame &f,
                              Expansion side) {
  const auto grade = a_r.grade();
  if (!grade || *grade < 1)
    throw Error(Errc::non_homogeneous,
                "expansion needs a homogeneous multivector of grade >= 1");
  const auto &lower = side == Expansion::direct ? f.vectors() : f.reciprocal();
  const auto &upper = side == Expansion::direct ? f.reciprocal() : f.vectors();
  Multivector out(f.algebra());
  for (std::size_t i = 0; i < lower.size(); ++i)
    out += outer_product(upper[i], left_contraction(lower[i], a_r));
  return out;
}

Multivector frame_sum(const Frame &f) {
  Multivector out(f.algebra());
  for (std::size_t i = 0; i < f.vectors().size(); ++i)
    out += f.vectors()[i] * f.reciprocal()[i];
  return out;
}

Multivector project_onto_frame(const Multivector &b, const Frame &f) {
  return reconstruct(components(b, f), f);
}

} // namespace ga
