#pragma once
#include <cmath>
#include <random>
#include <vector>

#include "ga/multivector.hpp"

namespace test {

struct Rng {
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  double uniform(double lo = -1.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  }
  int integer(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(gen);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(gen); }

  std::mt19937_64 gen;
};

// Each basis blade present with probability `density`.
inline ga::Multivector random_multivector(Rng &rng, const ga::Signature &sig,
                                          double density = 0.7) {
  std::vector<ga::Multivector::Term> terms;
  for (std::uint32_t bits = 0; bits <= sig.full_mask(); ++bits)
    if (rng.coin(density))
      terms.push_back({ga::BasisBlade{bits}, rng.uniform()});
  return ga::Multivector(sig, std::move(terms));
}

inline ga::Multivector random_homogeneous(Rng &rng, const ga::Signature &sig,
                                          int r) {
  std::vector<ga::Multivector::Term> terms;
  for (std::uint32_t bits = 0; bits <= sig.full_mask(); ++bits)
    if (ga::BasisBlade{bits}.grade() == r)
      terms.push_back({ga::BasisBlade{bits}, rng.uniform()});
  return ga::Multivector(sig, std::move(terms));
}

inline ga::Multivector random_vector(Rng &rng, const ga::Signature &sig) {
  return random_homogeneous(rng, sig, 1);
}

// Vector whose square is at least `margin` away from zero.
inline ga::Multivector random_nonnull_vector(Rng &rng, const ga::Signature &sig,
                                             double margin = 0.1) {
  while (true) {
    ga::Multivector v = random_vector(rng, sig);
    if (std::abs(ga::norm_squared(v)) > margin)
      return v;
  }
}

// Outer product of r random vectors.
inline ga::Multivector random_blade(Rng &rng, const ga::Signature &sig, int r) {
  ga::Multivector out = ga::Multivector::scalar(sig, 1.0);
  for (int i = 0; i < r; ++i)
    out = ga::outer_product(out, random_vector(rng, sig));
  return out;
}

// Blade with |A^2| bounded away from zero.
inline ga::Multivector random_invertible_blade(Rng &rng,
                                               const ga::Signature &sig, int r,
                                               double margin = 0.05) {
  while (true) {
    ga::Multivector b = random_blade(rng, sig, r);
    if (std::abs(ga::norm_squared(b)) > margin)
      return b;
  }
}

// Product of `count` non-null vectors.
inline ga::Multivector random_versor(Rng &rng, const ga::Signature &sig,
                                     int count) {
  ga::Multivector out = ga::Multivector::scalar(sig, 1.0);
  for (int i = 0; i < count; ++i)
    out = out * random_nonnull_vector(rng, sig, 0.2);
  return out;
}

// Columns of a random matrix with entries in [-1, 1].
inline std::vector<std::vector<double>> random_columns(Rng &rng, int n) {
  std::vector<std::vector<double>> cols(static_cast<std::size_t>(n),
                                        std::vector<double>(n));
  for (auto &c : cols)
    for (auto &x : c)
      x = rng.uniform();
  return cols;
}

} // namespace test
