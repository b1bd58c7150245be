#pragma once
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "ga/multivector.hpp"

namespace ga {

// Strictly increasing list of 1-based frame indices; empty is the scalar
// slot. Ordered by length, then lexicographically.
class IndexString {
public:
  IndexString() = default;
  // Throws Errc::invalid_argument unless strictly ascending and >= 1.
  explicit IndexString(std::vector<int> indices);

  const std::vector<int> &indices() const noexcept { return indices_; }
  int size() const noexcept { return static_cast<int>(indices_.size()); }
  bool empty() const noexcept { return indices_.empty(); }
  std::string to_string() const;

  friend bool operator==(const IndexString &, const IndexString &) = default;
  friend std::strong_ordering operator<=>(const IndexString &a,
                                          const IndexString &b) noexcept {
    if (auto c = a.indices_.size() <=> b.indices_.size(); c != 0)
      return c;
    return a.indices_ <=> b.indices_;
  }

private:
  std::vector<int> indices_;
};

// Ordered independent vectors a_1..a_r with their reciprocal vectors a^i
// (a^i <| a_j = delta) and volume a_N = a_1 ^ ... ^ a_r, all computed at
// construction. A full frame has r = n; smaller r spans a subspace.
class Frame {
public:
  const Signature &algebra() const noexcept { return sig_; }
  int size() const noexcept { return static_cast<int>(vectors_.size()); }
  const std::vector<Multivector> &vectors() const noexcept { return vectors_; }
  const std::vector<Multivector> &reciprocal() const noexcept {
    return reciprocal_;
  }
  const Multivector &volume() const noexcept { return volume_; }
  // a^N = a^1 ^ ... ^ a^r
  Multivector reciprocal_volume() const;
  // The frame built from the reciprocal vectors.
  Frame reciprocal_frame() const;

private:
  friend Frame reciprocal_frame(std::vector<Multivector> vectors);
  friend Frame standard_frame(const Signature &sig);
  Frame(Signature sig) : sig_(sig), volume_(sig) {}

  Signature sig_;
  std::vector<Multivector> vectors_;
  std::vector<Multivector> reciprocal_;
  Multivector volume_;
};

// a^i = (-1)^(i-1) (a_1 ^ .. ^ a_i(omitted) ^ .. ^ a_r) a_N^-1.
// Errors: frame_size (empty list or more vectors than n), non_vector,
// dependent_vectors (a_N = 0), null_volume (|a_N|^2 = 0).
Frame reciprocal_frame(std::vector<Multivector> vectors);

// Orthonormal frame e_1..e_n of the algebra; empty when n = 0.
Frame standard_frame(const Signature &sig);

struct BasisEntry {
  IndexString index;
  Multivector blade;      // a_I
  Multivector reciprocal; // a^I
};

// All 2^r entries (a_I, a^I), by grade then lexicographic index order.
std::vector<BasisEntry> basis_blade_table(const Frame &f);

// a^I from the complement formula (-1)^sum(i_j - 1) a_{I^c} a_N^-1; full
// frames only.
Multivector reciprocal_blade_by_complement(const Frame &f,
                                           const IndexString &index);

// Which side of the pairing carries the expansion coefficients.
enum class Expansion {
  direct,    // A = sum A^I a_I, A^I = A * a^I
  reciprocal // A = sum A_I a^I, A_I = A * a_I
};

using Components = std::map<IndexString, double>;

// Coefficients with magnitude <= tolerance are omitted.
Components components(const Multivector &a, const Frame &f,
                      Expansion side = Expansion::direct);
Multivector reconstruct(const Components &c, const Frame &f,
                        Expansion side = Expansion::direct);

// sum_i a^i ^ (a_i <| A_r), which equals r A_r. With
// Expansion::reciprocal the frame and its reciprocal swap roles.
// Errc::non_homogeneous unless A is homogeneous of grade >= 1.
Multivector expand_by_vectors(const Multivector &a_r, const Frame &f,
                              Expansion side = Expansion::direct);

// sum_i a_i a^i (equals the frame size).
Multivector frame_sum(const Frame &f);

// sum_I (B * a^I) a_I: the orthogonal projection of B into the span of
// the frame.
Multivector project_onto_frame(const Multivector &b, const Frame &f);

} // namespace ga
