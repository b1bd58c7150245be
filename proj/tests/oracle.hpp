#pragma once
// Reference implementations that share nothing with the library's product
// tables: blades are written as words of basis vectors and reduced one
// adjacent transposition or contraction at a time.
#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "ga/multivector.hpp"

namespace oracle {

struct Word {
  std::vector<int> indices; // ascending, distinct after reduction
  double sign = 1.0;
};

inline Word reduce(std::vector<int> w, const ga::Signature &sig) {
  double sign = 1.0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == w[i + 1]) {
        sign *= sig.metric(w[i]);
        w.erase(w.begin() + static_cast<long>(i),
                w.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
      if (w[i] > w[i + 1]) {
        std::swap(w[i], w[i + 1]);
        sign = -sign;
        changed = true;
        break;
      }
    }
  }
  return {w, sign};
}

inline std::vector<int> word_of(std::uint32_t bits) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if ((bits >> i) & 1u)
      out.push_back(i + 1);
  return out;
}

inline std::uint32_t bits_of(const std::vector<int> &word) {
  std::uint32_t out = 0;
  for (int i : word)
    out |= 1u << (i - 1);
  return out;
}

// Dense map blade -> coefficient, with no cutoff.
using Dense = std::map<std::uint32_t, double>;

inline Dense geometric(const ga::Multivector &a, const ga::Multivector &b) {
  const ga::Signature &sig = a.algebra();
  Dense out;
  for (const auto &x : a.terms())
    for (const auto &y : b.terms()) {
      std::vector<int> w = word_of(x.blade.bits);
      const std::vector<int> rhs = word_of(y.blade.bits);
      w.insert(w.end(), rhs.begin(), rhs.end());
      const Word red = reduce(w, sig);
      out[bits_of(red.indices)] += red.sign * x.coeff * y.coeff;
    }
  return out;
}

inline ga::Multivector to_multivector(const Dense &d, const ga::Signature &sig) {
  std::vector<ga::Multivector::Term> terms;
  for (const auto &[bits, c] : d)
    terms.push_back({ga::BasisBlade{bits}, c});
  return ga::Multivector(sig, std::move(terms));
}

inline ga::Multivector geometric_mv(const ga::Multivector &a,
                                    const ga::Multivector &b) {
  return to_multivector(geometric(a, b), a.algebra());
}

inline int popcount(std::uint32_t x) {
  int c = 0;
  for (; x; x >>= 1)
    c += static_cast<int>(x & 1u);
  return c;
}

enum class GradeRule { outer, left, right, scalar };

// Products defined grade by grade from the geometric product:
//   outer  <A_r B_s>_(r+s)
//   left   <A_r B_s>_(s-r), zero for r > s
//   right  <A_r B_s>_(r-s), zero for s > r
//   scalar <A_r B_s>_0
inline ga::Multivector graded(const ga::Multivector &a, const ga::Multivector &b,
                              GradeRule rule) {
  const ga::Signature &sig = a.algebra();
  Dense out;
  for (const auto &x : a.terms())
    for (const auto &y : b.terms()) {
      const int r = popcount(x.blade.bits), s = popcount(y.blade.bits);
      int want;
      switch (rule) {
      case GradeRule::outer: want = r + s; break;
      case GradeRule::left: want = s - r; break;
      case GradeRule::right: want = r - s; break;
      default: want = 0; break;
      }
      if (want < 0)
        continue;
      ga::Multivector xa(sig, {{x.blade, x.coeff}});
      ga::Multivector yb(sig, {{y.blade, y.coeff}});
      for (const auto &[bits, c] : geometric(xa, yb))
        if (popcount(bits) == want)
          out[bits] += c;
    }
  return to_multivector(out, sig);
}

// Reverse by reversing each word and reducing it again.
inline ga::Multivector reverse(const ga::Multivector &a) {
  Dense out;
  for (const auto &x : a.terms()) {
    std::vector<int> w = word_of(x.blade.bits);
    std::reverse(w.begin(), w.end());
    const Word red = reduce(w, a.algebra());
    out[bits_of(red.indices)] += red.sign * x.coeff;
  }
  return to_multivector(out, a.algebra());
}

} // namespace oracle
