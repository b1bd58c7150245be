#pragma once
#include <vector>

#include "ga/multivector.hpp"

namespace ga {

// Homogeneous A with A ^ A = 0 and A~A scalar (within tolerance). In
// dimensions <= 3 every homogeneous element is a blade. Factorability is
// not checked beyond these two tests.
bool is_blade(const Multivector &a);

// (B <| A) A^-1. Errors: non_blade, non_invertible_blade.
Multivector project(const Multivector &b, const Multivector &blade);
// (B ^ A) A^-1. Same errors as project.
Multivector reject(const Multivector &b, const Multivector &blade);
// A B^(r) A^-1, B grade-involuted r = grade(A) times.
Multivector reflect(const Multivector &b, const Multivector &blade);

// R = m n. Errc::non_vector, Errc::null_vector.
Multivector rotor_from_two_vectors(const Multivector &m, const Multivector &n);

// 0 for an even versor, 1 for an odd one. Errc::mixed_parity otherwise.
int versor_parity(const Multivector &v);
// V B^(r) V^-1 with r the parity of V. Errors: mixed_parity, null_versor,
// not_a_versor.
Multivector apply_versor(const Multivector &b, const Multivector &v);

// b_1 = a_1, b_(j+1) = (a_(j+1) ^ B_j) B_j^-1 with B_j = b_1 ^ .. ^ b_j.
// Errors: non_vector, dependent_input, null_intermediate_blade.
std::vector<Multivector> gram_schmidt(const std::vector<Multivector> &vs);

} // namespace ga
