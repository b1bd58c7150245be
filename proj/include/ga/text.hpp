#pragma once
#include <string>
#include <string_view>
#include <vector>

#include "ga/multivector.hpp"

namespace ga {

// Canonical text form: terms in canonical blade order joined by " + " or
// " - ", each "<coeff>*e<i><j>..." with ascending indices and the scalar
// term as a bare number, e.g. "1 - 0.5*e12 + 2*e134". Zero prints as "0".
// Coefficients use the shortest representation that reads back exactly.
// In algebras with n >= 10 blade indices are separated by '_' ("e1_10").
std::string format(const Multivector &a);
std::string format_blade_name(BasisBlade b, const Signature &sig);
std::string format_number(double x);

// Index list of a blade name's suffix (the text after 'e'). With n <= 9
// each digit is one index; with n >= 10 the suffix is a single index.
// Underscores always separate indices. Order and repeats are preserved.
// Throws Errc::unknown_basis_index for indices outside 1..n.
std::vector<int> parse_blade_indices(std::string_view suffix,
                                     const Signature &sig);

// Reads the canonical form back. Throws Errc::syntax_error or
// Errc::unknown_basis_index.
Multivector parse_multivector(std::string_view text, const Signature &sig);

// "p,q" -> (p, q); throws Errc::syntax_error.
Signature parse_algebra_spec(std::string_view text,
                             double tolerance = default_tolerance);

} // namespace ga
