#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mutalg/laurent.hpp"

namespace mutalg {

// Operations on ordinary polynomials, i.e. LaurentPolynomial values whose
// exponents are all nonnegative. Each throws mutalg::Error when handed a
// polynomial with a negative exponent.

/// q with f = q*g exactly, or nullopt when g does not divide f.
std::optional<LaurentPolynomial> exact_divide(const LaurentPolynomial& f,
                                              const LaurentPolynomial& g);

/// Greatest common divisor, monic under the graded lexicographic order.
/// Computed with a recursive primitive polynomial remainder sequence.
LaurentPolynomial gcd(const LaurentPolynomial& f, const LaurentPolynomial& g);

/// Divides by the leading coefficient. Zero stays zero.
LaurentPolynomial make_monic(const LaurentPolynomial& f);

/// Coefficients of f as a polynomial in `var`; entry i multiplies var^i.
std::vector<LaurentPolynomial> coefficients_in(const LaurentPolynomial& f, std::size_t var);

/// gcd of the coefficients of f viewed as a polynomial in `var`.
LaurentPolynomial content_in(const LaurentPolynomial& f, std::size_t var);

}  // namespace mutalg
