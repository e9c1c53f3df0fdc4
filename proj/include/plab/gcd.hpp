#pragma once

#include <optional>

#include "plab/laurent.hpp"

namespace plab {

/// Exact multivariate division of polynomials with nonnegative exponents.
/// Returns the quotient when `d` divides `p` with zero remainder, nullopt
/// otherwise. d must be nonzero.
std::optional<LaurentPolynomial> try_divide(const LaurentPolynomial& p, const LaurentPolynomial& d);

/// try_divide that is known to succeed; raises on a nonzero remainder.
LaurentPolynomial divide_exact(const LaurentPolynomial& p, const LaurentPolynomial& d);

/// Greatest common divisor of two polynomials with nonnegative exponents,
/// normalized so the graded-lex leading coefficient is 1. gcd(p, 0) is the
/// normalization of p; gcd(0, 0) = 0. Recursive primitive remainder
/// sequences, one variable at a time.
LaurentPolynomial gcd_multivariate(const LaurentPolynomial& p, const LaurentPolynomial& q);

/// Least common multiple, normalized monic. lcm(p, 0) = 0.
LaurentPolynomial lcm_multivariate(const LaurentPolynomial& p, const LaurentPolynomial& q);

} // namespace plab
