#pragma once

#include <optional>
#include <span>

#include "plab/gcd.hpp"
#include "plab/laurent.hpp"

namespace plab {

/// Element of the rational-function field K(x_1,...,x_n) in canonical form
///   x^V * p / q
/// where p and q are polynomials with nonnegative exponents, neither
/// divisible by any variable, gcd(p, q) = 1, and q is monic under graded-lex.
/// Equality of canonical forms is field equality, so operator== decides it.
class RationalFunction {
public:
    static RationalFunction zero(std::size_t nvars) {
        return RationalFunction(ExponentVector(nvars), LaurentPolynomial(nvars),
                                LaurentPolynomial::constant(nvars, Rational(1)));
    }
    static RationalFunction one(std::size_t nvars) { return constant(nvars, Rational(1)); }

    static RationalFunction constant(std::size_t nvars, Rational c) {
        if (c.is_zero()) return zero(nvars);
        return RationalFunction(ExponentVector(nvars),
                                LaurentPolynomial::constant(nvars, std::move(c)),
                                LaurentPolynomial::constant(nvars, Rational(1)));
    }

    static RationalFunction variable(std::size_t nvars, std::size_t k) {
        return monomial(ExponentVector::unit(nvars, k));
    }

    static RationalFunction monomial(ExponentVector e, Rational c = Rational(1)) {
        std::size_t n = e.size();
        if (c.is_zero()) return zero(n);
        return RationalFunction(std::move(e), LaurentPolynomial::constant(n, std::move(c)),
                                LaurentPolynomial::constant(n, Rational(1)));
    }

    static RationalFunction from_laurent(const LaurentPolynomial& f);

    /// Canonicalize num/den; both may be Laurent (negative exponents allowed).
    static RationalFunction quotient(const LaurentPolynomial& num, const LaurentPolynomial& den);

    std::size_t nvars() const { return mono_.size(); }
    const ExponentVector& monomial_factor() const { return mono_; }
    const LaurentPolynomial& numerator() const { return num_; }
    const LaurentPolynomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    std::optional<Rational> as_scalar() const;

    /// The function as a Laurent polynomial, when the denominator is 1.
    std::optional<LaurentPolynomial> as_laurent() const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction scaled(const Rational& c) const;
    RationalFunction inverse() const;
    RationalFunction pow(std::int64_t e) const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.mono_ == b.mono_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    /// Partial derivative with respect to variable k (0-based), quotient rule.
    RationalFunction partial(std::size_t k) const;

    /// Multiply by the monomial x^e (stays canonical, no reduction needed).
    RationalFunction shifted_by(const ExponentVector& e) const;

private:
    RationalFunction(ExponentVector mono, LaurentPolynomial num, LaurentPolynomial den)
        : mono_(std::move(mono)), num_(std::move(num)), den_(std::move(den)) {}

    ExponentVector mono_;
    LaurentPolynomial num_;
    LaurentPolynomial den_;
};

/// Rank over K(x_1,...,x_n) of the Jacobian matrix (df_i/dx_j). In
/// characteristic zero, rank = count certifies algebraic independence.
std::size_t jacobian_rank(std::span<const RationalFunction> fs);

/// Rank of a dense matrix of rational functions, by Gaussian elimination.
std::size_t matrix_rank(std::vector<std::vector<RationalFunction>> rows);

} // namespace plab
