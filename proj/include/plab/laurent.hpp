#pragma once

#include <map>
#include <optional>
#include <vector>

#include "plab/exponent.hpp"
#include "plab/rational.hpp"

namespace plab {

/// Sparse multivariate Laurent polynomial over the rationals: a finite map
/// from exponent vectors to nonzero coefficients. Iteration follows the
/// graded-lex order, so printing and leading-term extraction are
/// deterministic.
class LaurentPolynomial {
public:
    using TermMap = std::map<ExponentVector, Rational, GrlexLess>;

    explicit LaurentPolynomial(std::size_t nvars) : nvars_(nvars) {}

    static LaurentPolynomial constant(std::size_t nvars, Rational c) {
        LaurentPolynomial f(nvars);
        f.add_term(ExponentVector(nvars), std::move(c));
        return f;
    }

    static LaurentPolynomial monomial(ExponentVector e, Rational c = Rational(1)) {
        LaurentPolynomial f(e.size());
        f.add_term(std::move(e), std::move(c));
        return f;
    }

    static LaurentPolynomial variable(std::size_t nvars, std::size_t k) {
        return monomial(ExponentVector::unit(nvars, k));
    }

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
    }

    /// Constant value if the polynomial is a constant (incl. zero).
    std::optional<Rational> as_constant() const {
        if (terms_.empty()) return Rational(0);
        if (is_constant()) return terms_.begin()->second;
        return std::nullopt;
    }

    Rational coeff(const ExponentVector& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Accumulate a term; drops the entry when the sum cancels to zero.
    void add_term(ExponentVector e, Rational c) {
        if (e.size() != nvars_) throw DimensionError("term has wrong variable count");
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { a += b; return a; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { a -= b; return a; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    LaurentPolynomial operator-() const;

    LaurentPolynomial scaled(const Rational& c) const;
    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) { return !(a == b); }

    /// Partial derivative with respect to variable k (0-based).
    LaurentPolynomial partial(std::size_t k) const;

    /// Smallest / largest exponent of variable k over the support. Requires a
    /// nonzero polynomial.
    std::int64_t min_exp(std::size_t k) const;
    std::int64_t max_exp(std::size_t k) const;

    bool depends_on(std::size_t k) const;
    bool has_negative_exponent() const;

    /// Multiply by the monomial x^e.
    LaurentPolynomial shifted(const ExponentVector& e) const;

    /// Leading term under graded-lex (the maximum). Requires nonzero.
    const std::pair<const ExponentVector, Rational>& leading() const;

    /// Polynomial consisting of the terms with exponent d in variable k, with
    /// that exponent zeroed out (same ambient variable count).
    LaurentPolynomial coeff_of_power(std::size_t k, std::int64_t d) const;

    /// Remove coordinate k entirely; every term must have exponent 0 there.
    LaurentPolynomial dropped_var(std::size_t k) const;

    /// Relabel coordinates: new coordinate k is old coordinate perm[k].
    LaurentPolynomial permuted(const std::vector<std::size_t>& perm) const;

private:
    std::size_t nvars_;
    TermMap terms_;
};

} // namespace plab
