#include "plab/laurent.hpp"

namespace plab {

namespace {
void check_compatible(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.nvars() != b.nvars())
        throw DimensionError("polynomials over different variable counts");
}
} // namespace

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    check_compatible(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
    check_compatible(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    check_compatible(a, b);
    LaurentPolynomial r(a.nvars());
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPolynomial LaurentPolynomial::scaled(const Rational& c) const {
    LaurentPolynomial r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

LaurentPolynomial LaurentPolynomial::partial(std::size_t k) const {
    if (k >= nvars_) throw DimensionError("partial: variable index out of range");
    LaurentPolynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[k] == 0) continue;
        r.add_term(e - ExponentVector::unit(nvars_, k), c * Rational(static_cast<long long>(e[k])));
    }
    return r;
}

std::int64_t LaurentPolynomial::min_exp(std::size_t k) const {
    if (k >= nvars_) throw DimensionError("min_exp: variable index out of range");
    if (terms_.empty()) throw Error("min_exp of zero polynomial");
    bool first = true;
    std::int64_t m = 0;
    for (const auto& [e, c] : terms_) {
        if (first || e[k] < m) m = e[k];
        first = false;
    }
    return m;
}

std::int64_t LaurentPolynomial::max_exp(std::size_t k) const {
    if (k >= nvars_) throw DimensionError("max_exp: variable index out of range");
    if (terms_.empty()) throw Error("max_exp of zero polynomial");
    bool first = true;
    std::int64_t m = 0;
    for (const auto& [e, c] : terms_) {
        if (first || e[k] > m) m = e[k];
        first = false;
    }
    return m;
}

bool LaurentPolynomial::depends_on(std::size_t k) const {
    for (const auto& [e, c] : terms_)
        if (e[k] != 0) return true;
    return false;
}

bool LaurentPolynomial::has_negative_exponent() const {
    for (const auto& [e, c] : terms_)
        for (std::size_t k = 0; k < nvars_; ++k)
            if (e[k] < 0) return true;
    return false;
}

LaurentPolynomial LaurentPolynomial::shifted(const ExponentVector& e) const {
    LaurentPolynomial r(nvars_);
    for (const auto& [t, c] : terms_) r.terms_.emplace(t + e, c);
    return r;
}

const std::pair<const ExponentVector, Rational>& LaurentPolynomial::leading() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return *terms_.rbegin();
}

LaurentPolynomial LaurentPolynomial::coeff_of_power(std::size_t k, std::int64_t d) const {
    if (k >= nvars_) throw DimensionError("coeff_of_power: variable index out of range");
    LaurentPolynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[k] != d) continue;
        ExponentVector t = e;
        t.set(k, 0);
        r.terms_.emplace(std::move(t), c);
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::dropped_var(std::size_t k) const {
    if (k >= nvars_) throw DimensionError("dropped_var: variable index out of range");
    LaurentPolynomial r(nvars_ - 1);
    for (const auto& [e, c] : terms_) {
        if (e[k] != 0) throw Error("dropped_var: polynomial depends on the dropped variable");
        r.terms_.emplace(e.erased(k), c);
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::permuted(const std::vector<std::size_t>& perm) const {
    if (perm.size() != nvars_) throw DimensionError("permuted: permutation has wrong length");
    LaurentPolynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        ExponentVector t(nvars_);
        for (std::size_t k = 0; k < nvars_; ++k) t.set(k, e.at(perm[k]));
        r.terms_.emplace(std::move(t), c);
    }
    return r;
}

} // namespace plab
