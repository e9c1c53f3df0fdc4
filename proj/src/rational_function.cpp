#include "plab/rational_function.hpp"

namespace plab {

namespace {
void check_compatible(const RationalFunction& a, const RationalFunction& b) {
    if (a.nvars() != b.nvars())
        throw DimensionError("rational functions over different variable counts");
}
} // namespace

RationalFunction RationalFunction::from_laurent(const LaurentPolynomial& f) {
    return quotient(f, LaurentPolynomial::constant(f.nvars(), Rational(1)));
}

RationalFunction RationalFunction::quotient(const LaurentPolynomial& num,
                                            const LaurentPolynomial& den) {
    if (num.nvars() != den.nvars()) throw DimensionError("quotient: variable counts differ");
    const std::size_t n = num.nvars();
    if (den.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
    if (num.is_zero()) return zero(n);

    // Pull the per-variable valuations out into the monomial factor.
    ExponentVector vn(n), vd(n);
    for (std::size_t k = 0; k < n; ++k) {
        vn.set(k, num.min_exp(k));
        vd.set(k, den.min_exp(k));
    }
    LaurentPolynomial p = num.shifted(-vn);
    LaurentPolynomial q = den.shifted(-vd);

    if (!p.is_constant() && !q.is_constant()) {
        LaurentPolynomial g = gcd_multivariate(p, q);
        if (!g.is_constant()) {
            p = divide_exact(p, g);
            q = divide_exact(q, g);
        }
    }

    const Rational& lc = q.leading().second;
    if (!lc.is_one()) {
        Rational inv = lc.inverse();
        p = p.scaled(inv);
        q = q.scaled(inv);
    }
    return RationalFunction(vn - vd, std::move(p), std::move(q));
}

bool RationalFunction::is_one() const {
    auto c = as_scalar();
    return c && c->is_one();
}

std::optional<Rational> RationalFunction::as_scalar() const {
    if (is_zero()) return Rational(0);
    if (!mono_.is_zero() || !den_.is_constant()) return std::nullopt;
    return num_.as_constant();
}

std::optional<LaurentPolynomial> RationalFunction::as_laurent() const {
    if (!den_.is_constant()) return std::nullopt;
    return num_.shifted(mono_);
}

RationalFunction RationalFunction::operator-() const {
    return RationalFunction(mono_, -num_, den_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    check_compatible(a, b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const std::size_t n = a.nvars();
    ExponentVector w(n);
    for (std::size_t k = 0; k < n; ++k)
        w.set(k, std::min(a.mono_[k], b.mono_[k]));
    LaurentPolynomial lhs = (a.num_ * b.den_).shifted(a.mono_ - w);
    LaurentPolynomial rhs = (b.num_ * a.den_).shifted(b.mono_ - w);
    return RationalFunction::quotient(lhs + rhs, a.den_ * b.den_).shifted_by(w);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    check_compatible(a, b);
    if (a.is_zero() || b.is_zero()) return RationalFunction::zero(a.nvars());
    return RationalFunction::quotient(a.num_ * b.num_, a.den_ * b.den_)
        .shifted_by(a.mono_ + b.mono_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    check_compatible(a, b);
    if (b.is_zero()) throw DivisionByZeroError("division by the zero rational function");
    if (a.is_zero()) return RationalFunction::zero(a.nvars());
    return RationalFunction::quotient(a.num_ * b.den_, a.den_ * b.num_)
        .shifted_by(a.mono_ - b.mono_);
}

RationalFunction RationalFunction::scaled(const Rational& c) const {
    if (c.is_zero()) return zero(nvars());
    return RationalFunction(mono_, num_.scaled(c), den_);
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of the zero rational function");
    return quotient(den_, num_).shifted_by(-mono_);
}

RationalFunction RationalFunction::pow(std::int64_t e) const {
    if (e == INT64_MIN) throw OverflowError("exponent out of range");
    if (e < 0) return inverse().pow(-e);
    RationalFunction acc = one(nvars());
    RationalFunction base = *this;
    std::uint64_t u = static_cast<std::uint64_t>(e);
    while (u) {
        if (u & 1) acc = acc * base;
        u >>= 1;
        if (u) base = base * base;
    }
    return acc;
}

RationalFunction RationalFunction::partial(std::size_t k) const {
    if (k >= nvars()) throw DimensionError("partial: variable index out of range");
    if (is_zero()) return zero(nvars());
    LaurentPolynomial top = num_.shifted(mono_); // x^V p, a Laurent polynomial
    LaurentPolynomial numer = top.partial(k) * den_ - top * den_.partial(k);
    return quotient(numer, den_ * den_);
}

RationalFunction RationalFunction::shifted_by(const ExponentVector& e) const {
    if (is_zero()) return *this;
    return RationalFunction(mono_ + e, num_, den_);
}

std::size_t matrix_rank(std::vector<std::vector<RationalFunction>> rows) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][col].is_zero()) continue;
            RationalFunction factor = rows[r][col] / rows[rank][col];
            for (std::size_t c = col; c < ncols; ++c)
                rows[r][c] = rows[r][c] - factor * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

std::size_t jacobian_rank(std::span<const RationalFunction> fs) {
    if (fs.empty()) return 0;
    const std::size_t n = fs.front().nvars();
    std::vector<std::vector<RationalFunction>> rows;
    rows.reserve(fs.size());
    for (const auto& f : fs) {
        if (f.nvars() != n) throw DimensionError("jacobian_rank: mixed variable counts");
        std::vector<RationalFunction> row;
        row.reserve(n);
        for (std::size_t k = 0; k < n; ++k) row.push_back(f.partial(k));
        rows.push_back(std::move(row));
    }
    return matrix_rank(std::move(rows));
}

} // namespace plab
