#include "plab/gcd.hpp"

namespace plab {

namespace {

void require_polynomial(const LaurentPolynomial& p, const char* who) {
    if (p.has_negative_exponent())
        throw Error(std::string(who) + ": negative exponents not allowed here");
}

bool divides(const ExponentVector& d, const ExponentVector& e) {
    for (std::size_t k = 0; k < d.size(); ++k)
        if (e[k] < d[k]) return false;
    return true;
}

LaurentPolynomial monic(const LaurentPolynomial& f) {
    if (f.is_zero()) return f;
    const Rational& lc = f.leading().second;
    return lc.is_one() ? f : f.scaled(lc.inverse());
}

// Largest variable index occurring in f or g, or nullopt if both constant.
std::optional<std::size_t> main_variable(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    for (std::size_t k = f.nvars(); k-- > 0;)
        if (f.depends_on(k) || g.depends_on(k)) return k;
    return std::nullopt;
}

LaurentPolynomial gcd_rec(const LaurentPolynomial& p, const LaurentPolynomial& q);

// Content of f viewed as a univariate polynomial in x_v: gcd of the
// coefficient polynomials.
LaurentPolynomial content_in(const LaurentPolynomial& f, std::size_t v) {
    LaurentPolynomial c(f.nvars());
    for (std::int64_t d = f.min_exp(v); d <= f.max_exp(v); ++d) {
        LaurentPolynomial slice = f.coeff_of_power(v, d);
        if (slice.is_zero()) continue;
        c = c.is_zero() ? monic(slice) : gcd_rec(c, slice);
        if (c.is_constant()) break;
    }
    return c;
}

// Pseudo-remainder of a by b with respect to x_v (deg_v a >= deg_v b >= 0,
// b nonzero). Scalar normalization is irrelevant: callers take primitive
// parts afterwards.
LaurentPolynomial pseudo_remainder(LaurentPolynomial a, const LaurentPolynomial& b, std::size_t v) {
    const std::int64_t db = b.depends_on(v) ? b.max_exp(v) : 0;
    const LaurentPolynomial lb = b.coeff_of_power(v, db);
    while (!a.is_zero()) {
        const std::int64_t da = a.depends_on(v) ? a.max_exp(v) : 0;
        if (da < db) break;
        LaurentPolynomial la = a.coeff_of_power(v, da);
        ExponentVector shift(a.nvars());
        shift.set(v, da - db);
        a = a * lb - b.shifted(shift) * la;
    }
    return a;
}

LaurentPolynomial primitive_part(const LaurentPolynomial& f, std::size_t v) {
    if (f.is_zero()) return f;
    LaurentPolynomial c = content_in(f, v);
    if (c.is_constant()) return monic(f);
    return monic(divide_exact(f, c));
}

LaurentPolynomial gcd_rec(const LaurentPolynomial& p, const LaurentPolynomial& q) {
    if (p.is_zero()) return monic(q);
    if (q.is_zero()) return monic(p);

    auto v_opt = main_variable(p, q);
    if (!v_opt) return LaurentPolynomial::constant(p.nvars(), Rational(1));
    const std::size_t v = *v_opt;

    LaurentPolynomial cp = content_in(p, v);
    LaurentPolynomial cq = content_in(q, v);
    LaurentPolynomial cont_gcd = gcd_rec(cp, cq);

    LaurentPolynomial a = monic(divide_exact(p, cp));
    LaurentPolynomial b = monic(divide_exact(q, cq));

    auto deg_v = [v](const LaurentPolynomial& f) {
        return f.depends_on(v) ? f.max_exp(v) : 0;
    };
    if (deg_v(a) < deg_v(b)) std::swap(a, b);
    while (!b.is_zero()) {
        LaurentPolynomial r = pseudo_remainder(a, b, v);
        a = std::move(b);
        b = r.is_zero() ? r : primitive_part(r, v);
    }
    return monic(cont_gcd * a);
}

} // namespace

std::optional<LaurentPolynomial> try_divide(const LaurentPolynomial& p, const LaurentPolynomial& d) {
    if (p.nvars() != d.nvars()) throw DimensionError("try_divide: variable counts differ");
    if (d.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    require_polynomial(p, "try_divide");
    require_polynomial(d, "try_divide");

    LaurentPolynomial r = p;
    LaurentPolynomial quot(p.nvars());
    const auto& [de, dc] = d.leading();
    while (!r.is_zero()) {
        const auto& [re, rc] = r.leading();
        if (!divides(de, re)) return std::nullopt;
        ExponentVector qe = re - de;
        Rational qc = rc / dc;
        quot.add_term(qe, qc);
        r -= d.shifted(qe).scaled(qc);
    }
    return quot;
}

LaurentPolynomial divide_exact(const LaurentPolynomial& p, const LaurentPolynomial& d) {
    auto q = try_divide(p, d);
    if (!q) throw Error("divide_exact: division left a remainder");
    return *q;
}

LaurentPolynomial gcd_multivariate(const LaurentPolynomial& p, const LaurentPolynomial& q) {
    if (p.nvars() != q.nvars()) throw DimensionError("gcd: variable counts differ");
    require_polynomial(p, "gcd");
    require_polynomial(q, "gcd");
    return gcd_rec(p, q);
}

LaurentPolynomial lcm_multivariate(const LaurentPolynomial& p, const LaurentPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return LaurentPolynomial(p.nvars());
    LaurentPolynomial g = gcd_multivariate(p, q);
    return monic(divide_exact(p, g) * q);
}

} // namespace plab
