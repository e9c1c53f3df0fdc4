#include "plab/lie.hpp"

#include <algorithm>
#include <map>

namespace plab {

namespace {

// Dense coefficient rows of fs over the union of their numerator monomials,
// after clearing to a common (monic) denominator. Scalar-linear relations
// among the fs are exactly linear relations among the rows.
std::vector<std::vector<Rational>> coordinate_rows(std::span<const RationalFunction> fs) {
    if (fs.empty()) return {};
    const std::size_t n = fs.front().nvars();
    LaurentPolynomial den = LaurentPolynomial::constant(n, Rational(1));
    for (const auto& f : fs) {
        if (f.nvars() != n) throw DimensionError("span: mixed variable counts");
        if (!f.is_zero()) den = lcm_multivariate(den, f.denominator());
    }
    std::vector<LaurentPolynomial> nums;
    nums.reserve(fs.size());
    std::map<ExponentVector, std::size_t, GrlexLess> column;
    for (const auto& f : fs) {
        LaurentPolynomial nf(n);
        if (!f.is_zero())
            nf = (f.numerator() * divide_exact(den, f.denominator())).shifted(f.monomial_factor());
        for (const auto& [e, c] : nf.terms()) column.emplace(e, 0);
        nums.push_back(std::move(nf));
    }
    std::size_t idx = 0;
    for (auto& [e, i] : column) i = idx++;
    std::vector<std::vector<Rational>> rows(fs.size(), std::vector<Rational>(idx, Rational(0)));
    for (std::size_t r = 0; r < nums.size(); ++r)
        for (const auto& [e, c] : nums[r].terms()) rows[r][column.at(e)] = c;
    return rows;
}

std::size_t rank_of(std::vector<std::vector<Rational>> rows) {
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
            Rational factor = rows[r][col] / rows[rank][col];
            for (std::size_t c = col; c < ncols; ++c) rows[r][c] -= factor * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

// Coordinates of `target` in span(basis), or nullopt when it lies outside.
std::optional<std::vector<Rational>> solve_in_span(std::span<const RationalFunction> basis,
                                                   const RationalFunction& target) {
    std::vector<RationalFunction> all(basis.begin(), basis.end());
    all.push_back(target);
    auto rows = coordinate_rows(all);
    const std::size_t m = basis.size();
    const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
    // system: for every monomial column c, sum_i x_i rows[i][c] = rows[m][c]
    std::vector<std::vector<Rational>> sys(ncols, std::vector<Rational>(m + 1, Rational(0)));
    for (std::size_t c = 0; c < ncols; ++c) {
        for (std::size_t i = 0; i < m; ++i) sys[c][i] = rows[i][c];
        sys[c][m] = rows[m][c];
    }
    // Gaussian elimination with back substitution
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m && rank < sys.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < sys.size() && sys[pivot][col].is_zero()) ++pivot;
        if (pivot == sys.size()) continue;
        std::swap(sys[rank], sys[pivot]);
        for (std::size_t r = 0; r < sys.size(); ++r) {
            if (r == rank || sys[r][col].is_zero()) continue;
            Rational factor = sys[r][col] / sys[rank][col];
            for (std::size_t c = col; c <= m; ++c) sys[r][c] -= factor * sys[rank][c];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < sys.size(); ++r)
        if (!sys[r][m].is_zero()) return std::nullopt; // inconsistent
    std::vector<Rational> coords(m, Rational(0));
    for (std::size_t r = 0; r < rank; ++r)
        coords[pivot_col[r]] = sys[r][m] / sys[r][pivot_col[r]];
    return coords;
}

std::vector<Rational> mat_mul(const std::vector<Rational>& a, const std::vector<Rational>& b,
                              std::size_t d) {
    std::vector<Rational> r(d * d, Rational(0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            if (a[i * d + k].is_zero()) continue;
            for (std::size_t j = 0; j < d; ++j)
                if (!b[k * d + j].is_zero()) r[i * d + j] += a[i * d + k] * b[k * d + j];
        }
    return r;
}

bool mat_is_zero(const std::vector<Rational>& a) {
    return std::all_of(a.begin(), a.end(), [](const Rational& v) { return v.is_zero(); });
}

// Faddeev-LeVerrier: coefficients of det(lambda I - A), ascending.
std::vector<Rational> characteristic_polynomial(const std::vector<Rational>& a, std::size_t d) {
    std::vector<Rational> coeffs(d + 1, Rational(0));
    coeffs[d] = Rational(1);
    std::vector<Rational> m(d * d, Rational(0));
    for (std::size_t i = 0; i < d; ++i) m[i * d + i] = Rational(1);
    for (std::size_t k = 1; k <= d; ++k) {
        std::vector<Rational> am = mat_mul(a, m, d);
        Rational tr(0);
        for (std::size_t i = 0; i < d; ++i) tr += am[i * d + i];
        Rational ck = -tr / Rational(static_cast<long long>(k));
        coeffs[d - k] = ck;
        m = std::move(am);
        for (std::size_t i = 0; i < d; ++i) m[i * d + i] += ck;
    }
    return coeffs;
}

Rational eval_poly(const std::vector<Rational>& coeffs, const Rational& x) {
    Rational acc(0);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
}

// Positive divisors, or nullopt when the value is too large to enumerate.
std::optional<std::vector<unsigned long>> small_divisors(const mpz_class& v_in) {
    mpz_class v = abs(v_in);
    if (!v.fits_ulong_p()) return std::nullopt;
    unsigned long n = v.get_ui();
    if (n == 0 || n > 1000000000000UL) return std::nullopt;
    std::vector<unsigned long> divs;
    for (unsigned long i = 1; i * i <= n; ++i) {
        if (n % i) continue;
        divs.push_back(i);
        if (i != n / i) divs.push_back(n / i);
    }
    return divs;
}

// Distinct rational roots of the polynomial, ascending. Best effort: huge
// integer coefficients make the candidate set unenumerable, in which case
// only the root 0 (when present) is reported.
std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs) {
    std::vector<Rational> roots;
    std::size_t low = 0;
    while (low < coeffs.size() && coeffs[low].is_zero()) ++low;
    if (low == coeffs.size()) return roots; // zero polynomial; not reached here
    if (low > 0) roots.push_back(Rational(0));
    std::vector<Rational> b(coeffs.begin() + static_cast<std::ptrdiff_t>(low), coeffs.end());
    if (b.size() <= 1) return roots;
    mpz_class denom_lcm(1);
    for (const auto& c : b) {
        mpz_class d = c.denominator();
        denom_lcm = denom_lcm / gcd(denom_lcm, d) * d;
    }
    std::vector<mpz_class> ints;
    ints.reserve(b.size());
    for (const auto& c : b) ints.push_back(c.numerator() * (denom_lcm / c.denominator()));
    auto d0 = small_divisors(ints.front());
    auto dl = small_divisors(ints.back());
    if (d0 && dl) {
        for (unsigned long p : *d0)
            for (unsigned long q : *dl) {
                Rational cand(static_cast<long>(p), static_cast<long>(q));
                for (const Rational& r : {cand, -cand})
                    if (eval_poly(b, r).is_zero() &&
                        std::find(roots.begin(), roots.end(), r) == roots.end())
                        roots.push_back(r);
            }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// A nonzero kernel vector of the matrix, if the kernel is nontrivial.
std::optional<std::vector<Rational>> kernel_vector(std::vector<Rational> m, std::size_t d) {
    std::vector<std::vector<Rational>> rows(d, std::vector<Rational>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) rows[i][j] = m[i * d + j];
    std::vector<std::optional<std::size_t>> pivot_of_col(d);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < d && rank < d; ++col) {
        std::size_t pivot = rank;
        while (pivot < d && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == d) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < d; ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            Rational factor = rows[r][col] / rows[rank][col];
            for (std::size_t c = col; c < d; ++c) rows[r][c] -= factor * rows[rank][c];
        }
        pivot_of_col[col] = rank;
        ++rank;
    }
    std::size_t free_col = d;
    for (std::size_t col = 0; col < d; ++col)
        if (!pivot_of_col[col]) { free_col = col; break; }
    if (free_col == d) return std::nullopt;
    std::vector<Rational> v(d, Rational(0));
    v[free_col] = Rational(1);
    for (std::size_t col = 0; col < d; ++col) {
        if (!pivot_of_col[col]) continue;
        std::size_t r = *pivot_of_col[col];
        v[col] = -rows[r][free_col] / rows[r][col];
    }
    return v;
}

RationalFunction combine(std::span<const RationalFunction> basis,
                         const std::vector<Rational>& coords) {
    RationalFunction acc = RationalFunction::zero(basis.front().nvars());
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (!coords[k].is_zero()) acc += basis[k].scaled(coords[k]);
    return acc;
}

} // namespace

std::size_t span_rank(std::span<const RationalFunction> fs) {
    if (fs.empty()) return 0;
    return rank_of(coordinate_rows(fs));
}

const Rational& LieClosureReport::c(std::size_t i, std::size_t j, std::size_t k) const {
    if (constants.empty()) throw Error("structure constants only exist for closed reports");
    if (i >= dimension || j >= dimension || k >= dimension)
        throw DimensionError("structure constant index out of range");
    return constants[(i * dimension + j) * dimension + k];
}

LieClosureReport lie_closure(const PoissonStructure& s,
                             std::span<const RationalFunction> generators, std::size_t max_dim) {
    const std::size_t n = s.size();
    if (max_dim < generators.size() + 1)
        throw Error("lie_closure: max_dim must be at least the generator count plus one");
    for (const auto& g : generators)
        if (g.nvars() != n) throw DimensionError("lie_closure: generator over wrong variable count");

    LieClosureReport report;
    report.basis.push_back(RationalFunction::one(n));
    for (const auto& g : generators)
        if (!solve_in_span(report.basis, g)) report.basis.push_back(g);

    std::map<std::pair<std::size_t, std::size_t>, RationalFunction> brackets;
    report.closed = true;
    for (std::size_t j = 1; j < report.basis.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            RationalFunction h = poisson_bracket(s, report.basis[i], report.basis[j]);
            if (!h.is_zero() && !solve_in_span(report.basis, h)) {
                if (report.basis.size() + 1 > max_dim) {
                    report.closed = false;
                    break;
                }
                report.basis.push_back(h);
                report.trace.push_back({i, j, report.basis.size() - 1});
            }
            brackets.emplace(std::make_pair(i, j), std::move(h));
        }
        if (!report.closed) break;
    }
    report.dimension = report.basis.size();

    if (report.closed) {
        const std::size_t d = report.dimension;
        report.constants.assign(d * d * d, Rational(0));
        bool all_zero = true;
        for (std::size_t j = 1; j < d; ++j)
            for (std::size_t i = 0; i < j; ++i) {
                const RationalFunction& h = brackets.at({i, j});
                if (h.is_zero()) continue;
                auto coords = solve_in_span(report.basis, h);
                if (!coords) throw Error("lie_closure: closed bracket left the span");
                if (combine(report.basis, *coords) != h)
                    throw Error("lie_closure: structure-constant expansion mismatch");
                for (std::size_t k = 0; k < d; ++k) {
                    report.constants[(i * d + j) * d + k] = (*coords)[k];
                    report.constants[(j * d + i) * d + k] = -(*coords)[k];
                    if (!(*coords)[k].is_zero()) all_zero = false;
                }
            }
        report.abelian = all_zero;
    }
    return report;
}

AdjointAnalysis ad_analysis(const LieClosureReport& report, std::size_t element) {
    if (!report.closed) throw Error("ad_analysis requires a closed report");
    const std::size_t d = report.dimension;
    if (element >= d) throw DimensionError("ad_analysis: element index out of range");

    AdjointAnalysis out;
    out.element = element;
    out.dimension = d;
    out.matrix.assign(d * d, Rational(0));
    for (std::size_t col = 0; col < d; ++col)
        for (std::size_t row = 0; row < d; ++row)
            out.matrix[row * d + col] = report.c(element, col, row);

    out.is_zero = mat_is_zero(out.matrix);
    out.char_poly = characteristic_polynomial(out.matrix, d);

    bool char_is_lambda_d = true;
    for (std::size_t i = 0; i < d; ++i)
        if (!out.char_poly[i].is_zero()) char_is_lambda_d = false;

    std::vector<Rational> power = out.matrix;
    for (std::size_t k = 1; k < d; ++k) power = mat_mul(power, out.matrix, d);
    bool power_zero = mat_is_zero(power);
    if (power_zero != char_is_lambda_d)
        throw Error("ad_analysis: nilpotency checks disagree"); // cannot happen

    out.is_nilpotent = char_is_lambda_d;
    out.has_nonzero_eigenvalue = !char_is_lambda_d;
    out.rational_eigenvalues = rational_roots(out.char_poly);
    return out;
}

AbelianVerdict abelian_verdict(const PoissonStructure& s, const LieClosureReport& report) {
    if (!report.closed) throw Error("abelian_verdict requires a closed report");
    if (report.abelian)
        return {LieVerdict::Abelian, std::nullopt, "all structure constants vanish"};
    if (s.is_log_canonical())
        return {LieVerdict::Contradiction, std::nullopt,
                "nonabelian closed subalgebra under a log-canonical structure; "
                "this refutes the nonexistence theorem and indicates an internal error"};

    const std::size_t d = report.dimension;
    // Prefer an eigenvalue witness: it realizes {f,g} = g directly.
    for (std::size_t e = 0; e < d; ++e) {
        AdjointAnalysis ad = ad_analysis(report, e);
        if (ad.is_zero) continue;
        for (const Rational& lambda : ad.rational_eigenvalues) {
            if (lambda.is_zero()) continue;
            std::vector<Rational> shifted = ad.matrix;
            for (std::size_t i = 0; i < d; ++i) shifted[i * d + i] -= lambda;
            auto vec = kernel_vector(shifted, d);
            if (!vec) continue;
            RationalFunction g = combine(report.basis, *vec);
            RationalFunction f = report.basis[e].scaled(lambda.inverse());
            if (poisson_bracket(s, f, g) != g)
                throw Error("abelian_verdict: eigen witness failed verification");
            return {LieVerdict::Nonabelian,
                    Witness{Witness::Kind::NonzeroEigenvalue, e, lambda, f, g},
                    "ad of basis element " + std::to_string(e) + " has eigenvalue " +
                        lambda.str()};
        }
    }
    for (std::size_t e = 0; e < d; ++e) {
        AdjointAnalysis ad = ad_analysis(report, e);
        if (ad.is_zero || !ad.is_nilpotent) continue;
        // walk a chain: g with ad(g) != 0 and ad^2(g) = 0
        std::vector<Rational> power = ad.matrix; // ad^r, starting r = 1
        std::vector<Rational> prev(d * d, Rational(0));
        for (std::size_t i = 0; i < d; ++i) prev[i * d + i] = Rational(1); // ad^0
        while (true) {
            std::vector<Rational> next = mat_mul(ad.matrix, power, d);
            if (mat_is_zero(next)) break;
            prev = std::move(power);
            power = std::move(next);
        }
        // power = ad^r != 0, ad^(r+1) = 0; pick a column j with ad^r e_j != 0
        std::size_t col = d;
        for (std::size_t cc = 0; cc < d && col == d; ++cc)
            for (std::size_t row = 0; row < d; ++row)
                if (!power[row * d + cc].is_zero()) {
                    col = cc;
                    break;
                }
        if (col == d) throw Error("abelian_verdict: nilpotent power lost its support");
        std::vector<Rational> gvec(d, Rational(0));
        for (std::size_t row = 0; row < d; ++row) gvec[row] = prev[row * d + col];
        RationalFunction g = combine(report.basis, gvec);
        const RationalFunction& f = report.basis[e];
        RationalFunction fg = poisson_bracket(s, f, g);
        if (fg.is_zero() || !poisson_bracket(s, f, fg).is_zero())
            throw Error("abelian_verdict: nilpotent witness failed verification");
        return {LieVerdict::Nonabelian,
                Witness{Witness::Kind::NonzeroNilpotent, e, Rational(0), f, g},
                "ad of basis element " + std::to_string(e) + " is nonzero nilpotent"};
    }
    return {LieVerdict::Nonabelian, std::nullopt,
            "nonabelian, but no witness certifiable over the rationals was found"};
}

PoissonStructure ab_family_structure(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0) throw Error("ab_family_structure: exponents must be nonnegative");
    std::map<std::pair<std::size_t, std::size_t>, RationalFunction> table;
    table.emplace(std::make_pair(0, 1), RationalFunction::monomial(ExponentVector({a, b})));
    return PoissonStructure::general({"x", "y"}, {}, std::move(table));
}

std::optional<CanonicalPair> canonical_pair(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0) throw Error("canonical_pair: exponents must be nonnegative");
    if (a == 1 && b == 1) return std::nullopt;

    PoissonStructure s = ab_family_structure(a, b);
    RationalFunction u = RationalFunction::one(2), v = u;
    Rational constant(0);
    if (a == 1 && b == 0) {
        // the classical algebraic canonical pair (1/x, -xy) for {x,y} = x
        u = RationalFunction::monomial(ExponentVector({-1, 0}));
        v = RationalFunction::monomial(ExponentVector({1, 1}), Rational(-1));
        constant = Rational(1);
    } else if (a != 1 && b != 1) {
        u = RationalFunction::monomial(ExponentVector({1 - a, 0}));
        v = RationalFunction::monomial(ExponentVector({0, 1 - b}));
        constant = Rational(static_cast<long long>(a - 1)) * Rational(static_cast<long long>(b - 1));
    } else if (a == 1) {
        u = RationalFunction::monomial(ExponentVector({-1, 0}));
        v = RationalFunction::monomial(ExponentVector({1, 1 - b}));
        constant = Rational(static_cast<long long>(b - 1));
    } else { // b == 1, a != 1
        u = RationalFunction::monomial(ExponentVector({1 - a, 1}));
        v = RationalFunction::monomial(ExponentVector({0, -1}));
        constant = Rational(static_cast<long long>(a - 1));
    }

    if (constant.is_zero())
        throw Error("canonical_pair: internal error, constant must be nonzero");
    if (poisson_bracket(s, u, v) != RationalFunction::constant(2, constant))
        throw Error("canonical_pair: bracket verification failed");
    const RationalFunction pair[] = {u, v};
    if (jacobian_rank(pair) != 2)
        throw Error("canonical_pair: independence verification failed");
    return CanonicalPair{std::move(u), std::move(v), std::move(constant)};
}

WitnessTransform witness_transform(const PoissonStructure& s, const RationalFunction& f,
                                   const RationalFunction& g) {
    WitnessTransform out;
    RationalFunction beta = poisson_bracket(s, f, g);
    if (beta.is_zero()) {
        out.detail = "not applicable: {f,g} = 0";
        return out;
    }

    auto finish = [&](WitnessCase hyp, RationalFunction first, RationalFunction second,
                      const RationalFunction& expected, std::string what) {
        RationalFunction got = poisson_bracket(s, first, second);
        if (got != expected) throw Error("witness_transform: asserted identity failed");
        out.applicable = true;
        out.hypothesis = hyp;
        out.first = std::move(first);
        out.second = std::move(second);
        out.bracket = std::move(got);
        out.detail = std::move(what);
        return out;
    };

    const RationalFunction one = RationalFunction::one(s.size());
    if (beta.is_one())
        return finish(WitnessCase::BracketOne, f * g, g, g,
                      "{f,g} = 1: pair (fg, g) satisfies {fg,g} = g");
    // hypothesis (b), up to negating or swapping the pair: {u,v} = v gives
    // {v, -u/v} = 1
    if (beta == g)
        return finish(WitnessCase::BracketEqualsElement, g, -(f / g), one,
                      "{f,g} = g: pair (g, -f/g) has bracket 1");
    if (beta == -g)
        return finish(WitnessCase::BracketEqualsElement, g, f / g, one,
                      "{f,g} = -g: pair (g, f/g) has bracket 1");
    if (beta == f)
        return finish(WitnessCase::BracketEqualsElement, f, g / f, one,
                      "{f,g} = f: pair (f, g/f) has bracket 1");
    if (beta == -f)
        return finish(WitnessCase::BracketEqualsElement, f, -(g / f), one,
                      "{f,g} = -f: pair (f, -g/f) has bracket 1");
    if (poisson_bracket(s, f, beta).is_zero())
        return finish(WitnessCase::NilpotentStep, f, g / beta, one,
                      "{f,g} != 0 and {f,{f,g}} = 0: pair (f, g/{f,g}) has bracket 1");

    out.detail = "not applicable: {f,g} != 1; {f,g} != ±g; {f,g} != ±f; {f,{f,g}} != 0";
    return out;
}

} // namespace plab
