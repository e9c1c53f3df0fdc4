#include "plab/poisson.hpp"

#include <algorithm>

namespace plab {

SkewMatrix SkewMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    const std::size_t n = rows.size();
    SkewMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw DimensionError("skew matrix rows have uneven length");
        for (std::size_t j = 0; j < n; ++j) m.w_[i * n + j] = rows[i][j];
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!m.at(i, i).is_zero()) throw StructureError("skew matrix has a nonzero diagonal entry");
        for (std::size_t j = i + 1; j < n; ++j)
            if (m.at(i, j) != -m.at(j, i))
                throw StructureError("matrix is not skew-symmetric at (" + std::to_string(i + 1) +
                                     "," + std::to_string(j + 1) + ")");
    }
    return m;
}

void SkewMatrix::set(std::size_t i, std::size_t j, const Rational& v) {
    if (i >= n_ || j >= n_) throw DimensionError("skew matrix index out of range");
    if (i == j) {
        if (!v.is_zero()) throw StructureError("skew matrix diagonal must be zero");
        return;
    }
    w_[i * n_ + j] = v;
    w_[j * n_ + i] = -v;
}

Rational m_form(const SkewMatrix& omega, const ExponentVector& I, const ExponentVector& J) {
    const std::size_t n = omega.size();
    if (I.size() != n || J.size() != n) throw DimensionError("m_form: dimension mismatch");
    Rational acc(0);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = k + 1; l < n; ++l) {
            const Rational& w = omega.at(k, l);
            if (w.is_zero()) continue;
            mpz_class minor = mpz_class(static_cast<long>(I[k])) * static_cast<long>(J[l]) -
                              mpz_class(static_cast<long>(I[l])) * static_cast<long>(J[k]);
            if (minor != 0) acc += w * Rational(minor);
        }
    }
    return acc;
}

LaurentPolynomial bracket_monomial(const SkewMatrix& omega, const ExponentVector& I,
                                   const ExponentVector& J) {
    Rational m = m_form(omega, I, J);
    LaurentPolynomial r(I.size());
    if (!m.is_zero()) r.add_term(I + J, std::move(m));
    return r;
}

LaurentPolynomial bracket_laurent(const SkewMatrix& omega, const LaurentPolynomial& f,
                                  const LaurentPolynomial& g) {
    if (f.nvars() != omega.size() || g.nvars() != omega.size())
        throw DimensionError("bracket_laurent: dimension mismatch");
    LaurentPolynomial r(f.nvars());
    for (const auto& [I, a] : f.terms()) {
        for (const auto& [J, b] : g.terms()) {
            Rational m = m_form(omega, I, J);
            if (!m.is_zero()) r.add_term(I + J, a * b * m);
        }
    }
    return r;
}

PoissonStructure PoissonStructure::log_canonical(std::vector<std::string> names, SkewMatrix omega,
                                                 std::vector<bool> central) {
    const std::size_t n = names.size();
    if (omega.size() != n) throw DimensionError("omega size does not match variable count");
    if (central.empty()) central.assign(n, false);
    if (central.size() != n) throw DimensionError("central mask has wrong length");

    PoissonStructure s;
    s.names_ = std::move(names);
    s.central_ = std::move(central);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if ((s.central_[i] || s.central_[j]) && !omega.at(i, j).is_zero())
                throw StructureError("central variable has a nonzero bracket");
            ExponentVector e = ExponentVector::unit(n, i) + ExponentVector::unit(n, j);
            s.upper_.push_back(RationalFunction::monomial(std::move(e), omega.at(i, j)));
        }
    s.omega_ = std::move(omega);
    return s;
}

PoissonStructure PoissonStructure::general(
    std::vector<std::string> names, std::vector<bool> central,
    std::map<std::pair<std::size_t, std::size_t>, RationalFunction> upper) {
    const std::size_t n = names.size();
    if (central.empty()) central.assign(n, false);
    if (central.size() != n) throw DimensionError("central mask has wrong length");

    for (const auto& [key, v] : upper)
        if (key.first >= key.second || key.second >= n)
            throw StructureError("structure table entries must have i < j within range");

    PoissonStructure s;
    s.names_ = std::move(names);
    s.central_ = std::move(central);
    s.upper_.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto it = upper.find({i, j});
            RationalFunction v = it == upper.end() ? RationalFunction::zero(n) : it->second;
            if (v.nvars() != n) throw DimensionError("structure function over wrong variable count");
            if ((s.central_[i] || s.central_[j]) && !v.is_zero())
                throw StructureError("central variable has a nonzero bracket");
            s.upper_.push_back(std::move(v));
        }
    return s;
}

std::size_t PoissonStructure::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw StructureError("unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - names_.begin());
}

const SkewMatrix& PoissonStructure::omega() const {
    if (!omega_) throw Error("structure is not log-canonical");
    return *omega_;
}

std::size_t PoissonStructure::upper_index(std::size_t i, std::size_t j) const {
    // row-major over the strict upper triangle
    const std::size_t n = size();
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

RationalFunction PoissonStructure::pi(std::size_t i, std::size_t j) const {
    if (i >= size() || j >= size()) throw DimensionError("pi: index out of range");
    if (i == j) return RationalFunction::zero(size());
    if (i < j) return upper_[upper_index(i, j)];
    return -upper_[upper_index(j, i)];
}

RationalFunction bracket_via_derivatives(const PoissonStructure& s, const RationalFunction& f,
                                         const RationalFunction& g) {
    const std::size_t n = s.size();
    if (f.nvars() != n || g.nvars() != n)
        throw DimensionError("bracket: functions over wrong variable count");

    // lazy partials
    std::vector<std::optional<RationalFunction>> df(n), dg(n);
    auto partial_of = [](const RationalFunction& h, std::vector<std::optional<RationalFunction>>& cache,
                         std::size_t k) -> const RationalFunction& {
        if (!cache[k]) cache[k] = h.partial(k);
        return *cache[k];
    };

    RationalFunction acc = RationalFunction::zero(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (s.is_central(i)) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
            RationalFunction p = s.pi(i, j);
            if (p.is_zero()) continue;
            const RationalFunction& fi = partial_of(f, df, i);
            const RationalFunction& gj = partial_of(g, dg, j);
            const RationalFunction& fj = partial_of(f, df, j);
            const RationalFunction& gi = partial_of(g, dg, i);
            RationalFunction t = fi * gj - fj * gi;
            if (!t.is_zero()) acc += t * p;
        }
    }
    return acc;
}

RationalFunction poisson_bracket(const PoissonStructure& s, const RationalFunction& f,
                                 const RationalFunction& g) {
    if (s.is_log_canonical()) {
        auto lf = f.as_laurent();
        auto lg = g.as_laurent();
        if (lf && lg)
            return RationalFunction::from_laurent(bracket_laurent(s.omega(), *lf, *lg));
    }
    return bracket_via_derivatives(s, f, g);
}

RationalFunction jacobiator(const PoissonStructure& s, const RationalFunction& f,
                            const RationalFunction& g, const RationalFunction& h) {
    RationalFunction r = poisson_bracket(s, f, poisson_bracket(s, g, h));
    r += poisson_bracket(s, g, poisson_bracket(s, h, f));
    r += poisson_bracket(s, h, poisson_bracket(s, f, g));
    return r;
}

ValidationReport structure_validate(PoissonStructure& s) {
    ValidationReport report;
    const std::size_t n = s.size();
    for (std::size_t i = 0; i < n && report.skew_ok; ++i) {
        if (!s.is_central(i)) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (!s.pi(i, j).is_zero()) report.skew_ok = false;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                RationalFunction jac =
                    jacobiator(s, s.coordinate(i), s.coordinate(j), s.coordinate(k));
                if (!jac.is_zero()) {
                    report.jacobi_ok = false;
                    report.failures.push_back({i, j, k, std::move(jac)});
                }
            }
    if (report.valid()) s.jacobi_validated_ = true;
    return report;
}

LogCanonicalCheck check_log_canonical(const PoissonStructure& s,
                                      std::span<const RationalFunction> gs) {
    LogCanonicalCheck result{false, SkewMatrix(gs.size()), 0, 0,
                             RationalFunction::zero(s.size())};
    for (const auto& g : gs)
        if (g.is_zero()) throw Error("check_log_canonical: zero function in candidate system");
    for (std::size_t i = 0; i < gs.size(); ++i) {
        for (std::size_t j = i + 1; j < gs.size(); ++j) {
            RationalFunction ratio = poisson_bracket(s, gs[i], gs[j]) / (gs[i] * gs[j]);
            auto c = ratio.as_scalar();
            if (!c) {
                result.bad_i = i;
                result.bad_j = j;
                result.ratio = std::move(ratio);
                return result;
            }
            result.omega.set(i, j, *c);
        }
    }
    result.ok = true;
    return result;
}

Monomial3Family monomial3_family(const std::array<std::int64_t, 3>& a,
                                 const std::array<std::int64_t, 3>& b,
                                 const std::array<std::int64_t, 3>& c, const Rational& A,
                                 const Rational& B, const Rational& C) {
    auto mono = [](const std::array<std::int64_t, 3>& e, const Rational& coef) {
        return RationalFunction::monomial(ExponentVector({e[0], e[1], e[2]}), coef);
    };
    std::map<std::pair<std::size_t, std::size_t>, RationalFunction> table;
    table.emplace(std::make_pair(0, 1), mono(a, A));
    table.emplace(std::make_pair(0, 2), mono(b, B));
    table.emplace(std::make_pair(1, 2), mono(c, C));
    PoissonStructure s = PoissonStructure::general({"x", "y", "z"}, {}, std::move(table));

    using EV = ExponentVector;
    auto add = ExponentVector::checked_add;
    auto sub = ExponentVector::checked_sub;
    RationalFunction closed = RationalFunction::zero(3);
    closed += RationalFunction::monomial(
        EV({sub(add(a[0], b[0]), 1), add(a[1], b[1]), add(a[2], b[2])}),
        Rational(b[0] - a[0]) * A * B);
    closed += RationalFunction::monomial(
        EV({add(a[0], c[0]), sub(add(a[1], c[1]), 1), add(a[2], c[2])}),
        Rational(c[1] - a[1]) * A * C);
    closed += RationalFunction::monomial(
        EV({add(b[0], c[0]), add(b[1], c[1]), sub(add(b[2], c[2]), 1)}),
        Rational(c[2] - b[2]) * B * C);

    RationalFunction direct =
        jacobiator(s, s.coordinate(0), s.coordinate(1), s.coordinate(2));
    if (direct != closed)
        throw Error("monomial3_family: closed-form jacobiator does not match direct computation");

    Monomial3Family out{std::move(s), std::move(closed),
                        a[0] == b[0] && a[1] == c[1] && b[2] == c[2]};
    return out;
}

namespace {
void check_permutation(const std::vector<std::size_t>& perm, std::size_t n) {
    if (perm.size() != n) throw DimensionError("permutation has wrong length");
    std::vector<bool> seen(n, false);
    for (std::size_t k : perm) {
        if (k >= n || seen[k]) throw Error("not a permutation");
        seen[k] = true;
    }
}
} // namespace

RationalFunction permuted_variables(const RationalFunction& f,
                                    const std::vector<std::size_t>& perm) {
    check_permutation(perm, f.nvars());
    if (f.is_zero()) return f;
    LaurentPolynomial top = f.numerator().shifted(f.monomial_factor());
    return RationalFunction::quotient(top.permuted(perm), f.denominator().permuted(perm));
}

PoissonStructure permuted_structure(const PoissonStructure& s,
                                    const std::vector<std::size_t>& perm) {
    const std::size_t n = s.size();
    check_permutation(perm, n);
    std::vector<std::string> names(n);
    std::vector<bool> central(n);
    for (std::size_t k = 0; k < n; ++k) {
        names[k] = s.names()[perm[k]];
        central[k] = s.is_central(perm[k]);
    }
    if (s.is_log_canonical()) {
        SkewMatrix omega(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                omega.set(i, j, s.omega().at(perm[i], perm[j]));
        return PoissonStructure::log_canonical(std::move(names), std::move(omega),
                                               std::move(central));
    }
    std::map<std::pair<std::size_t, std::size_t>, RationalFunction> upper;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            RationalFunction v = permuted_variables(s.pi(perm[i], perm[j]), perm);
            if (!v.is_zero()) upper.emplace(std::make_pair(i, j), std::move(v));
        }
    return PoissonStructure::general(std::move(names), std::move(central), std::move(upper));
}

} // namespace plab
