#include "plab/gallery.hpp"

#include <charconv>

#include "plab/expr.hpp"
#include "plab/lie.hpp"

namespace plab {

namespace {

void add_check(GalleryEntry& entry, std::string description, bool ok, std::string detail = "") {
    entry.identities.push_back({std::move(description), ok, std::move(detail)});
}

void add_bracket_check(GalleryEntry& entry, const std::string& lhs, const std::string& rhs,
                       const std::string& expected) {
    const auto& names = entry.structure.names();
    RationalFunction a = parse_expr(lhs, names);
    RationalFunction b = parse_expr(rhs, names);
    RationalFunction want = parse_expr(expected, names);
    RationalFunction got = poisson_bracket(entry.structure, a, b);
    bool ok = got == want;
    add_check(entry, "{" + lhs + ", " + rhs + "} = " + expected, ok,
              ok ? "" : "got " + format_expr(got, names));
}

void add_jacobi_check(GalleryEntry& entry) {
    ValidationReport report = structure_validate(entry.structure);
    std::string detail;
    if (!report.jacobi_ok) {
        const auto& f = report.failures.front();
        detail = "first failing triple (" + entry.structure.names()[f.i] + "," +
                 entry.structure.names()[f.j] + "," + entry.structure.names()[f.k] + ")";
    }
    add_check(entry, "Jacobi identity holds on all coordinate triples", report.valid(), detail);
}

int sign_of(long v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

GalleryEntry make_sln(std::size_t n) {
    if (n < 2) throw Error("sln requires n >= 2");
    if (n > 9) throw Error("sln gallery supports n <= 9");
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            names.push_back("x" + std::to_string(i) + std::to_string(j));
    const std::size_t total = n * n;
    auto flat = [n](std::size_t i, std::size_t j) { return (i - 1) * n + (j - 1); };

    auto coeff = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        return Rational(sign_of(static_cast<long>(k) - static_cast<long>(i)) +
                            sign_of(static_cast<long>(l) - static_cast<long>(j)),
                        2);
    };
    auto pi_formula = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        ExponentVector e =
            ExponentVector::unit(total, flat(i, l)) + ExponentVector::unit(total, flat(k, j));
        return RationalFunction::monomial(std::move(e), coeff(i, j, k, l));
    };

    std::map<std::pair<std::size_t, std::size_t>, RationalFunction> table;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t k = 1; k <= n; ++k)
                for (std::size_t l = 1; l <= n; ++l) {
                    std::size_t p = flat(i, j), q = flat(k, l);
                    if (p >= q) continue;
                    table.emplace(std::make_pair(p, q), pi_formula(i, j, k, l));
                }

    GalleryEntry entry{"sln:" + std::to_string(n),
                       PoissonStructure::general(std::move(names), {}, std::move(table)),
                       {}};

    bool all_match = true;
    std::string detail;
    for (std::size_t i = 1; i <= n && all_match; ++i)
        for (std::size_t j = 1; j <= n && all_match; ++j)
            for (std::size_t k = 1; k <= n && all_match; ++k)
                for (std::size_t l = 1; l <= n && all_match; ++l) {
                    std::size_t p = flat(i, j), q = flat(k, l);
                    if (p == q) continue;
                    RationalFunction got = poisson_bracket(
                        entry.structure, entry.structure.coordinate(p), entry.structure.coordinate(q));
                    if (got != pi_formula(i, j, k, l)) {
                        all_match = false;
                        detail = "mismatch at {" + entry.structure.names()[p] + "," +
                                 entry.structure.names()[q] + "}";
                    }
                }
    add_check(entry, "all pairwise brackets match c^{ij}_{kl} x_il x_kj", all_match, detail);
    add_jacobi_check(entry);
    return entry;
}

GalleryEntry make_sl2() {
    std::vector<std::string> names = {"a", "b", "c", "d"};
    std::map<std::pair<std::size_t, std::size_t>, RationalFunction> table;
    auto put = [&](std::size_t i, std::size_t j, const char* expr) {
        table.emplace(std::make_pair(i, j), parse_expr(expr, names));
    };
    put(0, 1, "1/2*a*b"); // {a,b}
    put(0, 2, "1/2*a*c"); // {a,c}
    put(0, 3, "b*c");     // {a,d}
    put(1, 2, "0");       // {b,c}
    put(1, 3, "1/2*b*d"); // {b,d}
    put(2, 3, "1/2*c*d"); // {c,d}

    GalleryEntry entry{"sl2", PoissonStructure::general(names, {}, std::move(table)), {}};
    add_bracket_check(entry, "a", "b", "1/2*a*b");
    add_bracket_check(entry, "a", "c", "1/2*a*c");
    add_bracket_check(entry, "a", "d", "b*c");
    add_bracket_check(entry, "b", "c", "0");
    add_bracket_check(entry, "b", "d", "1/2*b*d");
    add_bracket_check(entry, "c", "d", "1/2*c*d");
    add_jacobi_check(entry);
    return entry;
}

GalleryEntry make_borel_sl2() {
    SkewMatrix omega(2);
    omega.set(0, 1, Rational(1, 2));
    GalleryEntry entry{"borel-sl2",
                       PoissonStructure::log_canonical({"alpha", "beta"}, std::move(omega)),
                       {}};
    add_bracket_check(entry, "alpha", "beta", "1/2*alpha*beta");
    const RationalFunction coords[] = {entry.structure.coordinate(0),
                                       entry.structure.coordinate(1)};
    LogCanonicalCheck check = check_log_canonical(entry.structure, coords);
    bool ok = check.ok && check.omega.at(0, 1) == Rational(1, 2);
    add_check(entry, "(alpha, beta) is log-canonical with omega_12 = 1/2", ok);
    add_jacobi_check(entry);
    return entry;
}

GalleryEntry make_axis() {
    GalleryEntry entry{"axis", ab_family_structure(1, 0), {}};
    add_bracket_check(entry, "x", "y", "x");
    auto pair = canonical_pair(1, 0);
    bool ok = pair.has_value() && pair->u == parse_expr("1/x", entry.structure.names()) &&
              pair->v == parse_expr("-x*y", entry.structure.names()) &&
              pair->constant == Rational(1);
    add_check(entry, "canonical pair (1/x, -x*y) has bracket 1", ok);
    add_jacobi_check(entry);
    return entry;
}

GalleryEntry make_ab_family(std::int64_t a, std::int64_t b) {
    GalleryEntry entry{"ab-family:" + std::to_string(a) + "," + std::to_string(b),
                       ab_family_structure(a, b),
                       {}};
    std::string rhs;
    {
        LaurentPolynomial m = LaurentPolynomial::monomial(ExponentVector({a, b}));
        rhs = format_laurent(m, entry.structure.names());
    }
    add_bracket_check(entry, "x", "y", rhs);
    auto pair = canonical_pair(a, b);
    if (a == 1 && b == 1) {
        add_check(entry, "no canonical pair exists for (1,1)", !pair.has_value());
    } else {
        // canonical_pair re-verifies the bracket and independence internally
        add_check(entry, "canonical pair exists with nonzero constant bracket",
                  pair.has_value() && !pair->constant.is_zero());
    }
    add_jacobi_check(entry);
    return entry;
}

GalleryEntry make_quadratic_xyz() {
    std::vector<std::string> names = {"x", "y", "z", "a", "b", "c"};
    std::vector<bool> central = {false, false, false, true, true, true};
    std::map<std::pair<std::size_t, std::size_t>, RationalFunction> table;
    table.emplace(std::make_pair(0, 1), parse_expr("a*z^2", names));
    table.emplace(std::make_pair(0, 2), parse_expr("b*y^2", names));
    table.emplace(std::make_pair(1, 2), parse_expr("c*x^2", names));
    GalleryEntry entry{"quadratic-xyz",
                       PoissonStructure::general(names, central, std::move(table)),
                       {}};
    add_bracket_check(entry, "x", "y/z^2", "a - 2*b*y^3*z^-3");
    add_bracket_check(entry, "x/z", "y/z", "a - b*y^3*z^-3 + c*x^3*z^-3");
    add_jacobi_check(entry);
    return entry;
}

std::int64_t parse_int(std::string_view s) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw Error("invalid integer '" + std::string(s) + "' in gallery name");
    return v;
}

} // namespace

GalleryEntry gallery(const std::string& name) {
    GalleryEntry entry = [&] {
        if (name == "sl2") return make_sl2();
        if (name == "borel-sl2") return make_borel_sl2();
        if (name == "axis") return make_axis();
        if (name == "quadratic-xyz") return make_quadratic_xyz();
        if (name.rfind("sln:", 0) == 0)
            return make_sln(static_cast<std::size_t>(parse_int(name.substr(4))));
        if (name.rfind("ab-family:", 0) == 0) {
            std::string rest = name.substr(10);
            auto comma = rest.find(',');
            if (comma == std::string::npos)
                throw Error("ab-family needs two exponents, e.g. ab-family:2,3");
            return make_ab_family(parse_int(rest.substr(0, comma)), parse_int(rest.substr(comma + 1)));
        }
        throw Error("unknown gallery entry '" + name + "'");
    }();
    for (const auto& check : entry.identities)
        if (!check.passed)
            throw Error("gallery entry '" + entry.name + "' failed its checklist: " +
                        check.description +
                        (check.detail.empty() ? "" : " (" + check.detail + ")"));
    return entry;
}

std::vector<std::string> gallery_names() {
    return {"sl2", "sln:<n>", "borel-sl2", "axis", "ab-family:<a>,<b>", "quadratic-xyz"};
}

} // namespace plab
