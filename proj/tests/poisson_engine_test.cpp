#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plab/expr.hpp"
#include "plab/series.hpp"
#include "test_support.hpp"

using namespace plab;
using namespace plab::testing;

namespace {

SkewMatrix omega2(long w) {
    SkewMatrix m(2);
    m.set(0, 1, Rational(w));
    return m;
}

PoissonStructure quadratic_xyz() {
    std::vector<std::string> names = {"x", "y", "z", "a", "b", "c"};
    std::map<std::pair<std::size_t, std::size_t>, RationalFunction> table;
    table.emplace(std::make_pair(0, 1), parse_expr("a*z^2", names));
    table.emplace(std::make_pair(0, 2), parse_expr("b*y^2", names));
    table.emplace(std::make_pair(1, 2), parse_expr("c*x^2", names));
    return PoissonStructure::general(names, {false, false, false, true, true, true},
                                     std::move(table));
}

} // namespace

TEST_CASE("skew matrix validation") {
    CHECK_THROWS_AS(SkewMatrix::from_rows({{Rational(1)}}), StructureError);
    CHECK_THROWS_AS(SkewMatrix::from_rows({{Rational(0), Rational(1)},
                                           {Rational(1), Rational(0)}}),
                    StructureError);
    auto ok = SkewMatrix::from_rows({{Rational(0), Rational(1, 2)},
                                     {Rational(-1, 2), Rational(0)}});
    CHECK(ok.at(0, 1) == Rational(1, 2));
    SkewMatrix m(3);
    CHECK_THROWS_AS(m.set(1, 1, Rational(2)), StructureError);
}

TEST_CASE("m-form examples and properties") {
    auto omega = omega2(1);
    CHECK(m_form(omega, ExponentVector({1, 0}), ExponentVector({0, 1})) == Rational(1));
    CHECK_THROWS_AS(m_form(omega, ExponentVector({1, 0, 0}), ExponentVector({0, 1, 0})),
                    DimensionError);
    for (int t = 0; t < 50; ++t) {
        std::size_t n = static_cast<std::size_t>(rand_int(2, 4));
        auto w = rand_skew(n);
        auto i = rand_exponents(n, -5, 5);
        auto j = rand_exponents(n, -5, 5);
        auto k = rand_exponents(n, -5, 5);
        CHECK(m_form(w, i, i) == Rational(0));
        CHECK(m_form(w, i, j) == -m_form(w, j, i));
        CHECK(m_form(w, i + i, j) == Rational(2) * m_form(w, i, j));
        CHECK(m_form(w, i + k, j) == m_form(w, i, j) + m_form(w, k, j));
    }
}

TEST_CASE("monomial bracket examples") {
    auto omega = omega2(1);
    SUBCASE("coordinate monomials reproduce the structure") {
        auto r = bracket_monomial(omega, ExponentVector({1, 0}), ExponentVector({0, 1}));
        CHECK(r == LaurentPolynomial::monomial(ExponentVector({1, 1})));
    }
    SUBCASE("opposite exponents bracket to zero") {
        for (int t = 0; t < 20; ++t) {
            auto i = rand_exponents(3, -4, 4);
            CHECK(bracket_monomial(rand_skew(3), i, -i).is_zero());
        }
    }
    SUBCASE("x1^2 against x2, against the derivative oracle") {
        auto r = bracket_monomial(omega, ExponentVector({2, 0}), ExponentVector({0, 1}));
        CHECK(r == LaurentPolynomial::monomial(ExponentVector({2, 1}), Rational(2)));
        auto s = PoissonStructure::log_canonical({"x", "y"}, omega);
        auto via_eq1 = bracket_via_derivatives(
            s, parse_expr("x^2", s.names()), parse_expr("y", s.names()));
        CHECK(via_eq1 == RationalFunction::from_laurent(r));
    }
}

TEST_CASE("laurent bracket examples") {
    auto omega = omega2(7);
    auto x = LaurentPolynomial::variable(2, 0);
    auto y = LaurentPolynomial::variable(2, 1);
    CHECK(bracket_laurent(omega, x, y) ==
          LaurentPolynomial::monomial(ExponentVector({1, 1}), Rational(7)));
    auto f = rand_laurent(2, 5, -3, 3);
    CHECK(bracket_laurent(omega, f, f).is_zero());
    CHECK(bracket_laurent(omega2(1), x + y, x - y) ==
          LaurentPolynomial::monomial(ExponentVector({1, 1}), Rational(-2)));
}

TEST_CASE("single-monomial inputs agree with the monomial kernel") {
    for (int t = 0; t < 30; ++t) {
        std::size_t n = static_cast<std::size_t>(rand_int(2, 4));
        auto w = rand_skew(n);
        auto i = rand_exponents(n, -3, 3);
        auto j = rand_exponents(n, -3, 3);
        auto a = rand_nonzero_scalar();
        auto b = rand_nonzero_scalar();
        auto lhs = bracket_laurent(w, LaurentPolynomial::monomial(i, a),
                                   LaurentPolynomial::monomial(j, b));
        CHECK(lhs == bracket_monomial(w, i, j).scaled(a * b));
    }
}

TEST_CASE("bracket of reciprocal coordinates") {
    // {1/x_i, x_j} = -omega_ij x_j / x_i
    auto s = PoissonStructure::log_canonical({"x", "y"}, omega2(3));
    auto got = poisson_bracket(s, parse_expr("1/x", s.names()), parse_expr("y", s.names()));
    CHECK(got == parse_expr("-3*y/x", s.names()));
}

TEST_CASE("quadratic xyz structure reproduces the displayed brackets") {
    auto s = quadratic_xyz();
    const auto& names = s.names();
    CHECK(poisson_bracket(s, parse_expr("x", names), parse_expr("y/z^2", names)) ==
          parse_expr("a - 2*b*y^3*z^-3", names));
    CHECK(poisson_bracket(s, parse_expr("x/z", names), parse_expr("y/z", names)) ==
          parse_expr("a - b*y^3*z^-3 + c*x^3*z^-3", names));
    // central parameters bracket to zero with everything
    CHECK(poisson_bracket(s, parse_expr("a", names), parse_expr("x*y/(x+z)", names)).is_zero());
    auto report = structure_validate(s);
    CHECK(report.valid());
    CHECK(s.jacobi_validated());
}

TEST_CASE("jacobiator vanishes on log-canonical coordinate triples") {
    for (int t = 0; t < 10; ++t) {
        auto s = rand_log_canonical(static_cast<std::size_t>(rand_int(3, 4)));
        auto report = structure_validate(s);
        CHECK(report.valid());
    }
}

TEST_CASE("structure validation flags a broken Jacobi identity") {
    std::vector<std::string> names = {"x", "y", "z"};
    auto table = [&](const char* yz) {
        std::map<std::pair<std::size_t, std::size_t>, RationalFunction> t;
        t.emplace(std::make_pair(0, 1), parse_expr("y^2", names));
        t.emplace(std::make_pair(0, 2), parse_expr("z", names));
        t.emplace(std::make_pair(1, 2), parse_expr(yz, names));
        return t;
    };
    auto good = PoissonStructure::general(names, {}, table("0"));
    CHECK(structure_validate(good).valid());

    auto bad = PoissonStructure::general(names, {}, table("x"));
    auto report = structure_validate(bad);
    CHECK(!report.valid());
    REQUIRE(report.failures.size() == 1);
    CHECK(report.failures[0].i == 0);
    CHECK(report.failures[0].j == 1);
    CHECK(report.failures[0].k == 2);
    CHECK(!report.failures[0].value.is_zero());
    CHECK(!bad.jacobi_validated());
}

TEST_CASE("log-canonical detection") {
    SUBCASE("coordinates return omega itself") {
        for (int t = 0; t < 5; ++t) {
            std::size_t n = static_cast<std::size_t>(rand_int(2, 4));
            auto s = rand_log_canonical(n);
            std::vector<RationalFunction> coords;
            for (std::size_t k = 0; k < n; ++k) coords.push_back(s.coordinate(k));
            auto check = check_log_canonical(s, coords);
            REQUIRE(check.ok);
            CHECK(check.omega == s.omega());
        }
    }
    SUBCASE("monomial coordinate changes transform omega by A Omega A^T") {
        for (int t = 0; t < 10; ++t) {
            std::size_t n = static_cast<std::size_t>(rand_int(2, 3));
            auto s = rand_log_canonical(n);
            std::vector<ExponentVector> rows;
            std::vector<RationalFunction> monomials;
            for (std::size_t k = 0; k < n; ++k) {
                rows.push_back(rand_exponents(n, -2, 2));
                monomials.push_back(RationalFunction::monomial(rows.back()));
            }
            auto check = check_log_canonical(s, monomials);
            REQUIRE(check.ok);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    CHECK(check.omega.at(i, j) == m_form(s.omega(), rows[i], rows[j]));
        }
    }
    SUBCASE("a non-log-canonical system is reported with its ratio") {
        auto s = rand_log_canonical(2);
        std::vector<RationalFunction> gs = {parse_expr("x1+x2", s.names()),
                                            parse_expr("x2", s.names())};
        auto check = check_log_canonical(s, gs);
        if (!s.omega().at(0, 1).is_zero()) {
            CHECK(!check.ok);
            CHECK(check.bad_i == 0);
            CHECK(check.bad_j == 1);
            CHECK(!check.ratio.as_scalar().has_value());
        }
    }
    SUBCASE("zero candidates are rejected") {
        auto s = rand_log_canonical(2);
        std::vector<RationalFunction> gs = {RationalFunction::zero(2),
                                            RationalFunction::one(2)};
        CHECK_THROWS_AS(check_log_canonical(s, gs), Error);
    }
}

TEST_CASE("dimension-3 monomial family") {
    SUBCASE("quadratic specialization meets the condition and closes") {
        auto fam = monomial3_family({0, 0, 2}, {0, 2, 0}, {2, 0, 0}, Rational(1), Rational(1),
                                    Rational(1));
        CHECK(fam.sufficient_condition_met);
        CHECK(fam.jacobi_closed_form.is_zero());
        CHECK(structure_validate(fam.structure).valid());
    }
    SUBCASE("violating a1 = b1 gives a nonzero jacobiator") {
        auto fam = monomial3_family({0, 0, 0}, {1, 0, 0}, {0, 0, 0}, Rational(1), Rational(1),
                                    Rational(1));
        CHECK(!fam.sufficient_condition_met);
        CHECK(!fam.jacobi_closed_form.is_zero());
        CHECK(!structure_validate(fam.structure).valid());
    }
    SUBCASE("the sufficient condition forces a zero jacobiator") {
        for (int t = 0; t < 20; ++t) {
            std::int64_t a1 = rand_int(0, 3), a2 = rand_int(0, 3), a3 = rand_int(0, 3);
            std::int64_t b2 = rand_int(0, 3), b3 = rand_int(0, 3);
            std::int64_t c1 = rand_int(0, 3);
            auto fam = monomial3_family({a1, a2, a3}, {a1, b2, b3}, {c1, a2, b3},
                                        rand_nonzero_scalar(), rand_nonzero_scalar(),
                                        rand_nonzero_scalar());
            CHECK(fam.sufficient_condition_met);
            CHECK(fam.jacobi_closed_form.is_zero());
        }
    }
}

TEST_CASE("bracket identities on random inputs") {
    for (int t = 0; t < 25; ++t) {
        std::size_t n = 2;
        auto s = rand_log_canonical(n);
        auto f = rand_rational_function(n);
        auto g = rand_rational_function(n);
        auto h = rand_rational_function(n);
        auto fg = poisson_bracket(s, f, g);
        CHECK(fg == -poisson_bracket(s, g, f));
        CHECK(poisson_bracket(s, f * g, h) ==
              f * poisson_bracket(s, g, h) + poisson_bracket(s, f, h) * g);
        if (!f.is_zero())
            CHECK(poisson_bracket(s, f.inverse(), g) ==
                  -(f * f).inverse() * fg);
    }
}

TEST_CASE("dual-path equivalence on laurent inputs") {
    for (int t = 0; t < 30; ++t) {
        std::size_t n = static_cast<std::size_t>(rand_int(2, 4));
        auto s = rand_log_canonical(n);
        auto f = rand_laurent(n, 5, -3, 3);
        auto g = rand_laurent(n, 5, -3, 3);
        auto fast = RationalFunction::from_laurent(bracket_laurent(s.omega(), f, g));
        auto reference = bracket_via_derivatives(s, RationalFunction::from_laurent(f),
                                                 RationalFunction::from_laurent(g));
        CHECK(fast == reference);
    }
}

TEST_CASE("support of a bracket is inside the Minkowski sum") {
    for (int t = 0; t < 25; ++t) {
        std::size_t n = 3;
        auto w = rand_skew(n);
        auto f = rand_nonzero_laurent(n, 5, -3, 3);
        auto g = rand_nonzero_laurent(n, 5, -3, 3);
        auto br = bracket_laurent(w, f, g);
        for (const auto& [e, c] : br.terms()) {
            bool in_sum = false;
            for (const auto& [i, a] : f.terms())
                for (const auto& [j, b] : g.terms())
                    if (i + j == e) in_sum = true;
            CHECK(in_sum);
        }
    }
}

TEST_CASE("constant term of log-canonical brackets is zero") {
    for (int t = 0; t < 15; ++t) {
        std::size_t n = 2;
        auto s = rand_log_canonical(n);
        auto f = rand_rational_function(n);
        auto g = rand_rational_function(n);
        CHECK(constant_term(poisson_bracket(s, f, g)) == Rational(0));
    }
}

TEST_CASE("structure construction rejects bad input") {
    CHECK_THROWS_AS(PoissonStructure::log_canonical({"x", "y"}, SkewMatrix(3)), DimensionError);
    std::map<std::pair<std::size_t, std::size_t>, RationalFunction> bad;
    bad.emplace(std::make_pair(1, 1), RationalFunction::one(2));
    CHECK_THROWS_AS(PoissonStructure::general({"x", "y"}, {}, std::move(bad)), StructureError);
    std::map<std::pair<std::size_t, std::size_t>, RationalFunction> central_bad;
    central_bad.emplace(std::make_pair(0, 1), RationalFunction::one(2));
    CHECK_THROWS_AS(PoissonStructure::general({"x", "c"}, {false, true}, std::move(central_bad)),
                    StructureError);
    CHECK_THROWS_AS(quadratic_xyz().index_of("nope"), StructureError);
}
