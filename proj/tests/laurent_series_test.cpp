#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plab/expr.hpp"
#include "plab/poisson.hpp"
#include "plab/series.hpp"
#include "test_support.hpp"

using namespace plab;
using namespace plab::testing;

namespace {

const std::vector<std::string> XY = {"x", "y"};

RationalFunction rf(const char* text) { return parse_expr(text, XY); }

Rational coeff_at(const TruncatedSeries& s, std::initializer_list<std::int64_t> e) {
    return s.terms.coeff(ExponentVector(e));
}

} // namespace

TEST_CASE("coefficient extraction examples") {
    auto f = rf("1/(x+y)");
    // inner expansion K<<x,y>>: sum (-1)^n x^-(n+1) y^n
    CHECK(coefficient(f, ExponentVector({-1, 0})) == Rational(1));
    CHECK(coefficient(f, ExponentVector({1, -2})) == Rational(0));
    // order <<y,x>>: sum (-1)^n x^n y^-(n+1)
    CHECK(coefficient(f, ExponentVector({1, -2}), {1, 0}) == Rational(-1));
    CHECK(coefficient(rf("3 + x*y^-1"), ExponentVector({0, 0})) == Rational(3));
    CHECK(coefficient(rf("3 + x*y^-1"), ExponentVector({1, -1})) == Rational(1));
}

TEST_CASE("constant term examples") {
    CHECK(constant_term(rf("1/(x+y)")) == Rational(0));
    CHECK(constant_term(rf("(x^2+3)/x^2")) == Rational(1));
    CHECK(constant_term(RationalFunction::zero(2)) == Rational(0));
}

TEST_CASE("constant term of a log-canonical bracket vanishes") {
    auto f = rf("x/(x+y)");
    auto g = rf("y/(x-y)");
    for (std::int64_t w : {1, -2, 5}) {
        SkewMatrix omega(2);
        omega.set(0, 1, Rational(static_cast<long long>(w)));
        auto s = PoissonStructure::log_canonical(XY, omega);
        CHECK(constant_term(poisson_bracket(s, f, g)) == Rational(0));
    }
}

TEST_CASE("iterated expansion of 1/(x+y), both orders") {
    auto f = rf("1/(x+y)");
    SUBCASE("order (x,y): powers of x unbounded below") {
        auto s = expand_iterated(f, SeriesWindow({-4, 0}, {0, 3}), {0, 1});
        CHECK(s.terms.term_count() == 4);
        for (std::int64_t n = 0; n <= 3; ++n)
            CHECK(coeff_at(s, {-(n + 1), n}) == (n % 2 ? Rational(-1) : Rational(1)));
    }
    SUBCASE("order (y,x): powers of y unbounded below") {
        auto s = expand_iterated(f, SeriesWindow({0, -4}, {3, 0}), {1, 0});
        CHECK(s.terms.term_count() == 4);
        for (std::int64_t n = 0; n <= 3; ++n)
            CHECK(coeff_at(s, {n, -(n + 1)}) == (n % 2 ? Rational(-1) : Rational(1)));
    }
}

TEST_CASE("geometric series expansion") {
    std::vector<std::string> X = {"x"};
    auto f = parse_expr("1/(1-x)", X);
    auto s = expand_iterated(f, SeriesWindow({0}, {5}));
    CHECK(s.terms.term_count() == 6);
    for (std::int64_t n = 0; n <= 5; ++n) CHECK(coeff_at(s, {n}) == Rational(1));
}

TEST_CASE("window validation") {
    CHECK_THROWS_AS(SeriesWindow({2, 0}, {0, 3}), Error);
    CHECK_THROWS_AS(SeriesWindow({0}, {1, 2}), DimensionError);
    CHECK_THROWS_AS(expand_iterated(rf("x"), SeriesWindow({0}, {1})), DimensionError);
    CHECK_THROWS_AS(coefficient(rf("x"), ExponentVector({0, 0}), {0, 0}), Error);
}

TEST_CASE("windowed expansion agrees with single-coefficient extraction") {
    for (int t = 0; t < 12; ++t) {
        auto f = rand_rational_function(2);
        std::vector<std::size_t> order = {0, 1};
        if (rand_int(0, 1)) order = {1, 0};
        SeriesWindow w({rand_int(-4, -2), rand_int(-4, -2)}, {rand_int(0, 2), rand_int(0, 2)});
        auto s = expand_iterated(f, w, order);
        for (std::int64_t i = w.lo(0); i <= w.hi(0); ++i)
            for (std::int64_t j = w.lo(1); j <= w.hi(1); ++j) {
                ExponentVector e({i, j});
                CHECK(s.terms.coeff(e) == coefficient(f, e, order));
            }
        for (const auto& [e, c] : s.terms.terms()) CHECK(w.contains(e));
    }
}

TEST_CASE("coefficient extraction is linear") {
    for (int t = 0; t < 20; ++t) {
        auto f = rand_rational_function(2);
        auto g = rand_rational_function(2);
        Rational a = rand_scalar(), b = rand_scalar();
        ExponentVector e = rand_exponents(2, -3, 3);
        CHECK(coefficient(f.scaled(a) + g.scaled(b), e) ==
              a * coefficient(f, e) + b * coefficient(g, e));
    }
}

TEST_CASE("expansion of a Laurent polynomial reads off its terms") {
    for (int t = 0; t < 20; ++t) {
        auto f = rand_laurent(2, 5, -3, 3);
        auto g = RationalFunction::from_laurent(f);
        for (const auto& [e, c] : f.terms()) CHECK(coefficient(g, e) == c);
        CHECK(coefficient(g, rand_exponents(2, 4, 6)) == f.coeff(rand_exponents(2, 4, 6)));
    }
}

TEST_CASE("windowed products are windowed convolutions") {
    // Restricted family whose supports are bounded below coordinatewise:
    // denominators with a nonzero constant term expand inside V + N^2, so
    // finitely many pairs contribute to each product coefficient.
    auto rand_bounded = [&]() {
        LaurentPolynomial den = rand_poly(2, 2, 2);
        den.add_term(ExponentVector(2), rand_nonzero_scalar());
        if (den.is_zero()) den = LaurentPolynomial::constant(2, Rational(1));
        auto f = RationalFunction::quotient(rand_nonzero_poly(2, 3, 2), den);
        return f.shifted_by(rand_exponents(2, -2, 1));
    };
    for (int t = 0; t < 10; ++t) {
        auto f = rand_bounded();
        auto g = rand_bounded();
        if (f.is_zero() || g.is_zero()) continue;
        auto prod = f * g;
        auto vf = f.monomial_factor(), vg = g.monomial_factor();
        const std::int64_t h0 = vf[0] + vg[0] + 2, h1 = vf[1] + vg[1] + 2;
        auto sf = expand_iterated(
            f, SeriesWindow({vf[0], vf[1]}, {h0 - vg[0], h1 - vg[1]}));
        auto sg = expand_iterated(
            g, SeriesWindow({vg[0], vg[1]}, {h0 - vf[0], h1 - vf[1]}));
        LaurentPolynomial conv = sf.terms * sg.terms;
        SeriesWindow w({vf[0] + vg[0], vf[1] + vg[1]}, {h0, h1});
        auto direct = expand_iterated(prod, w);
        for (std::int64_t i = w.lo(0); i <= w.hi(0); ++i)
            for (std::int64_t j = w.lo(1); j <= w.hi(1); ++j) {
                ExponentVector e({i, j});
                CHECK(direct.terms.coeff(e) == conv.coeff(e));
            }
    }
}

TEST_CASE("three-variable extraction under a permuted adjunction order") {
    std::vector<std::string> XYZ = {"x", "y", "z"};
    auto f = parse_expr("1/(x+y+z)", XYZ);
    // order (y,z,x): outermost x, then z, then y. The x^2 slice of the
    // expansion is (y+z)^-3; its z^1 slice is -3 y^-4.
    std::vector<std::size_t> order = {1, 2, 0};
    CHECK(coefficient(f, ExponentVector({2, -4, 1}), order) == Rational(-3));
    CHECK(coefficient(f, ExponentVector({2, -3, 0}), order) == Rational(1));
    CHECK(coefficient(f, ExponentVector({2, 0, -3}), order) == Rational(0));
    CHECK(coefficient(f, ExponentVector({-1, 0, 0}), order) == Rational(0));
}

TEST_CASE("three-variable extraction recurses through the tower") {
    std::vector<std::string> XYZ = {"x", "y", "z"};
    auto f = parse_expr("1/(x+y+z)", XYZ);
    // innermost expansion: 1/(x+y+z) = sum over the tower; the coefficient of
    // x^a y^b z^c with a+b+c = -1, b,c >= 0 is the multinomial (-1)^(b+c) C(b+c, b)
    auto coefficient_of = [&](std::int64_t a, std::int64_t b, std::int64_t c) {
        return coefficient(f, ExponentVector({a, b, c}));
    };
    CHECK(coefficient_of(-1, 0, 0) == Rational(1));
    CHECK(coefficient_of(-2, 1, 0) == Rational(-1));
    CHECK(coefficient_of(-2, 0, 1) == Rational(-1));
    CHECK(coefficient_of(-3, 1, 1) == Rational(2));
    CHECK(coefficient_of(-4, 2, 1) == Rational(-3));
    CHECK(coefficient_of(0, 0, 0) == Rational(0));
    CHECK(coefficient_of(-1, 2, -1) == Rational(0));
}
