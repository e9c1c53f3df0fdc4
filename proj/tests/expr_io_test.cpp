#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "plab/expr.hpp"
#include "plab/gallery.hpp"
#include "plab/structure_io.hpp"
#include "test_support.hpp"

using namespace plab;
using namespace plab::testing;

namespace {

const std::vector<std::string> XY = {"x", "y"};

RationalFunction rf(const char* text) { return parse_expr(text, XY); }

} // namespace

TEST_CASE("parser examples") {
    auto f = rf("x*y^-2 + 1");
    LaurentPolynomial expect(2);
    expect.add_term(ExponentVector({1, -2}), Rational(1));
    expect.add_term(ExponentVector({0, 0}), Rational(1));
    CHECK(f == RationalFunction::from_laurent(expect));

    CHECK(rf("(x^2-y^2)/(x-y)") == rf("x+y"));

    auto g = rf("1/(x+y)");
    CHECK(g.numerator() == *parse_expr("1", XY).as_laurent());
    CHECK(g.denominator() == *parse_expr("x+y", XY).as_laurent());

    CHECK(rf("  x *y^ -2+ 1  ") == f); // whitespace-insensitive
    CHECK(rf("-1/2") == RationalFunction::constant(2, Rational(-1, 2)));
    CHECK(rf("2^3") == RationalFunction::constant(2, Rational(8)));
    CHECK(rf("x^2^3") == rf("x^6")); // iterated powers apply left to right
    CHECK(rf("x-y-y") == rf("x-2*y"));
    CHECK(rf("x/y/y") == rf("x*y^-2"));
}

TEST_CASE("parser error reporting") {
    CHECK_THROWS_AS(rf("x + z"), ParseError);
    try {
        rf("x + z*y");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
        CHECK(std::string(e.what()).find("unknown identifier 'z'") != std::string::npos);
    }
    CHECK_THROWS_AS(rf("x + "), ParseError);
    CHECK_THROWS_AS(rf("(x"), ParseError);
    CHECK_THROWS_AS(rf("x^y"), ParseError);
    CHECK_THROWS_AS(rf("x $ y"), ParseError);
    CHECK_THROWS_AS(rf("1/(x-x)"), ParseError); // division by the zero polynomial
    CHECK_THROWS_AS(rf("0^-1"), ParseError);
    try {
        rf("1/(y-y)");
    } catch (const ParseError& e) {
        CHECK(e.position() == 1);
    }
}

TEST_CASE("formatter examples") {
    CHECK(format_expr(rf("x+y"), XY) == "x + y");
    CHECK(format_expr(RationalFunction::one(2), XY) == "1");
    CHECK(format_expr(RationalFunction::zero(2), XY) == "0");
    CHECK(format_expr(rf("1/x + 1/y"), XY) == "y^-1 + x^-1");
    CHECK(format_expr(rf("1/(x+y)"), XY) == "1/(x + y)");
    CHECK(format_expr(rf("(x+y)/(x*y+1)"), XY) == "(x + y)/(1 + x*y)");
    CHECK(format_expr(rf("-x"), XY) == "-x");
    CHECK(format_expr(rf("-1/2*x + y"), XY) == "-1/2*x + y");

    std::vector<std::string> names = {"x", "y", "z", "a", "b", "c"};
    auto f = parse_expr("-2*b*y^3*z^-3 + a", names);
    CHECK(format_expr(f, names) == "a - 2*b*y^3*z^-3");
}

TEST_CASE("round-trip through format and parse") {
    for (int t = 0; t < 40; ++t) {
        auto f = rand_rational_function(2);
        CHECK(parse_expr(format_expr(f, XY), XY) == f);
    }
    std::vector<std::string> xyz = {"x", "y", "z"};
    for (int t = 0; t < 20; ++t) {
        auto f = RationalFunction::quotient(rand_poly(3, 3, 2), rand_nonzero_poly(3, 2, 2))
                     .shifted_by(rand_exponents(3, -2, 2));
        CHECK(parse_expr(format_expr(f, xyz), xyz) == f);
    }
}

TEST_CASE("structure files: omega form") {
    auto s = parse_structure("# log-canonical, n = 3\n"
                             "variables: x, y, z\n"
                             "omega:\n"
                             "0 1 -1/2\n"
                             "-1 0 2\n"
                             "1/2 -2 0\n");
    CHECK(s.size() == 3);
    CHECK(s.is_log_canonical());
    CHECK(s.omega().at(0, 2) == Rational(-1, 2));
    CHECK(s.jacobi_validated());
    CHECK(s.pi(0, 1) == parse_expr("x*y", s.names()));
    CHECK(s.pi(2, 0) == parse_expr("1/2*x*z", s.names()));
}

TEST_CASE("structure files: bracket form with central symbols") {
    auto s = parse_structure("variables: x, y, z\n"
                             "central: a, b, c\n"
                             "brackets:\n"
                             "x,y: a*z^2\n"
                             "x,z: b*y^2\n"
                             "y,z: c*x^2\n");
    CHECK(s.size() == 6);
    CHECK(!s.is_log_canonical());
    CHECK(s.is_central(3));
    CHECK(!s.is_central(0));
    CHECK(s.jacobi_validated());
    CHECK(s.pi(1, 0) == parse_expr("-a*z^2", s.names()));
}

TEST_CASE("structure files: omega form with central symbols") {
    auto s = parse_structure("variables: x, y\n"
                             "central: a\n"
                             "omega:\n"
                             "0 2\n"
                             "-2 0\n");
    CHECK(s.size() == 3);
    CHECK(s.is_log_canonical());
    CHECK(s.is_central(2));
    CHECK(s.omega().at(0, 1) == Rational(2));
    CHECK(s.pi(0, 2).is_zero());
    CHECK(s.pi(0, 1) == parse_expr("2*x*y", s.names()));
}

TEST_CASE("structure files: consistent double orientation is accepted") {
    auto s = parse_structure("variables: x, y\n"
                             "brackets:\n"
                             "x,y: x\n"
                             "y,x: -x\n");
    CHECK(s.pi(0, 1) == parse_expr("x", s.names()));
}

TEST_CASE("structure files: rejection cases") {
    // not skew
    CHECK_THROWS_AS(parse_structure("variables: x, y\nomega:\n0 1\n1 0\n"), StructureError);
    // inconsistent orientations
    CHECK_THROWS_AS(parse_structure("variables: x, y\nbrackets:\nx,y: x\ny,x: x\n"),
                    StructureError);
    // duplicate pair
    CHECK_THROWS_AS(parse_structure("variables: x, y\nbrackets:\nx,y: x\nx,y: x\n"),
                    StructureError);
    // undeclared variable
    CHECK_THROWS_AS(parse_structure("variables: x, y\nbrackets:\nx,z: x\n"), StructureError);
    CHECK_THROWS_AS(parse_structure("variables: x, y\nbrackets:\nx,y: x+w\n"), ParseError);
    // malformed
    CHECK_THROWS_AS(parse_structure("brackets:\nx,y: x\n"), StructureError);
    CHECK_THROWS_AS(parse_structure("variables: x, y\n"), StructureError);
    CHECK_THROWS_AS(parse_structure("variables: x, y\nomega:\n0 1\n"), StructureError);
    CHECK_THROWS_AS(parse_structure("variables: x, 2y\nomega:\n0 0\n0 0\n"), StructureError);
    CHECK_THROWS_AS(parse_structure("variables: x, x\nomega:\n0 0\n0 0\n"), StructureError);
    // central brackets must vanish
    CHECK_THROWS_AS(parse_structure("variables: x\ncentral: a\nbrackets:\nx,a: x\n"),
                    StructureError);
    // trailing garbage
    CHECK_THROWS_AS(parse_structure("variables: x, y\nomega:\n0 1\n-1 0\nextra\n"),
                    StructureError);
    // Jacobi violation raises unless validation is skipped
    const char* broken = "variables: x, y, z\n"
                         "brackets:\n"
                         "x,y: y^2\n"
                         "x,z: z\n"
                         "y,z: x\n";
    CHECK_THROWS_AS(parse_structure(broken), StructureError);
    auto s = parse_structure(broken, /*validate_jacobi=*/false);
    CHECK(!s.jacobi_validated());
    CHECK(!structure_validate(s).valid());
}

TEST_CASE("structure file round-trips through a temp file") {
    auto path = std::filesystem::temp_directory_path() / "plab_axis_test.psn";
    {
        std::ofstream out(path);
        out << "variables: x, y\nbrackets:\nx,y: x\n";
    }
    auto s = load_structure(path);
    CHECK(s.size() == 2);
    CHECK(s.pi(0, 1) == parse_expr("x", s.names()));
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_structure(path), StructureError);
}

TEST_CASE("gallery entries verify their checklists") {
    for (const char* name : {"sl2", "sln:2", "sln:3", "borel-sl2", "axis", "ab-family:2,3",
                             "ab-family:1,1", "quadratic-xyz"}) {
        auto entry = gallery(name);
        CHECK(!entry.identities.empty());
        for (const auto& check : entry.identities) {
            INFO(entry.name, ": ", check.description);
            CHECK(check.passed);
        }
        CHECK(entry.structure.jacobi_validated());
    }
}

TEST_CASE("gallery sl2 checklist includes the displayed table") {
    auto entry = gallery("sl2");
    bool saw_ad = false, saw_bc = false;
    for (const auto& check : entry.identities) {
        if (check.description == "{a, d} = b*c") saw_ad = true;
        if (check.description == "{b, c} = 0") saw_bc = true;
    }
    CHECK(saw_ad);
    CHECK(saw_bc);
    CHECK(entry.structure.pi(0, 3) == parse_expr("b*c", entry.structure.names()));
}

TEST_CASE("gallery sln:2 reproduces the sl2 table") {
    auto sl2 = gallery("sl2");
    auto sln2 = gallery("sln:2");
    // (a,b,c,d) correspond to (x11, x12, x21, x22) in order
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            auto expect = sl2.structure.pi(i, j);
            auto got = sln2.structure.pi(i, j);
            // same coefficients on the same exponent vectors; names differ
            CHECK(got.monomial_factor() == expect.monomial_factor());
            CHECK(got.numerator() == expect.numerator());
            CHECK(got.denominator() == expect.denominator());
        }
}

TEST_CASE("gallery borel-sl2 certifies log-canonicity with omega = 1/2") {
    auto entry = gallery("borel-sl2");
    REQUIRE(entry.structure.is_log_canonical());
    CHECK(entry.structure.omega().at(0, 1) == Rational(1, 2));
}

TEST_CASE("gallery rejects unknown names") {
    CHECK_THROWS_AS(gallery("so3"), Error);
    CHECK_THROWS_AS(gallery("sln:1"), Error);
    CHECK_THROWS_AS(gallery("ab-family:2"), Error);
    CHECK(gallery_names().size() == 6);
}
