#include "doctest.h"

#include "cremona/errors.hpp"
#include "cremona/mapfile.hpp"
#include "cremona/parse.hpp"
#include "cremona/report.hpp"

#include "test_support.hpp"

using namespace cremona;
using cremona::testing::P;

TEST_CASE("expression grammar") {
    CHECK(P("X0^2 + 2*X0*X1", 1).term_count() == 2);
    CHECK(P("(X0+X1)*(X0-X1)", 1) == P("X0^2 - X1^2", 1));
    CHECK(P("3/4", 0) == Polynomial::constant(0, Rational(3, 4)));
    CHECK(P("1/2*X0", 0) == Polynomial::variable(0, 0) * Rational(1, 2));
    CHECK(P("-X0 + X1", 1) == P("X1 - X0", 1));
    CHECK(P("(X0+X1)^3", 1) == poly_pow(P("X0+X1", 1), 3));
    CHECK(P("X0 # trailing comment", 0) == Polynomial::variable(0, 0));
    CHECK(P("X0^0", 0) == Polynomial::constant(0, 1));
}

TEST_CASE("grammar rejections carry positions") {
    CHECK_THROWS_WITH_AS(P("X0^-1", 0), "negative exponent (line 1, column 4)", parse_error);

    // No implicit multiplication.
    CHECK_THROWS_AS(P("2X0", 0), parse_error);
    // Variable index out of range and above the two-digit cap.
    CHECK_THROWS_AS(P("X3", 2), parse_error);
    CHECK_THROWS_AS(P("X100", 99), parse_error);
    // '/' is only a literal separator, not an operator.
    CHECK_THROWS_AS(P("X0/2", 1), parse_error);
    CHECK_THROWS_AS(P("1/0", 1), parse_error);
    CHECK_THROWS_AS(P("(X0+X1", 1), parse_error);
    CHECK_THROWS_AS(P("", 1), parse_error);

    try {
        P("X0 +\n @", 1);
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 2);
    }
}

TEST_CASE("print/parse round trip on random polynomials") {
    testing::Rng rng(123321);
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial p = testing::random_polynomial(rng, 3, 5, 6);
        CHECK(parse_polynomial(p.to_string(), 3) == p);
    }
    CHECK(parse_polynomial(Polynomial::zero(2).to_string(), 2) == Polynomial::zero(2));
}

TEST_CASE("map files") {
    const std::string text = R"(
# two generators and an affine entry
n = 4
map a1 = [X0*X2 : X1*X2 : X2^2 : X1*X3 : X2*X4]
map diag = [X0 : 2*X1 : 3*X2 : 5*X3 : 7*X4]
affine psi = (X1, X2, X3 + X1^2, X4)
)";
    const MapFile file = parse_map_file(text);
    CHECK(file.ambient_n == 4);
    CHECK(file.maps.size() == 2);
    CHECK(file.affine_maps.size() == 1);
    CHECK(file.maps.at("a1").degree() == 2);
    CHECK(file.affine_maps.at("psi").dim == 4);

    // Multi-line tuples parse.
    const MapFile split = parse_map_file("n = 1\nmap id = [X0 :\n  X1]\n");
    CHECK(split.maps.at("id").degree() == 1);
}

TEST_CASE("map file rejections") {
    CHECK_THROWS_AS(parse_map_file("map f = [X0 : X1]\n"), parse_error);      // header missing
    CHECK_THROWS_AS(parse_map_file("n = 1\nmap f = [X0 : X1 : X0]\n"), parse_error);  // arity
    CHECK_THROWS_AS(parse_map_file("n = 1\nmap f = [X0 : X1^2]\n"), parse_error);  // degrees
    CHECK_THROWS_AS(parse_map_file("n = 1\nmap f = [X0 : X1]\nmap f = [X0 : X1]\n"),
                    parse_error);  // duplicate
    CHECK_THROWS_AS(parse_map_file("n = 1\naffine g = (X0 + X1)\n"), parse_error);  // X0 used
    CHECK_THROWS_AS(parse_map_file("n = 1\nmap f = [X0 : X1\n"), parse_error);  // unclosed
}

TEST_CASE("reports serialize deterministically") {
    const Json args = Json{{"map", "a1"}, {"file", "maps.txt"}};
    const Json report =
        make_report("rho", args, fnv1a_digest("input-bytes"), Json{{"n", 4}});
    const std::string once = render_report(report);
    const std::string twice = render_report(
        make_report("rho", args, fnv1a_digest("input-bytes"), Json{{"n", 4}}));
    CHECK(once == twice);
    CHECK(once.find("\"status\": \"ok\"") != std::string::npos);

    CHECK(fnv1a_digest("abc") == fnv1a_digest("abc"));
    CHECK(fnv1a_digest("abc") != fnv1a_digest("abd"));

    // Big integers render as decimal strings.
    const Rational big = rational_pow(Rational(10), 25) + Rational(1, 3);
    const std::string s = json_of(big).get<std::string>();
    CHECK(s.find('/') != std::string::npos);
    CHECK(s.size() > 25);
}
