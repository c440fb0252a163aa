#include "doctest.h"

#include "cremona/errors.hpp"
#include "cremona/polynomial.hpp"

#include "test_support.hpp"

using namespace cremona;
using cremona::testing::P;

TEST_CASE("ring arithmetic on the stated examples") {
    CHECK(P("X0+X1", 1) * P("X0-X1", 1) == P("X0^2 - X1^2", 1));
    CHECK(poly_pow(P("X0+X1", 1), 2) == P("X0^2 + 2*X0*X1 + X1^2", 1));

    Polynomial cancel = P("X0^2", 1) + P("X0^2", 1) * Rational(-1);
    CHECK(cancel.is_zero());
    CHECK(cancel.term_count() == 0);
}

TEST_CASE("ring axioms on random polynomials") {
    testing::Rng rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        const Polynomial a = testing::random_polynomial(rng, 3, 4, 4);
        const Polynomial b = testing::random_polynomial(rng, 3, 4, 4);
        const Polynomial c = testing::random_polynomial(rng, 3, 4, 4);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Polynomial::zero(3));
    }
}

TEST_CASE("substitution basics") {
    // h = X0*X1 into squares.
    std::vector<Polynomial> squares = {P("X0^2", 1), P("X1^2", 1)};
    CHECK(P("X0*X1", 1).substituted(squares) == P("X0^2*X1^2", 1));

    std::vector<Polynomial> images = {P("X0^2", 1), P("X0*X1", 1)};
    CHECK(P("X0+X1", 1).substituted(images) == P("X0^2 + X0*X1", 1));
}

TEST_CASE("substitution by the identity tuple is the identity") {
    testing::Rng rng(7);
    const int n = 3;
    std::vector<Polynomial> id;
    for (int i = 0; i <= n; ++i) id.push_back(Polynomial::variable(n, i));
    for (int trial = 0; trial < 100; ++trial) {
        const Polynomial h = testing::random_polynomial(rng, n, 5, 5);
        CHECK(h.substituted(id) == h);
    }
}

TEST_CASE("homogeneous substitution multiplies degrees") {
    testing::Rng rng(99);
    const int n = 2;
    for (int trial = 0; trial < 40; ++trial) {
        const Polynomial h = testing::random_homogeneous(rng, n, 3, 3);
        std::vector<Polynomial> images;
        for (int i = 0; i <= n; ++i) images.push_back(testing::random_homogeneous(rng, n, 2, 2));
        const Polynomial out = h.substituted(images);
        if (out.is_zero()) continue;
        auto deg = out.homogeneous_degree();
        REQUIRE(deg.has_value());
        CHECK(*deg == 3 * 2);
    }
}

TEST_CASE("substitution arity is checked") {
    std::vector<Polynomial> too_short = {P("X0", 1)};
    CHECK_THROWS_AS(P("X0+X1", 1).substituted(too_short), precondition_error);
}

TEST_CASE("homogeneity and X0-degree queries") {
    const Polynomial h = P("X0^2*X1 + X0*X2^2", 2);
    CHECK(h.homogeneous_degree() == 3);
    CHECK(h.x0_degree() == 2);

    CHECK_FALSE(P("X0 + X1^2", 1).homogeneous_degree().has_value());

    for (int d = 2; d <= 5; ++d) {
        Polynomial lambda0(2);
        ExponentVec e(3, 0);
        e[0] = d;
        lambda0.add_term(e, Rational(1));
        e = {1, d - 1, 0};
        lambda0.add_term(e, Rational(1));
        CHECK(lambda0.x0_degree() == d);
    }

    CHECK_THROWS_AS(Polynomial::zero(1).x0_degree(), precondition_error);
}

TEST_CASE("gcd on the stated examples") {
    CHECK(multivariate_gcd(P("X0^2 - X1^2", 2), P("X0^2 + 2*X0*X1 + X1^2", 2)) ==
          P("X0 + X1", 2));
    CHECK(multivariate_gcd(P("X0 + X1", 2), P("X2", 2)) == P("1", 2));

    std::vector<Polynomial> tuple = {P("X0*X2", 2), P("X1*X2", 2), P("X2^2", 2)};
    const auto prim = primitive_tuple(tuple);
    CHECK(prim[0] == P("X0", 2));
    CHECK(prim[1] == P("X1", 2));
    CHECK(prim[2] == P("X2", 2));
}

TEST_CASE("gcd normalization and degenerate inputs") {
    // Monic in the leading (lex) coefficient.
    const Polynomial g = multivariate_gcd(P("2*X0 + 2*X1", 1), P("4*X0 + 4*X1", 1));
    CHECK(g == P("X0 + X1", 1));

    CHECK(multivariate_gcd(P("0", 1), P("3*X1", 1)) == P("X1", 1));
    CHECK_THROWS_AS(multivariate_gcd(Polynomial::zero(1), Polynomial::zero(1)),
                    precondition_error);
    CHECK_THROWS_AS(primitive_tuple(std::vector<Polynomial>{Polynomial::zero(1)}),
                    precondition_error);
}

TEST_CASE("primitive tuples: planted common factors come back out") {
    testing::Rng rng(4242);
    for (int trial = 0; trial < 25; ++trial) {
        const Polynomial g = testing::random_nonzero_polynomial(rng, 2, 2, 2);
        const Polynomial a = testing::random_nonzero_polynomial(rng, 2, 3, 3);
        const Polynomial b = testing::random_nonzero_polynomial(rng, 2, 3, 3);
        const Polynomial c = testing::random_nonzero_polynomial(rng, 2, 3, 3);

        std::vector<Polynomial> tuple = {g * a, g * b, g * c};
        const auto prim = primitive_tuple(tuple);

        // Re-applying is a fixed point and the result has trivial gcd.
        const auto again = primitive_tuple(prim);
        CHECK(again == prim);
        const Polynomial common = multivariate_gcd(multivariate_gcd(prim[0], prim[1]), prim[2]);
        CHECK(common == Polynomial::constant(2, 1));

        // The extracted factor contains the planted g and recombines exactly.
        const Polynomial extracted =
            multivariate_gcd(multivariate_gcd(tuple[0], tuple[1]), tuple[2]);
        CHECK(try_exact_divide(extracted, g).has_value());
        for (int i = 0; i < 3; ++i) CHECK(extracted * prim[i] == tuple[i]);
    }
}

TEST_CASE("gcd stays tame on denser four-variable inputs") {
    testing::Rng rng(17);
    for (int trial = 0; trial < 6; ++trial) {
        const Polynomial g = testing::random_nonzero_polynomial(rng, 3, 3, 4);
        const Polynomial a = testing::random_nonzero_polynomial(rng, 3, 4, 6);
        const Polynomial b = testing::random_nonzero_polynomial(rng, 3, 4, 6);
        const Polynomial found = multivariate_gcd(g * a, g * b);
        REQUIRE(try_exact_divide(found, g).has_value());
        // Whatever else it contains divides both inputs.
        CHECK(try_exact_divide(g * a, found).has_value());
        CHECK(try_exact_divide(g * b, found).has_value());
    }
}

TEST_CASE("exact division") {
    const Polynomial a = P("X0^2 - X1^2", 1);
    auto q = try_exact_divide(a, P("X0 + X1", 1));
    REQUIRE(q.has_value());
    CHECK(*q == P("X0 - X1", 1));
    CHECK_FALSE(try_exact_divide(P("X0^2 + X1", 1), P("X0 + X1", 1)).has_value());
}

TEST_CASE("valuation-style multiplicativity of leading terms") {
    testing::Rng rng(555);
    for (int trial = 0; trial < 50; ++trial) {
        const Polynomial a = testing::random_nonzero_polynomial(rng, 3, 4, 4);
        const Polynomial b = testing::random_nonzero_polynomial(rng, 3, 4, 4);
        const Polynomial ab = a * b;
        const auto& [ea, ca] = a.leading_term();
        const auto& [eb, cb] = b.leading_term();
        const auto& [eab, cab] = ab.leading_term();
        for (std::size_t i = 0; i < ea.size(); ++i) CHECK(eab[i] == ea[i] + eb[i]);
        CHECK(cab == ca * cb);
    }
}
