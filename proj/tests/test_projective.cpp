#include "doctest.h"

#include "cremona/errors.hpp"
#include "cremona/projective.hpp"

#include "test_support.hpp"

using namespace cremona;
using cremona::testing::P;

namespace {

ProjectiveMap map_of(std::initializer_list<const char*> exprs, int n) {
    std::vector<Polynomial> comps;
    for (const char* e : exprs) comps.push_back(P(e, n));
    return ProjectiveMap(std::move(comps));
}

AffinePolyMap affine_of(std::initializer_list<const char*> exprs) {
    const int m = static_cast<int>(exprs.size());
    std::vector<Polynomial> comps;
    for (const char* e : exprs) comps.push_back(P(e, m));
    return AffinePolyMap(m, std::move(comps));
}

ProjectivePoint point(std::initializer_list<int> coords) {
    std::vector<Rational> qs;
    for (int c : coords) qs.push_back(Rational(c));
    return ProjectivePoint(std::move(qs));
}

}  // namespace

TEST_CASE("projective equality ignores common factors") {
    const auto id = identity_map(2);
    const auto scaled = map_of({"X0*X2", "X1*X2", "X2^2"}, 2);
    CHECK(equals_projectively(id, scaled));

    const auto diag121 = map_of({"X0", "X1", "X2"}, 2);
    const auto diag122 = map_of({"X0", "2*X1", "X2"}, 2);
    CHECK_FALSE(equals_projectively(diag121, diag122));
}

TEST_CASE("map construction validates shape") {
    std::vector<Polynomial> bad = {P("X0", 1), P("X1^2", 1)};
    CHECK_THROWS_AS(ProjectiveMap(std::move(bad)), precondition_error);
    std::vector<Polynomial> inhom = {P("X0 + X0^2", 1), P("X1", 1)};
    CHECK_THROWS_AS(ProjectiveMap(std::move(inhom)), precondition_error);
    std::vector<Polynomial> zeros = {Polynomial::zero(1), Polynomial::zero(1)};
    CHECK_THROWS_AS(ProjectiveMap(std::move(zeros)), precondition_error);
}

TEST_CASE("composition order and normalization") {
    // Hand-built diagonal maps compose entrywise.
    const auto d1 = map_of({"X0", "2*X1", "3*X2"}, 2);
    const auto d2 = map_of({"X0", "5*X1", "7*X2"}, 2);
    const auto both = compose(d1, d2);
    CHECK(equals_projectively(both, map_of({"X0", "10*X1", "21*X2"}, 2)));

    // Degree multiplies before normalization.
    const auto sq = map_of({"X0^2", "X1^2", "X2^2"}, 2);
    CHECK(compose(sq, sq, false).degree() == 4);

    // Normalization strips the common factor and is idempotent.
    const auto raw = map_of({"X0*X2", "X1*X2", "X2^2"}, 2);
    const auto norm = raw.normalized();
    CHECK(norm == identity_map(2));
    CHECK(norm.normalized() == norm);
}

TEST_CASE("composition into the base locus is rejected") {
    // The outer representative has X1 as a common factor; the inner map's
    // image lies in X1 = 0, so every component of the composite vanishes.
    const auto outer = map_of({"X1*X0", "X1^2", "X1*X2"}, 2);
    std::vector<Polynomial> comps = {P("X0", 2), Polynomial::zero(2), P("X2", 2)};
    const ProjectiveMap inner(std::move(comps));
    CHECK_THROWS_AS(compose(outer, inner, false), precondition_error);
}

TEST_CASE("inverse verification") {
    const auto d = map_of({"X0", "2*X1", "3*X2", "5*X3"}, 3);
    const auto dinv = map_of({"X0", "1/2*X1", "1/3*X2", "1/5*X3"}, 3);
    CHECK(verify_inverse_pair(d, dinv));
    CHECK(verify_inverse_pair(dinv, d));  // symmetry
    CHECK_FALSE(verify_inverse_pair(d, d));
}

TEST_CASE("restriction to a hyperplane") {
    const auto id = identity_map(3);
    const auto r = restrict_to_hyperplane(id, 0);
    CHECK(r[0].is_zero());
    CHECK(r[1] == P("X1", 3));
    CHECK(r[2] == P("X2", 3));
    CHECK(r[3] == P("X3", 3));
}

TEST_CASE("contraction detection on the identity is negative") {
    const auto id = identity_map(3);
    CHECK_FALSE(contracts_to_point(id, 3).has_value());
}

TEST_CASE("contraction of a genuinely contracting map") {
    // [X1^2 : X1^2 : X0*X1] sends X0 = 0 wait -- use a map collapsing X2 = 0
    // onto a point: [X2*X0 : X2*X1 : X0^2] restricted to X0 = 0 is
    // (0, X2*X1, 0), i.e. the point [0:1:0].
    const auto f = map_of({"X2*X0", "X2*X1", "X0^2"}, 2);
    const auto p = contracts_to_point(f, 0);
    REQUIRE(p.has_value());
    CHECK(same_projective_point(*p, point({0, 1, 0})));

    // All-zero restriction is a precondition failure.
    const auto g = map_of({"X0*X2", "X1*X2", "X2^2"}, 2);
    CHECK_THROWS_AS(contracts_to_point(g, 2), precondition_error);
}

TEST_CASE("evaluation and fixed points") {
    const auto d = map_of({"X0", "2*X1", "3*X2"}, 2);
    const auto img = evaluate(d, point({1, 1, 1}));
    CHECK(same_projective_point(img, point({1, 2, 3})));
    CHECK(fixes_point(identity_map(2), point({1, 4, 9})));

    // Base-locus evaluation throws.
    const auto f = map_of({"X0*X1", "X1^2", "X1*X2"}, 2);
    CHECK_THROWS_AS(evaluate(f, point({1, 0, 1})), precondition_error);
}

TEST_CASE("embedding affine polynomial maps") {
    CHECK(equals_projectively(embed_affine(affine_of({"X1", "X2", "X3"})), identity_map(3)));

    const auto f = embed_affine(affine_of({"X1 + X2^2", "X2 + X3^2", "X3"}));
    CHECK(f == map_of({"X0^2", "X0*X1 + X2^2", "X0*X2 + X3^2", "X0*X3"}, 3));

    // Origin not fixed: the X0-part of component 1 picks up X0^2.
    const auto g = embed_affine(affine_of({"X1 + 1", "X2", "X3"}));
    CHECK(equals_projectively(g, map_of({"X0", "X0 + X1", "X2", "X3"}, 3)));
}

TEST_CASE("jacobian determinants") {
    CHECK(jacobian_det(affine_of({"X1 + X2^2", "X2 + X3^2", "X3"})) ==
          Polynomial::constant(3, 1));
    CHECK(jacobian_det(affine_of({"2*X1", "X2"})) == Polynomial::constant(2, 2));
}

TEST_CASE("jacobian chain rule, exactly") {
    testing::Rng rng(1312);
    for (int trial = 0; trial < 20; ++trial) {
        // Small maps with nontrivial derivatives.
        const int m = 2;
        std::vector<Polynomial> pc, qc;
        for (int i = 0; i < m; ++i) {
            pc.push_back(testing::random_polynomial(rng, m, 2, 2).with_variable_zero(0));
            qc.push_back(testing::random_polynomial(rng, m, 2, 2).with_variable_zero(0));
        }
        // Keep them honest affine maps (components may be zero; fine).
        const AffinePolyMap psi(m, pc);
        const AffinePolyMap phi(m, qc);
        const AffinePolyMap chain = affine_compose(psi, phi);

        std::vector<Polynomial> phi_images;
        phi_images.push_back(Polynomial::constant(m, 1));
        for (const auto& c : phi.components) phi_images.push_back(c);

        const Polynomial lhs = jacobian_det(chain);
        const Polynomial rhs = jacobian_det(psi).substituted(phi_images) * jacobian_det(phi);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("affine composition convention: outer after inner") {
    const auto shift = affine_of({"X1 + X2^2", "X2"});
    const auto dbl = affine_of({"2*X1", "X2"});
    // (dbl o shift)(x) = dbl(shift(x)) = (2 x1 + 2 x2^2, x2).
    CHECK(affine_equal(affine_compose(dbl, shift), affine_of({"2*X1 + 2*X2^2", "X2"})));
    // (shift o dbl)(x) = (2 x1 + x2^2, x2).
    CHECK(affine_equal(affine_compose(shift, dbl), affine_of({"2*X1 + X2^2", "X2"})));
}
