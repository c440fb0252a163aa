#include "doctest.h"

#include "cremona/errors.hpp"
#include "cremona/leading.hpp"

#include "test_support.hpp"

using namespace cremona;
using cremona::testing::P;

namespace {

ProjectiveMap map_of(std::initializer_list<const char*> exprs, int n) {
    std::vector<Polynomial> comps;
    for (const char* e : exprs) comps.push_back(P(e, n));
    return ProjectiveMap(std::move(comps));
}

// Independent oracle: expand h(f) and read off its leading pair.
LeadingPair brute_force_leading(const Polynomial& h, const ProjectiveMap& f) {
    return leading_pair(h.substituted(f.normalized().components()));
}

// Random homogeneous h with a unique support element at its top X0-level,
// which is the hypothesis the prediction needs.
Polynomial random_predictable(cremona::testing::Rng& rng, int n, int degree) {
    std::uniform_int_distribution<int> level(0, degree);
    const int d_h = level(rng);
    Polynomial h(n);
    ExponentVec top(n + 1, 0);
    top[0] = d_h;
    int budget = degree - d_h;
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> part(0, budget);
        top[i] = part(rng);
        budget -= top[i];
    }
    top[n] = budget;
    h.add_term(top, cremona::testing::random_small_rational(rng, false));
    // Lower-level noise.
    std::uniform_int_distribution<int> extra(0, 3);
    for (int t = extra(rng); t > 0; --t) {
        if (d_h == 0) break;
        std::uniform_int_distribution<int> lower(0, d_h - 1);
        ExponentVec e(n + 1, 0);
        e[0] = lower(rng);
        int rest = degree - e[0];
        for (int i = 1; i < n; ++i) {
            std::uniform_int_distribution<int> part(0, rest);
            e[i] = part(rng);
            rest -= e[i];
        }
        e[n] = rest;
        h.add_term(e, cremona::testing::random_small_rational(rng));
    }
    return h;
}

}  // namespace

TEST_CASE("leading pairs") {
    const Polynomial h = P("X0^2*X1*X3 + X0^2*X2^2 + X0*X1^3", 3);
    const LeadingPair lp = leading_pair(h);
    CHECK(lp.x0_deg == 2);
    CHECK(lp.residual == IntVec{1, 0, 1});

    CHECK(leading_pair(P("X0^5", 3)) == LeadingPair{5, IntVec{0, 0, 0}});

    for (int d = 2; d <= 4; ++d) {
        // Component 1 of the degree-d family: X0^{d-1} X1 + X1^d.
        Polynomial lambda1(3);
        lambda1.add_term({d - 1, 1, 0, 0}, Rational(1));
        lambda1.add_term({0, d, 0, 0}, Rational(1));
        CHECK(leading_pair(lambda1) == LeadingPair{d - 1, IntVec{1, 0, 0}});
    }

    CHECK_THROWS_AS(leading_pair(Polynomial::zero(2)), precondition_error);
}

TEST_CASE("valuation and fractions") {
    CHECK(valuation_fraction(P("X0*X1^2", 3), P("X0*X2", 3)) == IntVec{2, -1, 0});

    testing::Rng rng(314159);
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial a = testing::random_nonzero_polynomial(rng, 3, 4, 4);
        const Polynomial b = testing::random_nonzero_polynomial(rng, 3, 4, 4);
        IntVec sum = valuation(a);
        const IntVec vb = valuation(b);
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += vb[i];
        CHECK(valuation(a * b) == sum);
    }
}

TEST_CASE("shape test on diagonal maps and involutions") {
    const auto diag = map_of({"X0", "2*X1", "3*X2", "5*X3"}, 3);
    const auto data = g_form(diag);
    REQUIRE(data.has_value());
    CHECK(data->d_f == 1);
    CHECK(data->i_f0 == IntVec{0, 0, 0});
    CHECK(data->i_fj[0] == IntVec{1, 0, 0});
    CHECK(data->i_fj[1] == IntVec{0, 1, 0});
    CHECK(data->i_fj[2] == IntVec{0, 0, 1});
    CHECK(data->alphas == std::vector<Rational>{1, 2, 3, 5});

    // The standard involution has X0-degree 0 in component 0.
    const auto cremona3 =
        map_of({"X1*X2*X3", "X0*X2*X3", "X0*X1*X3", "X0*X1*X2"}, 3);
    CHECK_FALSE(g_form(cremona3).has_value());

    // Origin-fixing unimodular maps embed into the shape...
    const auto good = embed_affine(
        AffinePolyMap(3, {P("X1 + X2^2", 3), P("X2 + X3^2", 3), P("X3", 3)}));
    CHECK(g_form(good).has_value());

    // ...but translations break it: component 1 reaches X0-level d_f.
    const auto bad = embed_affine(AffinePolyMap(3, {P("X1 + 1", 3), P("X2", 3), P("X3", 3)}));
    CHECK_FALSE(g_form(bad).has_value());
}

TEST_CASE("shape test is computed on the coprime representative") {
    const auto diag = map_of({"X0", "2*X1", "3*X2"}, 2);
    const auto data = g_form(diag);
    REQUIRE(data.has_value());

    // Multiply the tuple by a common monomial; the test still passes with
    // identical extracted data.
    const auto scaled = map_of({"X0*X1*X2", "2*X1^2*X2", "3*X1*X2^2"}, 2);
    const auto data2 = g_form(scaled);
    REQUIRE(data2.has_value());
    CHECK(data2->d_f == data->d_f);
    CHECK(data2->i_f0 == data->i_f0);
    CHECK(data2->i_fj == data->i_fj);
    CHECK(data2->alphas == data->alphas);
}

TEST_CASE("rho on diagonal maps is the identity") {
    const auto diag = map_of({"X0", "2*X1", "3*X2", "5*X3"}, 3);
    CHECK(rho(diag) == IntMatrix::identity(3));

    const auto cremona3 =
        map_of({"X1*X2*X3", "X0*X2*X3", "X0*X1*X3", "X0*X1*X2"}, 3);
    CHECK_THROWS_AS(rho(cremona3), precondition_error);
}

TEST_CASE("column-sum-1 unimodular test") {
    CHECK(is_sl_prime(IntMatrix::identity(4)));

    IntMatrix m = IntMatrix::identity(4);
    m.set_column(2, IntVec{1, -1, 1, 0});
    CHECK(is_sl_prime(m));

    IntMatrix flip = IntMatrix::identity(4);
    flip.at(3, 3) = -1;
    CHECK_FALSE(is_sl_prime(flip));  // det -1 and column sum -1

    IntMatrix shift = IntMatrix::identity(4);
    shift.at(0, 1) = 1;  // column 1 sums to 2
    CHECK_FALSE(is_sl_prime(shift));
}

TEST_CASE("integer matrix inverse and determinant") {
    IntMatrix m = IntMatrix::identity(3);
    m.set_column(1, IntVec{-1, 1, 1});
    CHECK(m.determinant() == 1);
    const IntMatrix inv = m.inverse_unimodular();
    CHECK(m * inv == IntMatrix::identity(3));
    CHECK(inv * m == IntMatrix::identity(3));
}

TEST_CASE("leading-term prediction: stated examples") {
    const auto diag = map_of({"X0", "2*X1", "3*X2", "5*X3"}, 3);
    // h = X0: (d_f, I_{f_0}).
    CHECK(predict_leading(P("X0", 3), diag) == LeadingPair{1, IntVec{0, 0, 0}});
    CHECK(predict_leading(P("X0", 3), diag) == brute_force_leading(P("X0", 3), diag));
}

TEST_CASE("leading-term prediction against the expansion oracle") {
    testing::Rng rng(271828);
    std::vector<ProjectiveMap> maps;
    maps.push_back(map_of({"X0", "2*X1", "3*X2", "5*X3"}, 3));
    maps.push_back(embed_affine(
        AffinePolyMap(3, {P("X1 + X2^2", 3), P("X2 + X3^2", 3), P("X3", 3)})));
    maps.push_back(embed_affine(
        AffinePolyMap(3, {P("X1", 3), P("X2 + X1*X3", 3), P("X3 - X1^2", 3)})));

    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const Polynomial h = random_predictable(rng, 3, 3);
        for (const auto& f : maps) {
            CHECK(predict_leading(h, f) == brute_force_leading(h, f));
            ++checked;
        }
    }
    CHECK(checked >= 150);
}

TEST_CASE("prediction hypothesis failures are distinct from shape failures") {
    const auto diag = map_of({"X0", "2*X1", "3*X2"}, 2);
    // Two support elements at the top X0-level.
    const Polynomial two_tops = P("X0*X1 + X0*X2", 2);
    CHECK_THROWS_AS(predict_leading(two_tops, diag), hypothesis_error);

    const auto not_gform = map_of({"X1*X2", "X0*X2", "X0*X1"}, 2);
    CHECK_THROWS_AS(predict_leading(P("X0", 2), not_gform), precondition_error);

    CHECK_THROWS_AS(predict_leading(P("X0 + X1^2", 2), diag), precondition_error);
}

TEST_CASE("membership wrapper needs both shapes and a verified pair") {
    const auto d = map_of({"X0", "2*X1", "3*X2"}, 2);
    const auto dinv = map_of({"X0", "1/2*X1", "1/3*X2"}, 2);
    CHECK(g_membership(d, dinv));
    CHECK_FALSE(g_membership(d, d));  // pair fails
    const auto invol = map_of({"X1*X2", "X0*X2", "X0*X1"}, 2);
    CHECK_FALSE(g_membership(invol, invol));  // shape fails
}
