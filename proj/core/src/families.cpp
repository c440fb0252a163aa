#include "cremona/families.hpp"

#include <algorithm>

#include "cremona/errors.hpp"

namespace cremona {

DiagonalSpec::DiagonalSpec(std::vector<Rational> ls) : lambdas(std::move(ls)) {
    if (lambdas.empty()) throw precondition_error("DiagonalSpec: empty scale tuple");
    for (const auto& l : lambdas)
        if (l == 0) throw precondition_error("DiagonalSpec: zero scale factor");
}

ProjectiveMap diagonal_map(const DiagonalSpec& spec) {
    const int n = spec.dim();
    std::vector<Polynomial> comps;
    comps.reserve(n + 1);
    comps.push_back(Polynomial::variable(n, 0));
    for (int i = 1; i <= n; ++i)
        comps.push_back(Polynomial::variable(n, i) * spec.lambdas[i - 1]);
    return ProjectiveMap(std::move(comps));
}

DiagonalSpec diagonal_inverse(const DiagonalSpec& spec) {
    std::vector<Rational> inv;
    inv.reserve(spec.lambdas.size());
    for (const auto& l : spec.lambdas) inv.push_back(Rational(1) / l);
    return DiagonalSpec(std::move(inv));
}

ProjectiveMap monomial_map(const IntMatrix& m) {
    if (!is_sl_prime(m))
        throw precondition_error("monomial_map: matrix is not unimodular with column sums 1");
    const int n = m.size();

    // Clear denominators rowwise: c_i = max(0, max_j(-M_ij)).
    std::vector<long long> clear(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) clear[i] = std::max(clear[i], -m.at(i, j));

    std::vector<Polynomial> comps;
    comps.reserve(n + 1);
    ExponentVec e0(n + 1, 0);
    e0[0] = 1;
    for (int i = 0; i < n; ++i) e0[i + 1] = static_cast<int>(clear[i]);
    comps.push_back(Polynomial::monomial(n, e0, Rational(1)));
    for (int j = 0; j < n; ++j) {
        ExponentVec e(n + 1, 0);
        for (int i = 0; i < n; ++i) e[i + 1] = static_cast<int>(m.at(i, j) + clear[i]);
        comps.push_back(Polynomial::monomial(n, e, Rational(1)));
    }
    return ProjectiveMap(primitive_tuple(comps));
}

std::pair<IntMatrix, IntMatrix> a1_a2_matrices(int n) {
    if (n < 4) throw precondition_error("a1_a2: need ambient dimension at least 4");
    IntMatrix m1 = IntMatrix::identity(n);
    IntMatrix m2 = IntMatrix::identity(n);
    IntVec i1(n, 0), i2(n, 0);
    i1[0] = 1;  i1[1] = -1;  i1[2] = 1;
    i2[0] = -1; i2[1] = 1;   i2[2] = 1;
    m1.set_column(2, i1);  // image of X3
    m2.set_column(1, i2);  // image of X2
    return {m1, m2};
}

std::pair<ProjectiveMap, ProjectiveMap> a1_a2(int n) {
    auto [m1, m2] = a1_a2_matrices(n);
    return {monomial_map(m1), monomial_map(m2)};
}

namespace {

// X1^d * psi(X2/X1, ..., Xn/X1) cleared of denominators: the affine
// component (in variables X1..X_{n-1}) homogenized into X1..Xn of P^n.
Polynomial homogenize_onto_tail(const Polynomial& psi_comp, int n, int d) {
    Polynomial out(n);
    for (const auto& [e, c] : psi_comp.terms()) {
        int total = 0;
        for (std::size_t i = 1; i < e.size(); ++i) total += e[i];
        if (total > d)
            throw precondition_error(
                "sigma_map: affine component degree exceeds the map degree");
        ExponentVec r(n + 1, 0);
        r[1] = d - total;
        for (std::size_t i = 1; i < e.size(); ++i) r[i + 1] = e[i];
        out.add_term(r, c);
    }
    return out;
}

}  // namespace

ProjectiveMap sigma_map(const AffinePolyMap& psi, int d) {
    const int n = psi.dim + 1;
    if (d < 1) throw precondition_error("sigma_map: degree must be at least 1");

    std::vector<Polynomial> comps;
    comps.reserve(n + 1);

    ExponentVec e(n + 1, 0);
    Polynomial c0(n);
    e[0] = d;
    c0.add_term(e, Rational(1));
    std::fill(e.begin(), e.end(), 0);
    e[0] = 1;
    e[1] = d - 1;
    c0.add_term(e, Rational(1));
    comps.push_back(std::move(c0));

    Polynomial c1(n);
    std::fill(e.begin(), e.end(), 0);
    e[0] = d - 1;
    e[1] = 1;
    c1.add_term(e, Rational(1));
    std::fill(e.begin(), e.end(), 0);
    e[1] = d;
    c1.add_term(e, Rational(1));
    comps.push_back(std::move(c1));

    for (int j = 2; j <= n; ++j) {
        Polynomial cj(n);
        std::fill(e.begin(), e.end(), 0);
        e[0] = d - 1;
        e[j] = 1;
        cj.add_term(e, Rational(1));
        cj += homogenize_onto_tail(psi.components[j - 2], n, d);
        comps.push_back(std::move(cj));
    }
    return ProjectiveMap(std::move(comps));
}

std::optional<ProjectiveMap> sigma_elementary_inverse(const AffinePolyMap& psi, int d) {
    const AffinePolyMap id = affine_identity(psi.dim);
    int moved = -1;
    for (int k = 0; k < psi.dim; ++k) {
        if (psi.components[k] == id.components[k]) continue;
        if (moved != -1) return std::nullopt;
        moved = k;
    }
    if (moved == -1) return sigma_map(psi, d);  // identity is its own inverse here

    const Polynomial shift = psi.components[moved] - id.components[moved];
    for (const auto& [exp, c] : shift.terms())
        if (exp[moved + 1] != 0) return std::nullopt;  // p must be free of x_k

    std::vector<Polynomial> comps = id.components;
    comps[moved] = id.components[moved] - shift;
    return sigma_map(AffinePolyMap(psi.dim, std::move(comps)), d);
}

ShearSpec::ShearSpec(int n_, int d_, Polynomial lambda) : n(n_), d(d_), lambda_d(std::move(lambda)) {
    if (n < 4) throw precondition_error("ShearSpec: need ambient dimension at least 4");
    if (d < 2) throw precondition_error("ShearSpec: need degree at least 2");
    if (lambda_d.ambient_n() != n) throw precondition_error("ShearSpec: wrong ambient dimension");
    if (lambda_d.is_zero() || lambda_d.homogeneous_degree() != d)
        throw precondition_error("ShearSpec: lambda_d must be homogeneous of the map degree");
    bool has_x2_power = false;
    for (const auto& [e, c] : lambda_d.terms()) {
        if (e[0] != 0 || e[3] != 0)
            throw precondition_error("ShearSpec: lambda_d must avoid X0 and X3");
        if (e[2] == d) has_x2_power = true;
    }
    if (!has_x2_power)
        throw precondition_error("ShearSpec: lambda_d needs a nonzero X2^d coefficient");
}

ShearSpec default_shear(int n, int d) {
    if (n < 4) throw precondition_error("default_shear: need ambient dimension at least 4");
    if (d < 2) throw precondition_error("default_shear: need degree at least 2");
    Polynomial lambda(n);
    ExponentVec e(n + 1, 0);
    e[1] = d - 1;
    e[4] = 1;
    lambda.add_term(e, Rational(1));
    std::fill(e.begin(), e.end(), 0);
    e[2] = d;
    lambda.add_term(e, Rational(1));
    return ShearSpec(n, d, std::move(lambda));
}

namespace {

std::vector<Polynomial> shear_components(int n, int d, const Polynomial& lambda_d) {
    std::vector<Polynomial> comps;
    comps.reserve(n + 1);
    Polynomial factor(n);  // X0^{d-1} + X1^{d-1}
    ExponentVec e(n + 1, 0);
    e[0] = d - 1;
    factor.add_term(e, Rational(1));
    std::fill(e.begin(), e.end(), 0);
    e[1] = d - 1;
    factor.add_term(e, Rational(1));

    for (int i = 0; i <= n; ++i) {
        if (i == 4) {
            Polynomial c4(n);
            std::fill(e.begin(), e.end(), 0);
            e[0] = d - 1;
            e[4] = 1;
            c4.add_term(e, Rational(1));
            c4 += lambda_d;
            comps.push_back(std::move(c4));
        } else {
            comps.push_back(factor * Polynomial::variable(n, i));
        }
    }
    return comps;
}

}  // namespace

ShearMaps shear_lambda(const ShearSpec& spec) {
    ProjectiveMap lambda(shear_components(spec.n, spec.d, spec.lambda_d));

    // Invertible shape: lambda_d = X1^{d-1} X4 + Q with Q free of X4.
    ExponentVec pivot(spec.n + 1, 0);
    pivot[1] = spec.d - 1;
    pivot[4] = 1;
    Polynomial q = spec.lambda_d;
    const auto it = spec.lambda_d.terms().find(pivot);
    bool invertible = it != spec.lambda_d.terms().end() && it->second == 1;
    if (invertible) {
        q.add_term(pivot, Rational(-1));
        for (const auto& [e, c] : q.terms())
            if (e[4] != 0) {
                invertible = false;
                break;
            }
    }
    if (!invertible) return {std::move(lambda), std::nullopt};

    Polynomial mirrored(spec.n);
    mirrored.add_term(pivot, Rational(1));
    mirrored -= q;
    ProjectiveMap inverse(shear_components(spec.n, spec.d, mirrored));
    return {std::move(lambda), std::move(inverse)};
}

AffinePolyMap xi_restrict(const ProjectiveMap& map_raw) {
    const ProjectiveMap map = map_raw.normalized();
    if (!g_form(map))
        throw precondition_error("xi_restrict: map does not have the required leading shape");
    const int n = map.ambient_n();
    const std::vector<Polynomial> restricted = restrict_to_hyperplane(map, 0);

    const Polynomial& r1 = restricted[1];
    if (r1.is_zero())
        throw precondition_error("xi_restrict: component 1 restricts to zero");
    if (r1.term_count() != 1)
        throw precondition_error(
            "xi_restrict: restriction is not polynomial (component 1 is not a monomial)");
    const auto& [e1, c1] = *r1.terms().begin();
    const int d = e1[1];
    for (std::size_t i = 2; i < e1.size(); ++i)
        if (e1[i] != 0)
            throw precondition_error(
                "xi_restrict: restriction is not polynomial (component 1 is not c*X1^d)");

    // x_j image = restricted_{j+1} / (c1 X1^d) with x_i = X_{i+1}/X1.
    const int m = n - 1;
    std::vector<Polynomial> comps;
    comps.reserve(m);
    for (int j = 2; j <= n; ++j) {
        const Polynomial& rj = restricted[j];
        if (rj.is_zero())
            throw precondition_error("xi_restrict: component restricts to zero");
        Polynomial out(m);
        for (const auto& [e, c] : rj.terms()) {
            // e = (0, e1, ..., en) homogeneous of degree d in X1..Xn.
            ExponentVec r(m + 1, 0);
            int tail = 0;
            for (int i = 2; i <= n; ++i) {
                r[i - 1] = e[i];
                tail += e[i];
            }
            if (e[0] != 0 || tail + e[1] != d)
                throw precondition_error("xi_restrict: restriction is not homogeneous of degree d");
            out.add_term(r, c / c1);
        }
        comps.push_back(std::move(out));
    }
    return AffinePolyMap(m, std::move(comps));
}

}  // namespace cremona
