#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cremona/polynomial.hpp"

namespace cremona {

/// Point of projective n-space; coordinates are defined up to a common
/// nonzero scalar and must not all vanish.
struct ProjectivePoint {
    std::vector<Rational> coords;

    explicit ProjectivePoint(std::vector<Rational> c);
    int ambient_n() const { return static_cast<int>(coords.size()) - 1; }
};

bool same_projective_point(const ProjectivePoint& a, const ProjectivePoint& b);

/// Rational self-map of P^n as an (n+1)-tuple of homogeneous polynomials of
/// one shared degree, not all zero.  Representatives are not assumed coprime;
/// normalized() divides out the common factor.
class ProjectiveMap {
public:
    explicit ProjectiveMap(std::vector<Polynomial> components);

    int ambient_n() const { return ambient_n_; }
    int degree() const { return degree_; }
    const std::vector<Polynomial>& components() const { return components_; }
    const Polynomial& component(int i) const { return components_.at(i); }

    ProjectiveMap normalized() const;

    bool operator==(const ProjectiveMap& rhs) const = default;

private:
    int ambient_n_;
    int degree_;
    std::vector<Polynomial> components_;
};

ProjectiveMap identity_map(int ambient_n);

/// outer o inner: components outer_i(inner_0, ..., inner_n).  With
/// normalize set the result is reduced to its coprime representative.
/// Throws when the composition is identically zero (inner lands in the
/// base locus of this representative of outer).
ProjectiveMap compose(const ProjectiveMap& outer, const ProjectiveMap& inner,
                      bool normalize = true);

/// Agreement as rational maps: f_i g_j - f_j g_i = 0 for all i < j.
bool equals_projectively(const ProjectiveMap& f, const ProjectiveMap& g);

/// Both compositions equal the identity projectively.
bool verify_inverse_pair(const ProjectiveMap& f, const ProjectiveMap& g);

/// Substitute X_index = 0 in every component.  All-zero output is legal
/// (the hyperplane may lie in the base locus of this representative).
std::vector<Polynomial> restrict_to_hyperplane(const ProjectiveMap& f, int index);

/// When f maps the hyperplane (X_index = 0) to a single point, that point;
/// otherwise empty.  The identity r_a p_b - r_b p_a = 0 is checked
/// symbolically; the candidate point comes from a deterministic grid of
/// sample points.  Throws if the restriction is identically zero.
std::optional<ProjectivePoint> contracts_to_point(const ProjectiveMap& f, int index);

/// Coordinatewise evaluation; throws when p lands in the base locus of
/// this representative.
ProjectivePoint evaluate(const ProjectiveMap& f, const ProjectivePoint& p);

bool fixes_point(const ProjectiveMap& f, const ProjectivePoint& p);

/// Polynomial self-map of affine m-space.  Components live in X1..Xm of an
/// ambient-m polynomial ring and never mention X0.
struct AffinePolyMap {
    int dim;
    std::vector<Polynomial> components;

    AffinePolyMap(int dim, std::vector<Polynomial> components);
};

AffinePolyMap affine_identity(int dim);

/// outer o inner on affine space, fully expanded.
AffinePolyMap affine_compose(const AffinePolyMap& outer, const AffinePolyMap& inner);

bool affine_equal(const AffinePolyMap& a, const AffinePolyMap& b);

/// Homogenization [X0^D : X0^D psi_1(X/X0) : ...] with D = max component
/// degree, reduced to the coprime representative.
ProjectiveMap embed_affine(const AffinePolyMap& psi);

/// Determinant of the matrix of partial derivatives, exact.
Polynomial jacobian_det(const AffinePolyMap& psi);

}  // namespace cremona
