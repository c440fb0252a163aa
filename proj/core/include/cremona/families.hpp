#pragma once

#include <optional>
#include <utility>

#include "cremona/leading.hpp"
#include "cremona/projective.hpp"

namespace cremona {

/// [X0 : l1 X1 : ... : ln Xn] with all li nonzero.
struct DiagonalSpec {
    std::vector<Rational> lambdas;

    explicit DiagonalSpec(std::vector<Rational> ls);
    int dim() const { return static_cast<int>(lambdas.size()); }
};

ProjectiveMap diagonal_map(const DiagonalSpec& spec);

DiagonalSpec diagonal_inverse(const DiagonalSpec& spec);

/// The homogeneous representative of the monomial map attached to a
/// column-sum-1 unimodular matrix: on the chart X0 != 0 it sends each
/// affine coordinate to the Laurent monomial given by the matching column.
/// Requires is_sl_prime(m).
ProjectiveMap monomial_map(const IntMatrix& m);

/// The two standard generators in dimension n >= 4: identity matrices with
/// column 3 replaced by (1,-1,1,0,...) and column 2 by (-1,1,1,0,...).
std::pair<IntMatrix, IntMatrix> a1_a2_matrices(int n);
std::pair<ProjectiveMap, ProjectiveMap> a1_a2(int n);

/// Degree-d self-map of P^n restricting to the affine automorphism psi on
/// the hyperplane X0 = 0 (chart X1 != 0):
///   X0 -> X0^d + X0 X1^{d-1},  X1 -> X0^{d-1} X1 + X1^d,
///   Xj -> X0^{d-1} Xj + X1^d psi_{j-1}(X2/X1, ..., Xn/X1)   (j >= 2).
/// psi has dimension n-1 and component degrees at most d.
ProjectiveMap sigma_map(const AffinePolyMap& psi, int d);

/// A sigma-map whose affine part moves exactly one coordinate:
/// psi_k = x_k + p with p free of x_k.  These have the syntactic inverse
/// sigma(psi with p negated); empty when psi is not of that shape.
std::optional<ProjectiveMap> sigma_elementary_inverse(const AffinePolyMap& psi, int d);

/// Shear family: X_i -> (X0^{d-1} + X1^{d-1}) X_i for i != 4 and
/// X4 -> X0^{d-1} X4 + lambda_d with lambda_d homogeneous of degree d in
/// X1, X2, X4..Xn (no X3) whose X2^d coefficient does not vanish.
struct ShearSpec {
    int n;             // ambient dimension, >= 4
    int d;             // >= 2
    Polynomial lambda_d;

    ShearSpec(int n, int d, Polynomial lambda_d);
};

/// lambda_d = X1^{d-1} X4 + X2^d: the single witness satisfying both the
/// X3-absence needed for a1-invariance and the nonzero X2^d hypothesis.
ShearSpec default_shear(int n, int d);

struct ShearMaps {
    ProjectiveMap lambda;
    /// Present when lambda_d = X1^{d-1} X4 + Q with Q free of X4: then the
    /// inverse is the shear with lambda_d = X1^{d-1} X4 - Q.
    std::optional<ProjectiveMap> inverse;
};

ShearMaps shear_lambda(const ShearSpec& spec);

/// Restriction homomorphism: drop component 0, set X0 = 0, dehomogenize on
/// X1 != 0.  Requires the shape test to pass and the restricted component 1
/// to be a single monomial c X1^d, c != 0.
AffinePolyMap xi_restrict(const ProjectiveMap& map);

}  // namespace cremona
