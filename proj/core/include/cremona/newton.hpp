#pragma once

#include <span>
#include <vector>

#include "cremona/polynomial.hpp"
#include "cremona/projective.hpp"

namespace cremona {

using LatticePoint = std::vector<long long>;

/// Convex lattice polytope stored canonically: the vertex list holds
/// exactly the extreme points of the hull of the input, sorted.
class LatticePolytope {
public:
    static LatticePolytope hull(int dim, std::span<const LatticePoint> points);

    int dim() const { return dim_; }
    const std::vector<LatticePoint>& vertices() const { return vertices_; }
    bool operator==(const LatticePolytope&) const = default;

private:
    LatticePolytope(int dim, std::vector<LatticePoint> vertices)
        : dim_(dim), vertices_(std::move(vertices)) {}
    int dim_;
    std::vector<LatticePoint> vertices_;
};

/// Hull of the residual exponent vectors (X1..Xn) of the support in the
/// chart X0 = 1 (dehomogenized support).  Requires h nonzero.
LatticePolytope newton_polytope(const Polynomial& h);

/// Hull of pairwise vertex sums; the classical product rule companion.
LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b);

/// Euclidean volume times dim! (the standard simplex gets volume 1).
/// Dimension-deficient polytopes report zero.
Rational normalized_volume(const LatticePolytope& p);

bool is_full_dimensional(const LatticePolytope& p);

/// Vertex set equals {0, e1, ..., en}.
bool is_standard_simplex(const LatticePolytope& p);

/// Graded linear system data: rational functions numerators[i]/denominator.
struct SystemGenerators {
    std::vector<Polynomial> numerators;
    Polynomial denominator;

    SystemGenerators(std::vector<Polynomial> nums, Polynomial den);
};

/// The system {f_0/f_den, ..., f_n/f_den} of a map, default denominator
/// component 0 (the valuation-side reading).
SystemGenerators standard_system(const ProjectiveMap& f, int denominator_index = 0);

/// Finite-level Newton body: valuations of all monomials in the generators
/// of total degree 1..level, each divided by its degree, hulled together
/// with the origin.  Computed on the level!-refined lattice; scale reports
/// the residual refinement (1 when every hull vertex lies on the unit
/// lattice, which is the stabilized situation).
struct NewtonBody {
    LatticePolytope hull;
    long long scale;

    bool operator==(const NewtonBody&) const = default;
};

NewtonBody map_newton_body(const SystemGenerators& system, int level);

/// Volume of the body at unit scale: normalized_volume(hull) / scale^dim.
Rational normalized_volume(const NewtonBody& body);

/// The body is the standard simplex on the unit lattice.
bool is_standard_simplex(const NewtonBody& body);

}  // namespace cremona
