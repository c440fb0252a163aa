#include "cremona/projective.hpp"

#include <algorithm>

#include "cremona/errors.hpp"

namespace cremona {

ProjectivePoint::ProjectivePoint(std::vector<Rational> c) : coords(std::move(c)) {
    if (coords.empty()) throw precondition_error("ProjectivePoint: empty coordinate tuple");
    if (std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return q == 0; }))
        throw precondition_error("ProjectivePoint: all coordinates are zero");
}

bool same_projective_point(const ProjectivePoint& a, const ProjectivePoint& b) {
    if (a.coords.size() != b.coords.size()) return false;
    const std::size_t n = a.coords.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (a.coords[i] * b.coords[j] != a.coords[j] * b.coords[i]) return false;
    return true;
}

ProjectiveMap::ProjectiveMap(std::vector<Polynomial> components)
    : components_(std::move(components)) {
    if (components_.empty()) throw precondition_error("ProjectiveMap: empty component tuple");
    ambient_n_ = static_cast<int>(components_.size()) - 1;
    std::optional<int> degree;
    for (const auto& p : components_) {
        if (p.ambient_n() != ambient_n_)
            throw precondition_error("ProjectiveMap: component ambient dimension mismatch");
        if (p.is_zero()) continue;
        auto d = p.homogeneous_degree();
        if (!d) throw precondition_error("ProjectiveMap: component is not homogeneous");
        if (degree && *degree != *d)
            throw precondition_error("ProjectiveMap: components have different degrees");
        degree = *d;
    }
    if (!degree) throw precondition_error("ProjectiveMap: all components are zero");
    degree_ = *degree;
}

ProjectiveMap ProjectiveMap::normalized() const {
    return ProjectiveMap(primitive_tuple(components_));
}

ProjectiveMap identity_map(int ambient_n) {
    std::vector<Polynomial> comps;
    comps.reserve(ambient_n + 1);
    for (int i = 0; i <= ambient_n; ++i) comps.push_back(Polynomial::variable(ambient_n, i));
    return ProjectiveMap(std::move(comps));
}

ProjectiveMap compose(const ProjectiveMap& outer, const ProjectiveMap& inner, bool normalize) {
    if (outer.ambient_n() != inner.ambient_n())
        throw precondition_error("compose: ambient dimension mismatch");
    std::vector<Polynomial> comps;
    comps.reserve(outer.components().size());
    bool all_zero = true;
    for (const auto& g : outer.components()) {
        comps.push_back(g.substituted(inner.components()));
        all_zero = all_zero && comps.back().is_zero();
    }
    if (all_zero)
        throw precondition_error(
            "compose: composition vanishes identically (image lies in the base locus)");
    if (normalize) comps = primitive_tuple(comps);
    return ProjectiveMap(std::move(comps));
}

bool equals_projectively(const ProjectiveMap& f, const ProjectiveMap& g) {
    if (f.ambient_n() != g.ambient_n())
        throw precondition_error("equals_projectively: ambient dimension mismatch");
    const int n = f.ambient_n();
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (f.component(i) * g.component(j) != f.component(j) * g.component(i))
                return false;
    return true;
}

bool verify_inverse_pair(const ProjectiveMap& f, const ProjectiveMap& g) {
    if (f.ambient_n() != g.ambient_n())
        throw precondition_error("verify_inverse_pair: ambient dimension mismatch");
    const ProjectiveMap id = identity_map(f.ambient_n());
    return equals_projectively(compose(f, g, false), id) &&
           equals_projectively(compose(g, f, false), id);
}

std::vector<Polynomial> restrict_to_hyperplane(const ProjectiveMap& f, int index) {
    if (index < 0 || index > f.ambient_n())
        throw precondition_error("restrict_to_hyperplane: variable index out of range");
    std::vector<Polynomial> out;
    out.reserve(f.components().size());
    for (const auto& p : f.components()) out.push_back(p.with_variable_zero(index));
    return out;
}

namespace {

// Deterministic grid over positive integer coordinates, coordinate `index`
// pinned to zero: all tuples with entries in {1..bound} for growing bound.
class HyperplaneGrid {
public:
    HyperplaneGrid(int n, int index) : n_(n), index_(index), bound_(1), digits_(n, 0) {}

    std::vector<Rational> next() {
        while (true) {
            if (!exhausted_) {
                std::vector<Rational> point(n_ + 1, Rational(0));
                bool fresh = false;  // skip tuples already seen at smaller bounds
                int d = 0;
                for (int i = 0; i <= n_; ++i) {
                    if (i == index_) continue;
                    point[i] = Rational(digits_[d] + 1);
                    fresh = fresh || digits_[d] + 1 == bound_;
                    ++d;
                }
                advance();
                if (fresh || bound_ == 1) return point;
            } else {
                ++bound_;
                std::fill(digits_.begin(), digits_.end(), 0);
                exhausted_ = false;
            }
        }
    }

private:
    void advance() {
        for (int d = 0; d < n_; ++d) {
            if (++digits_[d] < bound_) return;
            digits_[d] = 0;
        }
        exhausted_ = true;
    }

    int n_;
    int index_;
    int bound_;
    std::vector<int> digits_;
    bool exhausted_ = false;
};

}  // namespace

std::optional<ProjectivePoint> contracts_to_point(const ProjectiveMap& f, int index) {
    const std::vector<Polynomial> r = restrict_to_hyperplane(f, index);
    if (std::all_of(r.begin(), r.end(), [](const Polynomial& p) { return p.is_zero(); }))
        throw precondition_error(
            "contracts_to_point: restriction is identically zero; normalize the map first");

    // Find a sample point on the hyperplane where the restriction is defined.
    HyperplaneGrid grid(f.ambient_n(), index);
    std::optional<ProjectivePoint> image;
    for (int attempt = 0; attempt < 1000 && !image; ++attempt) {
        const std::vector<Rational> q = grid.next();
        std::vector<Rational> value;
        value.reserve(r.size());
        for (const auto& p : r) value.push_back(p.evaluate(q));
        if (std::any_of(value.begin(), value.end(), [](const Rational& v) { return v != 0; }))
            image = ProjectivePoint(std::move(value));
    }
    if (!image)
        throw precondition_error(
            "contracts_to_point: no sample point off the base locus within 1000 attempts");

    // Symbolic identity: the restricted tuple is proportional to the point.
    const auto& p = image->coords;
    const std::size_t m = r.size();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            if (r[a] * p[b] != r[b] * p[a]) return std::nullopt;
    return image;
}

ProjectivePoint evaluate(const ProjectiveMap& f, const ProjectivePoint& p) {
    if (f.ambient_n() != p.ambient_n())
        throw precondition_error("evaluate: point/map dimension mismatch");
    std::vector<Rational> value;
    value.reserve(f.components().size());
    for (const auto& c : f.components()) value.push_back(c.evaluate(p.coords));
    if (std::all_of(value.begin(), value.end(), [](const Rational& v) { return v == 0; }))
        throw precondition_error("evaluate: point lies in the base locus of this representative");
    return ProjectivePoint(std::move(value));
}

bool fixes_point(const ProjectiveMap& f, const ProjectivePoint& p) {
    return same_projective_point(evaluate(f, p), p);
}

AffinePolyMap::AffinePolyMap(int dim_, std::vector<Polynomial> components_)
    : dim(dim_), components(std::move(components_)) {
    if (dim < 1) throw precondition_error("AffinePolyMap: dimension must be positive");
    if (static_cast<int>(components.size()) != dim)
        throw precondition_error("AffinePolyMap: need exactly dim components");
    for (const auto& p : components) {
        if (p.ambient_n() != dim)
            throw precondition_error("AffinePolyMap: component ambient dimension mismatch");
        for (const auto& [e, c] : p.terms())
            if (e[0] != 0)
                throw precondition_error("AffinePolyMap: components must not involve X0");
    }
}

AffinePolyMap affine_identity(int dim) {
    std::vector<Polynomial> comps;
    comps.reserve(dim);
    for (int i = 1; i <= dim; ++i) comps.push_back(Polynomial::variable(dim, i));
    return AffinePolyMap(dim, std::move(comps));
}

AffinePolyMap affine_compose(const AffinePolyMap& outer, const AffinePolyMap& inner) {
    if (outer.dim != inner.dim)
        throw precondition_error("affine_compose: dimension mismatch");
    std::vector<Polynomial> images;
    images.reserve(outer.dim + 1);
    images.push_back(Polynomial::constant(outer.dim, 1));  // X0 never occurs
    for (const auto& p : inner.components) images.push_back(p);
    std::vector<Polynomial> comps;
    comps.reserve(outer.dim);
    for (const auto& p : outer.components) comps.push_back(p.substituted(images));
    return AffinePolyMap(outer.dim, std::move(comps));
}

bool affine_equal(const AffinePolyMap& a, const AffinePolyMap& b) {
    return a.dim == b.dim && a.components == b.components;
}

ProjectiveMap embed_affine(const AffinePolyMap& psi) {
    const int n = psi.dim;
    int max_degree = 1;
    bool any_term = false;
    for (const auto& p : psi.components) {
        if (p.is_zero()) continue;
        any_term = true;
        max_degree = std::max(max_degree, p.total_degree());
    }
    if (!any_term) throw precondition_error("embed_affine: zero map");

    std::vector<Polynomial> comps;
    comps.reserve(n + 1);
    ExponentVec e0(n + 1, 0);
    e0[0] = max_degree;
    comps.push_back(Polynomial::monomial(n, e0, Rational(1)));
    for (const auto& p : psi.components) {
        Polynomial h(n);
        for (const auto& [e, c] : p.terms()) {
            ExponentVec r = e;
            int total = 0;
            for (int i = 1; i <= n; ++i) total += e[i];
            r[0] = max_degree - total;
            h.add_term(r, c);
        }
        comps.push_back(std::move(h));
    }
    return ProjectiveMap(primitive_tuple(comps));
}

Polynomial jacobian_det(const AffinePolyMap& psi) {
    const int m = psi.dim;
    std::vector<std::vector<Polynomial>> jac(m, std::vector<Polynomial>());
    for (int i = 0; i < m; ++i)
        for (int j = 1; j <= m; ++j) jac[i].push_back(psi.components[i].derivative(j));

    // Cofactor expansion; m stays small at desk scale.
    std::vector<int> cols(m);
    for (int j = 0; j < m; ++j) cols[j] = j;
    struct Expander {
        const std::vector<std::vector<Polynomial>>& a;
        int dim;
        Polynomial run(int row, std::vector<int>& cols) {
            if (cols.size() == 1) return a[row][cols[0]];
            Polynomial acc(dim);
            for (std::size_t k = 0; k < cols.size(); ++k) {
                int col = cols[k];
                std::vector<int> rest;
                rest.reserve(cols.size() - 1);
                for (std::size_t t = 0; t < cols.size(); ++t)
                    if (t != k) rest.push_back(cols[t]);
                Polynomial minor = run(row + 1, rest);
                Polynomial term = a[row][col] * minor;
                acc += (k % 2 == 0) ? term : -term;
            }
            return acc;
        }
    } expander{jac, m};
    return expander.run(0, cols);
}

}  // namespace cremona
