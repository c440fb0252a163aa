#include "cremona/newton.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>

#include "cremona/errors.hpp"
#include "cremona/leading.hpp"

namespace cremona {

namespace {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;  // row major

// ---------------------------------------------------------------------------
// Small exact linear algebra helpers.

int rank_of(QMat m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

// Nullspace of a (rows x cols) matrix when it is one-dimensional; empty
// otherwise.  Used to pass a hyperplane through affinely independent points.
std::optional<QVec> one_dimensional_nullspace(QMat m, std::size_t cols) {
    const std::size_t rows = m.size();
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        const Rational lead = m[r][c];
        for (std::size_t j = 0; j < cols; ++j) m[r][j] /= lead;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    if (cols - r != 1) return std::nullopt;

    // The single free column determines the kernel vector.
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    QVec v(cols, Rational(0));
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
        v[pivot_col[i]] = -m[i][free_col];
    return v;
}

// Solve B x = t for x where B is given by columns and the system is known
// to be consistent; returns the coordinates.
QVec solve_consistent(const std::vector<QVec>& basis_cols, const QVec& target) {
    const std::size_t rows = target.size();
    const std::size_t cols = basis_cols.size();
    QMat aug(rows, QVec(cols + 1, Rational(0)));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = basis_cols[j][i];
        aug[i][cols] = target[i];
    }
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && aug[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(aug[r], aug[pivot]);
        const Rational lead = aug[r][c];
        for (std::size_t j = 0; j <= cols; ++j) aug[r][j] /= lead;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || aug[i][c] == 0) continue;
            const Rational f = aug[i][c];
            for (std::size_t j = 0; j <= cols; ++j) aug[i][j] -= f * aug[r][j];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    QVec x(cols, Rational(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = aug[i][cols];
    return x;
}

// ---------------------------------------------------------------------------
// Phase-1 simplex (Bland's rule, exact rationals): is there x >= 0 with
// A x = b?  Sizes stay tiny here.

bool lp_feasible(QMat a, QVec b) {
    const std::size_t rows = a.size();
    if (rows == 0) return true;
    const std::size_t cols = a[0].size();
    for (std::size_t i = 0; i < rows; ++i) {
        if (b[i] < 0) {
            b[i] = -b[i];
            for (auto& v : a[i]) v = -v;
        }
    }

    // Tableau over real + artificial columns.
    const std::size_t total = cols + rows;
    QMat t(rows, QVec(total + 1, Rational(0)));
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) t[i][j] = a[i][j];
        t[i][cols + i] = 1;
        t[i][total] = b[i];
        basis[i] = cols + i;
    }
    // Reduced costs for minimizing the sum of artificials.
    QVec obj(total + 1, Rational(0));
    for (std::size_t j = 0; j < total; ++j) {
        Rational s(0);
        for (std::size_t i = 0; i < rows; ++i) s += t[i][j];
        obj[j] = (j >= cols ? Rational(1) : Rational(0)) - s;
    }
    while (true) {
        std::size_t enter = total;
        for (std::size_t j = 0; j < total; ++j) {
            if (obj[j] < 0) {
                enter = j;
                break;  // Bland: smallest index
            }
        }
        if (enter == total) break;

        std::size_t leave = rows;
        for (std::size_t i = 0; i < rows; ++i) {
            if (t[i][enter] <= 0) continue;
            if (leave == rows) {
                leave = i;
                continue;
            }
            const Rational lhs = t[i][total] * t[leave][enter];
            const Rational rhs = t[leave][total] * t[i][enter];
            if (lhs < rhs || (lhs == rhs && basis[i] < basis[leave])) leave = i;
        }
        if (leave == rows) break;  // unbounded cannot happen for phase 1

        const Rational pivot = t[leave][enter];
        for (auto& v : t[leave]) v /= pivot;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rational f = t[i][enter];
            for (std::size_t j = 0; j <= total; ++j) t[i][j] -= f * t[leave][j];
        }
        const Rational fo = obj[enter];
        for (std::size_t j = 0; j <= total; ++j) obj[j] -= fo * t[leave][j];
        basis[leave] = enter;
    }
    Rational value(0);
    for (std::size_t i = 0; i < rows; ++i)
        if (basis[i] >= cols) value += t[i][total];
    return value == 0;
}

// Is p inside conv(others)?
bool in_convex_hull(const QVec& p, const std::vector<QVec>& others) {
    if (others.empty()) return false;
    const std::size_t dim = p.size();
    QMat a(dim + 1, QVec(others.size(), Rational(0)));
    QVec b(dim + 1, Rational(0));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < others.size(); ++j) a[i][j] = others[j][i];
        b[i] = p[i];
    }
    for (std::size_t j = 0; j < others.size(); ++j) a[dim][j] = 1;
    b[dim] = 1;
    return lp_feasible(std::move(a), std::move(b));
}

std::vector<std::size_t> extreme_point_indices(const std::vector<QVec>& points) {
    std::vector<std::size_t> extreme;
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::vector<QVec> others;
        others.reserve(points.size() - 1);
        for (std::size_t j = 0; j < points.size(); ++j)
            if (j != i) others.push_back(points[j]);
        if (!in_convex_hull(points[i], others)) extreme.push_back(i);
    }
    return extreme;
}

// ---------------------------------------------------------------------------
// Facets and the pulling triangulation.

// Canonical primitive integer form of a hyperplane (a, a0), a . x + a0 = 0.
std::vector<BigInt> canonical_hyperplane(const QVec& h) {
    BigInt lcm = 1;
    for (const auto& q : h) lcm = boost::multiprecision::lcm(lcm, denominator(q));
    std::vector<BigInt> out;
    out.reserve(h.size());
    BigInt content = 0;
    for (const auto& q : h) {
        BigInt v = numerator(q) * (lcm / denominator(q));
        content = boost::multiprecision::gcd(content, boost::multiprecision::abs(v));
        out.push_back(std::move(v));
    }
    if (content != 0)
        for (auto& v : out) v /= content;
    for (const auto& v : out) {
        if (v == 0) continue;
        if (v < 0)
            for (auto& w : out) w = -w;
        break;
    }
    return out;
}

// Supporting hyperplanes of a full-dimensional point set in Q^dim: every
// dim-subset spanning a unique hyperplane with all points on one side.
std::vector<std::vector<std::size_t>> facet_index_sets(const std::vector<QVec>& points,
                                                       std::size_t dim) {
    std::set<std::vector<BigInt>> seen;
    std::vector<std::vector<std::size_t>> facets;

    const std::size_t m = points.size();
    std::vector<std::size_t> idx(dim);
    // Enumerate dim-subsets lexicographically.
    for (std::size_t i = 0; i < dim; ++i) idx[i] = i;
    if (m < dim) return facets;
    while (true) {
        QMat system;
        system.reserve(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            QVec row = points[idx[i]];
            row.push_back(Rational(1));
            system.push_back(std::move(row));
        }
        if (auto normal = one_dimensional_nullspace(std::move(system), dim + 1)) {
            auto canon = canonical_hyperplane(*normal);
            if (!seen.count(canon)) {
                int sign = 0;
                bool facet = true;
                std::vector<std::size_t> on;
                for (std::size_t j = 0; j < m && facet; ++j) {
                    Rational s(0);
                    for (std::size_t c = 0; c < dim; ++c) s += (*normal)[c] * points[j][c];
                    s += (*normal)[dim];
                    if (s == 0) {
                        on.push_back(j);
                    } else {
                        const int this_sign = s > 0 ? 1 : -1;
                        if (sign == 0)
                            sign = this_sign;
                        else if (sign != this_sign)
                            facet = false;
                    }
                }
                if (facet && sign != 0) {
                    seen.insert(std::move(canon));
                    facets.push_back(std::move(on));
                } else if (!facet) {
                    seen.insert(std::move(canon));
                }
            }
        }
        // next subset
        std::size_t k = dim;
        while (k > 0) {
            --k;
            if (idx[k] + (dim - k) < m) {
                ++idx[k];
                for (std::size_t t = k + 1; t < dim; ++t) idx[t] = idx[t - 1] + 1;
                break;
            }
            if (k == 0) return facets;
        }
    }
}

// Triangulates the hull of full-dimensional `points` in Q^dim by pulling
// from the first (lex-min) point; returns simplices as index sets.
std::vector<std::vector<std::size_t>> pulling_triangulation(const std::vector<QVec>& points,
                                                            std::size_t dim) {
    if (dim == 0 || points.size() == dim + 1) {
        std::vector<std::size_t> all(points.size());
        std::iota(all.begin(), all.end(), 0);
        return {all};
    }
    std::size_t apex = 0;
    for (std::size_t i = 1; i < points.size(); ++i)
        if (points[i] < points[apex]) apex = i;

    std::vector<std::vector<std::size_t>> simplices;
    for (const auto& facet : facet_index_sets(points, dim)) {
        if (std::find(facet.begin(), facet.end(), apex) != facet.end()) continue;

        // Coordinates of the facet inside its hyperplane.
        const QVec& origin = points[facet[0]];
        std::vector<QVec> dirs;
        for (std::size_t i = 1; i < facet.size(); ++i) {
            QVec d(dim);
            for (std::size_t c = 0; c < dim; ++c) d[c] = points[facet[i]][c] - origin[c];
            QMat probe;
            for (const auto& existing : dirs) probe.push_back(existing);
            probe.push_back(d);
            if (rank_of(probe) == static_cast<int>(probe.size())) dirs.push_back(std::move(d));
            if (dirs.size() == dim - 1) break;
        }
        std::vector<QVec> local;
        local.reserve(facet.size());
        for (std::size_t fi : facet) {
            QVec d(dim);
            for (std::size_t c = 0; c < dim; ++c) d[c] = points[fi][c] - origin[c];
            local.push_back(solve_consistent(dirs, d));
        }
        for (const auto& sub : pulling_triangulation(local, dim - 1)) {
            std::vector<std::size_t> simplex;
            simplex.reserve(dim + 1);
            simplex.push_back(apex);
            for (std::size_t s : sub) simplex.push_back(facet[s]);
            simplices.push_back(std::move(simplex));
        }
    }
    return simplices;
}

QVec to_qvec(const LatticePoint& p) {
    QVec out;
    out.reserve(p.size());
    for (long long v : p) out.push_back(Rational(v));
    return out;
}

}  // namespace

LatticePolytope LatticePolytope::hull(int dim, std::span<const LatticePoint> points) {
    if (dim < 1) throw precondition_error("LatticePolytope: dimension must be positive");
    if (points.empty()) throw precondition_error("LatticePolytope: empty point set");
    std::vector<LatticePoint> unique;
    for (const auto& p : points) {
        if (static_cast<int>(p.size()) != dim)
            throw precondition_error("LatticePolytope: point has wrong dimension");
        unique.push_back(p);
    }
    std::sort(unique.begin(), unique.end());
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

    std::vector<QVec> q;
    q.reserve(unique.size());
    for (const auto& p : unique) q.push_back(to_qvec(p));
    std::vector<LatticePoint> vertices;
    for (std::size_t i : extreme_point_indices(q)) vertices.push_back(unique[i]);
    std::sort(vertices.begin(), vertices.end());
    return LatticePolytope(dim, std::move(vertices));
}

LatticePolytope newton_polytope(const Polynomial& h) {
    if (h.is_zero()) throw precondition_error("newton_polytope: zero polynomial");
    const int n = h.ambient_n();
    if (n < 1) throw precondition_error("newton_polytope: need at least one residual variable");
    std::vector<LatticePoint> points;
    points.reserve(h.term_count());
    for (const auto& [e, c] : h.terms())
        points.emplace_back(e.begin() + 1, e.end());
    return LatticePolytope::hull(n, points);
}

LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b) {
    if (a.dim() != b.dim()) throw precondition_error("minkowski_sum: dimension mismatch");
    std::vector<LatticePoint> sums;
    sums.reserve(a.vertices().size() * b.vertices().size());
    for (const auto& u : a.vertices())
        for (const auto& v : b.vertices()) {
            LatticePoint s(u.size());
            for (std::size_t i = 0; i < s.size(); ++i) s[i] = u[i] + v[i];
            sums.push_back(std::move(s));
        }
    return LatticePolytope::hull(a.dim(), sums);
}

bool is_full_dimensional(const LatticePolytope& p) {
    const auto& verts = p.vertices();
    if (static_cast<int>(verts.size()) < p.dim() + 1) return false;
    QMat dirs;
    for (std::size_t i = 1; i < verts.size(); ++i) {
        QVec d(p.dim());
        for (int c = 0; c < p.dim(); ++c) d[c] = Rational(verts[i][c] - verts[0][c]);
        dirs.push_back(std::move(d));
    }
    return rank_of(dirs) == p.dim();
}

Rational normalized_volume(const LatticePolytope& p) {
    if (!is_full_dimensional(p)) return Rational(0);
    const std::size_t dim = p.dim();
    std::vector<QVec> points;
    points.reserve(p.vertices().size());
    for (const auto& v : p.vertices()) points.push_back(to_qvec(v));

    Rational total(0);
    for (const auto& simplex : pulling_triangulation(points, dim)) {
        // |det(v_i - v_0)| summed over simplices equals vol * dim!.
        QMat m(dim, QVec(dim, Rational(0)));
        for (std::size_t i = 1; i <= dim; ++i)
            for (std::size_t c = 0; c < dim; ++c)
                m[i - 1][c] = points[simplex[i]][c] - points[simplex[0]][c];
        // Fraction-free-ish Gaussian determinant.
        Rational det(1);
        QMat a = m;
        for (std::size_t col = 0, row = 0; col < dim && row < dim; ++col, ++row) {
            std::size_t pivot = row;
            while (pivot < dim && a[pivot][col] == 0) ++pivot;
            if (pivot == dim) {
                det = 0;
                break;
            }
            if (pivot != row) {
                std::swap(a[pivot], a[row]);
                det = -det;
            }
            det *= a[row][col];
            for (std::size_t i = row + 1; i < dim; ++i) {
                if (a[i][col] == 0) continue;
                const Rational f = a[i][col] / a[row][col];
                for (std::size_t j = col; j < dim; ++j) a[i][j] -= f * a[row][j];
            }
        }
        total += det < 0 ? -det : det;
    }
    return total;
}

bool is_standard_simplex(const LatticePolytope& p) {
    const int n = p.dim();
    if (static_cast<int>(p.vertices().size()) != n + 1) return false;
    std::vector<LatticePoint> expect;
    expect.push_back(LatticePoint(n, 0));
    for (int i = 0; i < n; ++i) {
        LatticePoint e(n, 0);
        e[i] = 1;
        expect.push_back(std::move(e));
    }
    std::sort(expect.begin(), expect.end());
    return p.vertices() == expect;
}

SystemGenerators::SystemGenerators(std::vector<Polynomial> nums, Polynomial den)
    : numerators(std::move(nums)), denominator(std::move(den)) {
    if (numerators.empty()) throw precondition_error("SystemGenerators: no numerators");
    if (denominator.is_zero()) throw precondition_error("SystemGenerators: zero denominator");
    for (const auto& p : numerators) {
        if (p.is_zero()) throw precondition_error("SystemGenerators: zero numerator");
        if (p.ambient_n() != denominator.ambient_n())
            throw precondition_error("SystemGenerators: ambient dimension mismatch");
    }
}

SystemGenerators standard_system(const ProjectiveMap& f, int denominator_index) {
    if (denominator_index < 0 || denominator_index > f.ambient_n())
        throw precondition_error("standard_system: denominator index out of range");
    return SystemGenerators(f.components(), f.component(denominator_index));
}

NewtonBody map_newton_body(const SystemGenerators& system, int level) {
    if (level < 1) throw precondition_error("map_newton_body: level must be >= 1");
    const int n = system.denominator.ambient_n();

    long long scale = 1;
    for (int k = 2; k <= level; ++k) scale *= k;  // level!

    std::vector<IntVec> vals;
    vals.reserve(system.numerators.size());
    const IntVec vden = valuation(system.denominator);
    for (const auto& g : system.numerators) {
        IntVec v = valuation(g);
        for (int i = 0; i < n; ++i) v[i] -= vden[i];
        vals.push_back(std::move(v));
    }

    std::vector<LatticePoint> points;
    points.push_back(LatticePoint(n, 0));

    // Multi-indices m over the generators with 1 <= |m| <= level; the
    // valuation is additive on products, so no expansion is needed.
    std::vector<int> multi(vals.size(), 0);
    const auto emit = [&](int total) {
        IntVec sum(n, 0);
        for (std::size_t g = 0; g < vals.size(); ++g)
            for (int i = 0; i < n; ++i) sum[i] += multi[g] * vals[g][i];
        LatticePoint p(n);
        for (int i = 0; i < n; ++i) p[i] = sum[i] * (scale / total);
        points.push_back(std::move(p));
    };
    const std::function<void(std::size_t, int)> enumerate = [&](std::size_t g, int used) {
        if (g == vals.size()) {
            if (used >= 1) emit(used);
            return;
        }
        for (int take = 0; used + take <= level; ++take) {
            multi[g] = take;
            enumerate(g + 1, used + take);
        }
        multi[g] = 0;
    };
    enumerate(0, 0);

    LatticePolytope hull = LatticePolytope::hull(n, points);

    // Reduce to the coarsest lattice containing every vertex.
    long long g = scale;
    for (const auto& v : hull.vertices())
        for (long long c : v) g = std::gcd(g, std::llabs(c));
    if (g > 1) {
        std::vector<LatticePoint> reduced;
        reduced.reserve(hull.vertices().size());
        for (const auto& v : hull.vertices()) {
            LatticePoint r(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
            reduced.push_back(std::move(r));
        }
        hull = LatticePolytope::hull(n, reduced);
        scale /= g;
    }
    return NewtonBody{std::move(hull), scale};
}

Rational normalized_volume(const NewtonBody& body) {
    Rational vol = normalized_volume(body.hull);
    if (vol == 0) return vol;
    return vol / rational_pow(Rational(body.scale), body.hull.dim());
}

bool is_standard_simplex(const NewtonBody& body) {
    return body.scale == 1 && is_standard_simplex(body.hull);
}

}  // namespace cremona
