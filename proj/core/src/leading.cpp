#include "cremona/leading.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "cremona/errors.hpp"

namespace cremona {

namespace {

long long checked_mul(long long a, long long b) {
    long long out;
    if (__builtin_mul_overflow(a, b, &out))
        throw error("IntMatrix: 64-bit overflow in multiplication");
    return out;
}

long long checked_add(long long a, long long b) {
    long long out;
    if (__builtin_add_overflow(a, b, &out))
        throw error("IntMatrix: 64-bit overflow in addition");
    return out;
}

}  // namespace

IntMatrix::IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 1) throw precondition_error("IntMatrix: size must be positive");
}

std::size_t IntMatrix::idx(int row, int col) const {
    if (row < 0 || row >= n_ || col < 0 || col >= n_)
        throw precondition_error("IntMatrix: index out of range");
    return static_cast<std::size_t>(row) * n_ + col;
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
    const int n = static_cast<int>(rows.size());
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw precondition_error("IntMatrix::from_rows: ragged rows");
        for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntVec IntMatrix::column(int col) const {
    IntVec v(n_);
    for (int i = 0; i < n_; ++i) v[i] = at(i, col);
    return v;
}

void IntMatrix::set_column(int col, const IntVec& v) {
    if (static_cast<int>(v.size()) != n_)
        throw precondition_error("IntMatrix::set_column: wrong length");
    for (int i = 0; i < n_; ++i) at(i, col) = v[i];
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (n_ != rhs.n_) throw precondition_error("IntMatrix: size mismatch in product");
    IntMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            long long acc = 0;
            for (int k = 0; k < n_; ++k)
                acc = checked_add(acc, checked_mul(at(i, k), rhs.at(k, j)));
            out.at(i, j) = acc;
        }
    return out;
}

IntVec IntMatrix::apply(const IntVec& v) const {
    if (static_cast<int>(v.size()) != n_)
        throw precondition_error("IntMatrix::apply: wrong vector length");
    IntVec out(n_, 0);
    for (int i = 0; i < n_; ++i) {
        long long acc = 0;
        for (int k = 0; k < n_; ++k) acc = checked_add(acc, checked_mul(at(i, k), v[k]));
        out[i] = acc;
    }
    return out;
}

BigInt IntMatrix::determinant() const {
    // Cofactor expansion with exact big integers; n stays small here.
    std::vector<BigInt> a(a_.begin(), a_.end());
    std::vector<int> cols(n_);
    std::iota(cols.begin(), cols.end(), 0);
    struct Expander {
        const std::vector<BigInt>& a;
        int n;
        BigInt run(int row, const std::vector<int>& cols) {
            if (cols.size() == 1) return a[static_cast<std::size_t>(row) * n + cols[0]];
            BigInt acc = 0;
            for (std::size_t k = 0; k < cols.size(); ++k) {
                const BigInt& pivot = a[static_cast<std::size_t>(row) * n + cols[k]];
                if (pivot == 0) continue;
                std::vector<int> rest;
                rest.reserve(cols.size() - 1);
                for (std::size_t t = 0; t < cols.size(); ++t)
                    if (t != k) rest.push_back(cols[t]);
                BigInt contribution = pivot * run(row + 1, rest);
                acc += (k % 2 == 0) ? contribution : BigInt(-contribution);
            }
            return acc;
        }
    } expander{a, n_};
    return expander.run(0, cols);
}

IntMatrix IntMatrix::inverse_unimodular() const {
    const BigInt det = determinant();
    if (det != 1 && det != -1)
        throw precondition_error("inverse_unimodular: determinant is not a unit");

    // Adjugate, then divide by det (a unit, so multiply by it).
    IntMatrix out(n_);
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            BigInt minor = 1;
            if (n_ > 1) {
                // Minor with row j and column i removed (adjugate transposes).
                IntMatrix sub(n_ - 1);
                int rr = 0;
                for (int r = 0; r < n_; ++r) {
                    if (r == j) continue;
                    int cc = 0;
                    for (int c = 0; c < n_; ++c) {
                        if (c == i) continue;
                        sub.at(rr, cc++) = at(r, c);
                    }
                    ++rr;
                }
                minor = sub.determinant();
            }
            BigInt value = ((i + j) % 2 == 0 ? minor : -minor) * det;
            if (value > std::numeric_limits<long long>::max() ||
                value < std::numeric_limits<long long>::min())
                throw error("inverse_unimodular: entry overflow");
            out.at(i, j) = static_cast<long long>(value);
        }
    }
    return out;
}

bool is_sl_prime(const IntMatrix& m) {
    if (m.determinant() != 1) return false;
    for (int j = 0; j < m.size(); ++j) {
        long long sum = 0;
        for (int i = 0; i < m.size(); ++i) sum = checked_add(sum, m.at(i, j));
        if (sum != 1) return false;
    }
    return true;
}

LeadingPair leading_pair(const Polynomial& h) {
    if (h.is_zero()) throw precondition_error("leading_pair: zero polynomial");
    const auto& [e, c] = h.leading_term();  // lex max: maximizes e0, then the residual
    IntVec residual(e.begin() + 1, e.end());
    return LeadingPair{e[0], std::move(residual)};
}

IntVec valuation(const Polynomial& h) { return leading_pair(h).residual; }

IntVec valuation_fraction(const Polynomial& f, const Polynomial& g) {
    IntVec vf = valuation(f);
    const IntVec vg = valuation(g);
    for (std::size_t i = 0; i < vf.size(); ++i) vf[i] -= vg[i];
    return vf;
}

namespace {

// The coefficient of X0^level must be a single monomial in X1..Xn.
std::optional<std::pair<IntVec, Rational>> single_top_monomial(const Polynomial& p, int level) {
    const Polynomial coeff = p.coefficient_of_x0(level);
    if (coeff.term_count() != 1) return std::nullopt;
    const auto& [e, c] = *coeff.terms().begin();
    return std::make_pair(IntVec(e.begin() + 1, e.end()), c);
}

}  // namespace

std::optional<GFormData> g_form(const ProjectiveMap& f_raw) {
    const ProjectiveMap f = f_raw.normalized();
    const int n = f.ambient_n();

    if (f.component(0).is_zero()) return std::nullopt;
    const int d_f = f.component(0).x0_degree();
    if (d_f < 1) return std::nullopt;

    auto top0 = single_top_monomial(f.component(0), d_f);
    if (!top0) return std::nullopt;

    GFormData data;
    data.d_f = d_f;
    data.i_f0 = top0->first;
    data.alphas.push_back(top0->second);
    for (int j = 1; j <= n; ++j) {
        const Polynomial& fj = f.component(j);
        if (fj.is_zero() || fj.x0_degree() != d_f - 1) return std::nullopt;
        auto top = single_top_monomial(fj, d_f - 1);
        if (!top) return std::nullopt;
        data.i_fj.push_back(top->first);
        data.alphas.push_back(top->second);
    }
    return data;
}

IntMatrix rho(const ProjectiveMap& f) {
    auto data = g_form(f);
    if (!data)
        throw precondition_error("rho: map does not have the required leading shape");
    const int n = f.ambient_n();
    IntMatrix m(n);
    for (int j = 1; j <= n; ++j) {
        IntVec col = data->i_fj[j - 1];
        for (int i = 0; i < n; ++i) col[i] -= data->i_f0[i];
        m.set_column(j - 1, col);
    }
    return m;
}

LeadingPair predict_leading(const Polynomial& h, const ProjectiveMap& f) {
    if (h.is_zero()) throw precondition_error("predict_leading: zero polynomial");
    const auto deg = h.homogeneous_degree();
    if (!deg) throw precondition_error("predict_leading: polynomial is not homogeneous");
    if (h.ambient_n() != f.ambient_n())
        throw precondition_error("predict_leading: dimension mismatch");

    auto data = g_form(f);
    if (!data)
        throw precondition_error("predict_leading: map does not have the required leading shape");

    const int d_h = h.x0_degree();
    // Lex-genericity: exactly one support element sits at X0-level d_h, so
    // no other monomial of h can compete for the top after substitution.
    if (h.coefficient_of_x0(d_h).term_count() != 1)
        throw hypothesis_error(
            "predict_leading: support has several elements at the top X0-level");

    const IntVec i_h = leading_pair(h).residual;
    const int n = f.ambient_n();
    IntMatrix m(n);
    for (int j = 1; j <= n; ++j) {
        IntVec col = data->i_fj[j - 1];
        for (int i = 0; i < n; ++i) col[i] -= data->i_f0[i];
        m.set_column(j - 1, col);
    }

    IntVec residual = m.apply(i_h);
    for (int i = 0; i < n; ++i)
        residual[i] = checked_add(residual[i], checked_mul(*deg, data->i_f0[i]));
    return LeadingPair{*deg * (data->d_f - 1) + d_h, std::move(residual)};
}

bool g_membership(const ProjectiveMap& f, const ProjectiveMap& inverse_witness) {
    return g_form(f).has_value() && g_form(inverse_witness).has_value() &&
           verify_inverse_pair(f, inverse_witness);
}

}  // namespace cremona
