#pragma once

#include <optional>
#include <vector>

#include "cremona/projective.hpp"

namespace cremona {

using IntVec = std::vector<long long>;

/// Square integer matrix with exact (overflow-checked) arithmetic.
/// Carrier of the lattice data attached to maps and of the unimodular
/// matrices defining monomial maps.
class IntMatrix {
public:
    explicit IntMatrix(int n);  // zero matrix
    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<IntVec>& rows);

    int size() const { return n_; }
    long long at(int row, int col) const { return a_[idx(row, col)]; }
    long long& at(int row, int col) { return a_[idx(row, col)]; }

    IntVec column(int col) const;
    void set_column(int col, const IntVec& v);

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntVec apply(const IntVec& v) const;  // matrix * column vector
    bool operator==(const IntMatrix& rhs) const = default;

    BigInt determinant() const;

    /// Exact integer inverse; requires det = +-1.
    IntMatrix inverse_unimodular() const;

private:
    std::size_t idx(int row, int col) const;
    int n_;
    std::vector<long long> a_;
};

/// det = 1 and every column sums to 1 (the matrices whose monomial maps
/// extend to the shape the rest of the library works with).
bool is_sl_prime(const IntMatrix& m);

/// Top X0-degree together with the lex-maximal residual exponent vector
/// at that X0 level; equivalently the lex leading monomial split as
/// (e0, (e1..en)).
struct LeadingPair {
    int x0_deg;
    IntVec residual;

    bool operator==(const LeadingPair&) const = default;
};

LeadingPair leading_pair(const Polynomial& h);

/// v(h) = residual of the leading pair; additive on products.
IntVec valuation(const Polynomial& h);

/// v(f/g) = v(f) - v(g); entries may be negative.
IntVec valuation_fraction(const Polynomial& f, const Polynomial& g);

/// Leading data extracted from a tuple that passes the shape test: top
/// X0-coefficient of component 0 (at level d) and of every other component
/// (at level d-1) is a single monomial with nonzero coefficient.
struct GFormData {
    int d_f;
    IntVec i_f0;
    std::vector<IntVec> i_fj;       // j = 1..n
    std::vector<Rational> alphas;   // alpha_0, alpha_{1,0}, ..., alpha_{n,0}
};

/// Shape test on the coprime representative; empty when the tuple does not
/// have the required form (including when d_f would be 0).
std::optional<GFormData> g_form(const ProjectiveMap& f);

/// The n x n matrix whose column j is I_{f_j} - I_{f_0}.  Requires g_form.
IntMatrix rho(const ProjectiveMap& f);

/// Leading pair of h(f) predicted from the leading data of h and f alone:
/// (deg(h)(d_f - 1) + d_h, M_f I_h + deg(h) I_{f_0}).  Requires h nonzero
/// homogeneous with a unique support element at X0-level d_h (throws
/// hypothesis_error otherwise) and g_form(f) present (precondition_error).
LeadingPair predict_leading(const Polynomial& h, const ProjectiveMap& f);

/// Membership wrapper: f and the supplied inverse witness both pass the
/// shape test and verify as an inverse pair.
bool g_membership(const ProjectiveMap& f, const ProjectiveMap& inverse_witness);

}  // namespace cremona
