#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cremona/rational.hpp"

namespace cremona {

/// Exponent vector (e0, ..., en) of a monomial X0^e0 ... Xn^en.
/// Length is ambient_n + 1 and entries are non-negative.
using ExponentVec = std::vector<int>;

/// Strict ordering that ranks monomials by descending lexicographic order
/// with X0 > X1 > ... > Xn.  Used as the canonical term order everywhere;
/// the first term of a polynomial's map is its lex leading term.
struct LexDescending {
    bool operator()(const ExponentVec& a, const ExponentVec& b) const {
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

/// Sparse multivariate polynomial over the rationals in X0..Xn.
/// Invariants: no stored zero coefficients; one entry per exponent vector;
/// all exponent vectors have length ambient_n + 1.  Values are immutable
/// in spirit -- every operation returns a fresh polynomial.
class Polynomial {
public:
    using TermMap = std::map<ExponentVec, Rational, LexDescending>;

    explicit Polynomial(int ambient_n);

    static Polynomial zero(int ambient_n);
    static Polynomial constant(int ambient_n, Rational value);
    static Polynomial variable(int ambient_n, int index);
    static Polynomial monomial(int ambient_n, ExponentVec exps, Rational coeff);

    int ambient_n() const { return ambient_n_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// Lex leading term (canonical order).  Throws on the zero polynomial.
    const std::pair<const ExponentVec, Rational>& leading_term() const;

    bool operator==(const Polynomial& rhs) const {
        return ambient_n_ == rhs.ambient_n_ && terms_ == rhs.terms_;
    }
    bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    Polynomial operator*(const Rational& scalar) const;

    /// Total degree of the polynomial (max over terms); requires nonzero.
    int total_degree() const;

    /// Shared total degree when every term has the same one, otherwise empty.
    /// The zero polynomial reports degree 0 by convention here; callers that
    /// care distinguish via is_zero().
    std::optional<int> homogeneous_degree() const;

    /// Degree in X0 (max e0 over the support); requires nonzero.
    int x0_degree() const;

    /// The coefficient of X0^k: a polynomial in X1..Xn (same ambient).
    Polynomial coefficient_of_x0(int k) const;

    /// Partial derivative with respect to X_index.
    Polynomial derivative(int index) const;

    /// Substitute X_index = 0.
    Polynomial with_variable_zero(int index) const;

    /// Full substitution X_i <- images[i]; images.size() must be
    /// ambient_n + 1 and all images must share one ambient dimension.
    Polynomial substituted(std::span<const Polynomial> images) const;

    /// Evaluate at a rational point (coords.size() == ambient_n + 1).
    Rational evaluate(std::span<const Rational> coords) const;

    /// Canonical text form; parses back to an equal polynomial.
    std::string to_string() const;

    /// Inserts c * X^e, merging and dropping zero results.
    void add_term(const ExponentVec& exps, const Rational& coeff);

private:
    int ambient_n_;
    TermMap terms_;
};

inline Polynomial operator*(const Rational& scalar, const Polynomial& p) { return p * scalar; }

/// p^k by binary powering, k >= 0.
Polynomial poly_pow(const Polynomial& p, int k);

/// Monic gcd (leading coefficient 1 in the canonical order).  gcd(0, 0)
/// is rejected.  Recursive content/primitive-part reduction in the lex
/// largest present variable with a primitive pseudo-remainder sequence.
Polynomial multivariate_gcd(const Polynomial& a, const Polynomial& b);

/// Exact division a / b when b divides a; empty otherwise.
std::optional<Polynomial> try_exact_divide(const Polynomial& a, const Polynomial& b);

/// Divides every entry by the monic gcd of all entries.  Idempotent.
/// Throws if every entry is zero.
std::vector<Polynomial> primitive_tuple(std::span<const Polynomial> tuple);

}  // namespace cremona
