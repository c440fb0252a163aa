#include "cremona/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cremona/errors.hpp"

namespace cremona {

namespace {

void check_same_ambient(const Polynomial& a, const Polynomial& b, const char* op) {
    if (a.ambient_n() != b.ambient_n())
        throw precondition_error(std::string(op) + ": ambient dimension mismatch (" +
                                 std::to_string(a.ambient_n()) + " vs " +
                                 std::to_string(b.ambient_n()) + ")");
}

}  // namespace

Polynomial::Polynomial(int ambient_n) : ambient_n_(ambient_n) {
    if (ambient_n < 0) throw precondition_error("Polynomial: negative ambient dimension");
}

Polynomial Polynomial::zero(int ambient_n) { return Polynomial(ambient_n); }

Polynomial Polynomial::constant(int ambient_n, Rational value) {
    Polynomial p(ambient_n);
    if (value != 0) p.terms_.emplace(ExponentVec(ambient_n + 1, 0), std::move(value));
    return p;
}

Polynomial Polynomial::variable(int ambient_n, int index) {
    if (index < 0 || index > ambient_n)
        throw precondition_error("Polynomial::variable: index " + std::to_string(index) +
                                 " outside X0..X" + std::to_string(ambient_n));
    ExponentVec e(ambient_n + 1, 0);
    e[index] = 1;
    Polynomial p(ambient_n);
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

Polynomial Polynomial::monomial(int ambient_n, ExponentVec exps, Rational coeff) {
    Polynomial p(ambient_n);
    p.add_term(exps, coeff);
    return p;
}

void Polynomial::add_term(const ExponentVec& exps, const Rational& coeff) {
    if (static_cast<int>(exps.size()) != ambient_n_ + 1)
        throw precondition_error("add_term: exponent vector has wrong length");
    for (int e : exps)
        if (e < 0) throw precondition_error("add_term: negative exponent");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

const std::pair<const ExponentVec, Rational>& Polynomial::leading_term() const {
    if (terms_.empty()) throw precondition_error("leading_term: zero polynomial");
    return *terms_.begin();
}

Polynomial Polynomial::operator-() const {
    Polynomial out(ambient_n_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    check_same_ambient(*this, rhs, "poly add");
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    check_same_ambient(*this, rhs, "poly sub");
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    check_same_ambient(lhs, rhs, "poly mul");
    Polynomial out(lhs.ambient_n());
    ExponentVec e(lhs.ambient_n() + 1);
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
    if (scalar == 0) return Polynomial(ambient_n_);
    Polynomial out(ambient_n_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * scalar);
    return out;
}

int Polynomial::total_degree() const {
    if (terms_.empty()) throw precondition_error("total_degree: zero polynomial");
    int best = 0;
    for (const auto& [e, c] : terms_)
        best = std::max(best, std::accumulate(e.begin(), e.end(), 0));
    return best;
}

std::optional<int> Polynomial::homogeneous_degree() const {
    if (terms_.empty()) return 0;
    std::optional<int> deg;
    for (const auto& [e, c] : terms_) {
        int d = std::accumulate(e.begin(), e.end(), 0);
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg;
}

int Polynomial::x0_degree() const {
    if (terms_.empty()) throw precondition_error("x0_degree: zero polynomial");
    return terms_.begin()->first[0];  // descending lex: first term maximizes e0
}

Polynomial Polynomial::coefficient_of_x0(int k) const {
    Polynomial out(ambient_n_);
    for (const auto& [e, c] : terms_) {
        if (e[0] != k) continue;
        ExponentVec r = e;
        r[0] = 0;
        out.terms_.emplace(std::move(r), c);
    }
    return out;
}

Polynomial Polynomial::derivative(int index) const {
    if (index < 0 || index > ambient_n_)
        throw precondition_error("derivative: variable index out of range");
    Polynomial out(ambient_n_);
    for (const auto& [e, c] : terms_) {
        if (e[index] == 0) continue;
        ExponentVec r = e;
        r[index] -= 1;
        out.add_term(r, c * Rational(e[index]));
    }
    return out;
}

Polynomial Polynomial::with_variable_zero(int index) const {
    if (index < 0 || index > ambient_n_)
        throw precondition_error("with_variable_zero: variable index out of range");
    Polynomial out(ambient_n_);
    for (const auto& [e, c] : terms_)
        if (e[index] == 0) out.terms_.emplace(e, c);
    return out;
}

Polynomial Polynomial::substituted(std::span<const Polynomial> images) const {
    if (static_cast<int>(images.size()) != ambient_n_ + 1)
        throw precondition_error("substituted: need one image per variable X0..X" +
                                 std::to_string(ambient_n_));
    if (images.empty()) throw precondition_error("substituted: empty image tuple");
    const int m = images[0].ambient_n();
    for (const auto& g : images)
        if (g.ambient_n() != m)
            throw precondition_error("substituted: images disagree on ambient dimension");

    // Cache image powers; exponents stay small at desk scale.
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power = [&](int i, int k) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Polynomial::constant(m, 1));
        while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
        return cache[k];
    };

    Polynomial out(m);
    for (const auto& [e, c] : terms_) {
        Polynomial prod = Polynomial::constant(m, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) prod = prod * power(static_cast<int>(i), e[i]);
        out += prod;
    }
    return out;
}

Rational Polynomial::evaluate(std::span<const Rational> coords) const {
    if (static_cast<int>(coords.size()) != ambient_n_ + 1)
        throw precondition_error("evaluate: wrong number of coordinates");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term *= rational_pow(coords[i], e[i]);
        acc += term;
    }
    return acc;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "X" + std::to_string(i);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out << rational_to_string(mag);
        } else {
            if (mag != 1) out << rational_to_string(mag) << "*";
            out << mono;
        }
    }
    return out.str();
}

Polynomial poly_pow(const Polynomial& p, int k) {
    if (k < 0) throw precondition_error("poly_pow: negative exponent");
    Polynomial acc = Polynomial::constant(p.ambient_n(), 1);
    Polynomial base = p;
    int e = k;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        if (e >>= 1) base = base * base;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// GCD: recursive content / primitive-part reduction on the lex-largest
// present variable, primitive pseudo-remainder sequence on the rest.

namespace {

bool is_constant(const Polynomial& p) {
    if (p.is_zero()) return true;
    if (p.term_count() != 1) return false;
    const auto& e = p.terms().begin()->first;
    return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

// Smallest variable index that occurs with positive exponent, or -1.
int lowest_present_variable(const Polynomial& p) {
    int best = -1;
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0) {
                if (best == -1 || static_cast<int>(i) < best) best = static_cast<int>(i);
                break;
            }
        }
        if (best == 0) break;
    }
    return best;
}

int degree_in(const Polynomial& p, int var) {
    int d = 0;
    for (const auto& [e, c] : p.terms()) d = std::max(d, e[var]);
    return d;
}

Polynomial coefficient_of(const Polynomial& p, int var, int k) {
    Polynomial out(p.ambient_n());
    for (const auto& [e, c] : p.terms()) {
        if (e[var] != k) continue;
        ExponentVec r = e;
        r[var] = 0;
        out.add_term(r, c);
    }
    return out;
}

Polynomial times_var_power(const Polynomial& p, int var, int k) {
    Polynomial out(p.ambient_n());
    for (const auto& [e, c] : p.terms()) {
        ExponentVec r = e;
        r[var] += k;
        out.add_term(r, c);
    }
    return out;
}

// Divide by the rational content so coefficients become coprime integers
// with positive leading coefficient.  Unit normalization only.
Polynomial strip_rational_scale(const Polynomial& p) {
    if (p.is_zero()) return p;
    BigInt num_gcd = 0;
    BigInt den_lcm = 1;
    for (const auto& [e, c] : p.terms()) {
        num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::abs(numerator(c)));
        den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
    }
    Rational scale(den_lcm, num_gcd == 0 ? BigInt(1) : num_gcd);
    if (p.leading_term().second < 0) scale = -scale;
    return p * scale;
}

Polynomial monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / p.leading_term().second);
}

// lc(B)^{delta+1} A mod B in the variable `var`, exactly (early degree drops
// are compensated by the trailing power).
Polynomial pseudo_remainder(Polynomial A, const Polynomial& B, int var) {
    const int db = degree_in(B, var);
    const Polynomial lcB = coefficient_of(B, var, db);
    int e = degree_in(A, var) - db + 1;
    while (!A.is_zero()) {
        const int da = degree_in(A, var);
        if (da < db) break;
        const Polynomial lcA = coefficient_of(A, var, da);
        A = lcB * A - times_var_power(lcA * B, var, da - db);
        --e;
    }
    for (; e > 0; --e) A = lcB * A;
    return A;
}

// True when no variable below `var` occurs: coefficients are rationals.
bool univariate_in(const Polynomial& p, int var) {
    for (const auto& [e, c] : p.terms())
        for (std::size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) != var && e[i] > 0) return false;
    return true;
}

// Monic Euclidean remainders; coefficient growth is a non-issue over Q.
Polynomial univariate_gcd(Polynomial A, Polynomial B, int var) {
    while (!B.is_zero()) {
        B = monic(B);
        const int db = degree_in(B, var);
        while (!A.is_zero() && degree_in(A, var) >= db) {
            const int da = degree_in(A, var);
            const Polynomial lcA = coefficient_of(A, var, da);
            A -= times_var_power(lcA * B, var, da - db);
        }
        std::swap(A, B);
    }
    return monic(A);
}

struct ContentSplit {
    Polynomial content;
    Polynomial primitive;
};

ContentSplit content_and_primitive(const Polynomial& p, int var);

// Componentwise min exponent over the support.
ExponentVec monomial_content(const Polynomial& p) {
    ExponentVec m = p.terms().begin()->first;
    for (const auto& [e, c] : p.terms())
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

Polynomial shift_exponents(const Polynomial& p, const ExponentVec& delta, int sign) {
    Polynomial out(p.ambient_n());
    for (const auto& [e, c] : p.terms()) {
        ExponentVec r = e;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += sign * delta[i];
        out.add_term(r, c);
    }
    return out;
}

Polynomial gcd_impl(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (is_constant(a) || is_constant(b)) return Polynomial::constant(a.ambient_n(), 1);

    // Split off monomial content first; it is cheap and shortcuts the
    // common case of tuples sharing a monomial factor.
    const ExponentVec ma = monomial_content(a);
    const ExponentVec mb = monomial_content(b);
    bool stripped = false;
    ExponentVec shared(ma.size(), 0);
    for (std::size_t i = 0; i < ma.size(); ++i) {
        shared[i] = std::min(ma[i], mb[i]);
        stripped = stripped || ma[i] > 0 || mb[i] > 0;
    }
    if (stripped) {
        Polynomial g = gcd_impl(shift_exponents(a, ma, -1), shift_exponents(b, mb, -1));
        return monic(shift_exponents(g, shared, +1));
    }

    const int va = lowest_present_variable(a);
    const int vb = lowest_present_variable(b);
    if (va != vb) {
        // The common divisor cannot involve the variable present in only one
        // argument, so it divides that argument's content.
        if (va < vb) return gcd_impl(content_and_primitive(a, va).content, b);
        return gcd_impl(a, content_and_primitive(b, vb).content);
    }

    const int var = va;
    if (univariate_in(a, var) && univariate_in(b, var)) return univariate_gcd(a, b, var);

    auto [ca, A] = content_and_primitive(a, var);
    auto [cb, B] = content_and_primitive(b, var);
    Polynomial cg = gcd_impl(ca, cb);

    // Subresultant remainder sequence: the divisors g h^delta are exact and
    // keep coefficient growth polynomial without per-step content gcds.
    if (degree_in(A, var) < degree_in(B, var)) std::swap(A, B);
    Polynomial g = Polynomial::constant(a.ambient_n(), 1);
    Polynomial h = g;
    while (!B.is_zero()) {
        const int delta = degree_in(A, var) - degree_in(B, var);
        Polynomial R = pseudo_remainder(A, B, var);
        if (!R.is_zero()) {
            Polynomial divisor = g * poly_pow(h, delta);
            auto q = try_exact_divide(R, divisor);
            if (!q) throw error("multivariate_gcd: subresultant division failure");
            R = strip_rational_scale(*q);
        }
        g = coefficient_of(B, var, degree_in(B, var));
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            auto q = try_exact_divide(poly_pow(g, delta), poly_pow(h, delta - 1));
            if (!q) throw error("multivariate_gcd: subresultant h-update failure");
            h = strip_rational_scale(*q);
        }
        A = std::move(B);
        B = std::move(R);
    }
    return monic(cg * content_and_primitive(A, var).primitive);
}

ContentSplit content_and_primitive(const Polynomial& p, int var) {
    Polynomial content(p.ambient_n());
    const int deg = degree_in(p, var);
    for (int k = deg; k >= 0; --k) {
        Polynomial c = coefficient_of(p, var, k);
        if (c.is_zero()) continue;
        content = gcd_impl(content, c);
        if (is_constant(content)) break;
    }
    if (is_constant(content)) return {Polynomial::constant(p.ambient_n(), 1), strip_rational_scale(p)};
    auto quotient = try_exact_divide(p, content);
    if (!quotient) throw error("content_and_primitive: internal division failure");
    return {std::move(content), strip_rational_scale(*quotient)};
}

}  // namespace

Polynomial multivariate_gcd(const Polynomial& a, const Polynomial& b) {
    check_same_ambient(a, b, "multivariate_gcd");
    if (a.is_zero() && b.is_zero())
        throw precondition_error("multivariate_gcd: gcd(0, 0) is undefined");
    return gcd_impl(a, b);
}

std::optional<Polynomial> try_exact_divide(const Polynomial& a, const Polynomial& b) {
    check_same_ambient(a, b, "try_exact_divide");
    if (b.is_zero()) throw precondition_error("try_exact_divide: division by zero");
    Polynomial remainder = a;
    Polynomial quotient(a.ambient_n());
    const auto& [eb, cb] = b.leading_term();
    while (!remainder.is_zero()) {
        const auto& [er, cr] = remainder.leading_term();
        ExponentVec q(er.size());
        for (std::size_t i = 0; i < er.size(); ++i) {
            if (er[i] < eb[i]) return std::nullopt;
            q[i] = er[i] - eb[i];
        }
        Polynomial t = Polynomial::monomial(a.ambient_n(), q, cr / cb);
        quotient += t;
        remainder -= t * b;
    }
    return quotient;
}

std::vector<Polynomial> primitive_tuple(std::span<const Polynomial> tuple) {
    if (tuple.empty()) throw precondition_error("primitive_tuple: empty tuple");
    Polynomial g(tuple[0].ambient_n());
    for (const auto& p : tuple) {
        if (p.is_zero()) continue;
        g = g.is_zero() ? p : multivariate_gcd(g, p);
        if (is_constant(g) && !g.is_zero()) break;
    }
    if (g.is_zero()) throw precondition_error("primitive_tuple: all entries are zero");

    std::vector<Polynomial> out;
    out.reserve(tuple.size());
    if (is_constant(g)) {
        out.assign(tuple.begin(), tuple.end());
        return out;
    }
    g = monic(g);
    for (const auto& p : tuple) {
        if (p.is_zero()) {
            out.push_back(p);
            continue;
        }
        auto q = try_exact_divide(p, g);
        if (!q) throw error("primitive_tuple: internal division failure");
        out.push_back(std::move(*q));
    }
    return out;
}

}  // namespace cremona
