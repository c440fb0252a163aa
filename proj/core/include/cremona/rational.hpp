#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "cremona/errors.hpp"

namespace cremona {

// Exact arithmetic everywhere: arbitrary-precision integers and normalized
// rationals (gcd(num, den) = 1, den > 0 -- the backend maintains this).
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// q^k for any integer k; requires q != 0 when k < 0.
inline Rational rational_pow(const Rational& q, long long k) {
    if (k == 0) return Rational(1);
    if (q == 0) {
        if (k < 0) throw precondition_error("rational_pow: 0 to a negative power");
        return Rational(0);
    }
    Rational base = q;
    unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1
                                 : static_cast<unsigned long long>(k);
    Rational acc(1);
    while (e > 0) {
        if (e & 1ull) acc *= base;
        base *= base;
        e >>= 1;
    }
    if (k < 0) acc = Rational(1) / acc;
    return acc;
}

/// "p" for integers, "p/q" otherwise; big values stay exact (decimal digits).
inline std::string rational_to_string(const Rational& q) {
    const BigInt num = numerator(q);
    const BigInt den = denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace cremona
