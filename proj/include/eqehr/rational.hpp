#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "eqehr/errors.hpp"

namespace eqehr {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

inline Int numer_of(const Rat& x) { return numerator(x); }
inline Int denom_of(const Rat& x) { return denominator(x); }

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

inline Int to_integer(const Rat& x) {
    if (!is_integer(x)) throw NonIntegralError("expected integer, got " + x.str());
    return numerator(x);
}

/// Largest integer <= x.
inline Int floor_rat(const Rat& x) {
    Int q = numerator(x) / denominator(x);
    if (numerator(x) < 0 && q * denominator(x) != numerator(x)) --q;
    return q;
}

/// Smallest integer >= x.
inline Int ceil_rat(const Rat& x) { return -floor_rat(-x); }

inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm_int(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

/// Serialized form "p/q", or just "p" when the denominator is 1.
inline std::string rat_to_string(const Rat& x) { return x.str(); }

inline Rat rat_from_string(const std::string& s) {
    try {
        return Rat(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational literal: '" + s + "'");
    }
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace eqehr
