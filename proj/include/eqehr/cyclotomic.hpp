#pragma once

#include <map>
#include <utility>

#include "eqehr/poly.hpp"

namespace eqehr {

namespace detail {
inline unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}
}  // namespace detail

/// The n-th cyclotomic polynomial, computed by dividing x^n - 1 by the
/// cyclotomic polynomials of the proper divisors of n. Integer coefficients.
inline Poly cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_polynomial requires n >= 1");
    // Cheap enough to memoize per thread; the same small orders recur
    // constantly during character-table arithmetic.
    thread_local std::map<unsigned, Poly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    Poly result;
    if (n == 1) {
        result = Poly{-1, 1};  // x - 1
    } else {
        QVec xn(n + 1);
        xn[0] = -1;
        xn[n] = 1;
        Poly num(std::move(xn));
        for (unsigned d = 1; d < n; ++d)
            if (n % d == 0) num = num.divide_exact(cyclotomic_polynomial(d));
        result = num;
    }
    cache.emplace(n, result);
    return result;
}

/// An element of the n-th cyclotomic field Q(zeta_n), stored as a polynomial
/// in zeta_n reduced modulo the n-th cyclotomic polynomial. Elements of
/// different orders are combined by embedding into the lcm order.
class CycloNum {
public:
    CycloNum() : order_(1), res_() {}
    /* implicit */ CycloNum(const Rat& v) : order_(1), res_(v == 0 ? Poly() : Poly::constant(v)) {}
    /* implicit */ CycloNum(int v) : CycloNum(Rat(v)) {}

    CycloNum(unsigned order, Poly residue) : order_(order) {
        res_ = reduce(std::move(residue), order_);
    }

    /// zeta_n^k
    static CycloNum zeta_pow(unsigned n, long k) {
        long r = k % static_cast<long>(n);
        if (r < 0) r += n;
        return CycloNum(n, Poly::monomial(static_cast<std::size_t>(r)));
    }
    static CycloNum zeta(unsigned n) { return zeta_pow(n, 1); }

    unsigned order() const { return order_; }
    const Poly& residue() const { return res_; }
    bool is_zero() const { return res_.is_zero(); }

    bool is_rational() const { return res_.degree() <= 0; }
    /// The rational value, when the element lies in Q; otherwise the inner
    /// product or table that produced it was not Galois-stable.
    Rat to_rational() const {
        if (!is_rational())
            throw NonRationalError("cyclotomic value is not rational: " + res_.str("z") +
                                   " (order " + std::to_string(order_) + ")");
        return res_.coeff(0);
    }

    /// Re-express in the cyclotomic field of order m (requires order | m).
    CycloNum to_order(unsigned m) const {
        if (m % order_ != 0) throw std::invalid_argument("cyclotomic up-conversion needs order | m");
        if (m == order_) return *this;
        unsigned step = m / order_;
        Poly out;
        for (std::size_t j = 0; j < res_.coeffs().size(); ++j)
            if (res_.coeff(j) != 0)
                out += Poly::monomial(j * step, res_.coeff(j));
        return CycloNum(m, std::move(out));
    }

    /// Complex conjugation zeta -> zeta^{-1}; an involutive ring automorphism.
    CycloNum conjugate() const {
        if (order_ == 1) return *this;
        Poly out;
        for (std::size_t j = 0; j < res_.coeffs().size(); ++j) {
            if (res_.coeff(j) == 0) continue;
            std::size_t k = j == 0 ? 0 : order_ - j;
            out += CycloNum(order_, Poly::monomial(k, res_.coeff(j))).res_;
        }
        return CycloNum(order_, std::move(out));
    }

    friend CycloNum operator+(const CycloNum& a, const CycloNum& b) {
        auto [x, y] = align(a, b);
        return CycloNum(x.order_, x.res_ + y.res_);
    }
    friend CycloNum operator-(const CycloNum& a, const CycloNum& b) {
        auto [x, y] = align(a, b);
        return CycloNum(x.order_, x.res_ - y.res_);
    }
    friend CycloNum operator*(const CycloNum& a, const CycloNum& b) {
        auto [x, y] = align(a, b);
        return CycloNum(x.order_, x.res_ * y.res_);
    }
    CycloNum operator-() const { return CycloNum(order_, -res_); }
    CycloNum& operator+=(const CycloNum& o) { return *this = *this + o; }
    CycloNum& operator-=(const CycloNum& o) { return *this = *this - o; }
    CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }

    friend bool operator==(const CycloNum& a, const CycloNum& b) {
        auto [x, y] = align(a, b);
        return x.res_ == y.res_;
    }
    friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

    std::string str() const {
        if (is_rational()) return rat_to_string(res_.coeff(0));
        return res_.str("z" + std::to_string(order_));
    }

private:
    unsigned order_;
    Poly res_;

    static Poly reduce(Poly p, unsigned order) {
        if (order == 1) {
            // Q(zeta_1) = Q; evaluate at zeta_1 = 1.
            return p.is_zero() ? Poly() : Poly::constant(p(Rat(1)));
        }
        if (p.degree() >= static_cast<int>(detail::euler_phi(order)))
            p = p.divmod(cyclotomic_polynomial(order)).second;
        return p;
    }

    static std::pair<CycloNum, CycloNum> align(const CycloNum& a, const CycloNum& b) {
        if (a.order_ == b.order_) return {a, b};
        unsigned m = static_cast<unsigned>(lcm_int(a.order_, b.order_).convert_to<unsigned long>());
        return {a.to_order(m), b.to_order(m)};
    }
};

/// Rational value of x, or NonRationalError if x lies outside Q.
inline Rat cyclo_to_rational(const CycloNum& x) { return x.to_rational(); }

}  // namespace eqehr
