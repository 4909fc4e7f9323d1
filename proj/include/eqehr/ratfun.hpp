#pragma once

#include <utility>

#include "eqehr/poly.hpp"

namespace eqehr {

/// Rational generating function num/den kept in reduced canonical form:
/// gcd(num, den) = 1 and den(0) = 1. With both normalizations in place,
/// structural equality coincides with equality of the represented series,
/// which is what the golden-value tests rely on.
class RationalGenFunction {
public:
    /// The zero function.
    RationalGenFunction() : num_(), den_(Poly::one()) {}

    RationalGenFunction(Poly num, Poly den) { reduce(std::move(num), std::move(den)); }

    static RationalGenFunction one() { return RationalGenFunction(Poly::one(), Poly::one()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    /// True when the reduced denominator is the constant 1.
    bool is_polynomial() const { return den_ == Poly::one(); }

    /// First order+1 Taylor coefficients at t = 0, by the linear recurrence
    /// c_m = num_m - sum_{k>=1} den_k c_{m-k} (valid since den(0) = 1).
    QVec expand(std::size_t order) const {
        QVec c(order + 1);
        for (std::size_t m = 0; m <= order; ++m) {
            Rat v = num_.coeff(m);
            std::size_t kmax = std::min<std::size_t>(m, static_cast<std::size_t>(den_.degree()));
            for (std::size_t k = 1; k <= kmax; ++k) v -= den_.coeff(k) * c[m - k];
            c[m] = v;
        }
        return c;
    }

    friend RationalGenFunction operator*(const RationalGenFunction& f, const Poly& p) {
        return RationalGenFunction(f.num_ * p, f.den_);
    }
    friend RationalGenFunction operator*(const RationalGenFunction& a,
                                         const RationalGenFunction& b) {
        return RationalGenFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalGenFunction operator+(const RationalGenFunction& a,
                                         const RationalGenFunction& b) {
        return RationalGenFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend bool operator==(const RationalGenFunction& a, const RationalGenFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalGenFunction& a, const RationalGenFunction& b) {
        return !(a == b);
    }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

private:
    Poly num_;
    Poly den_;

    void reduce(Poly num, Poly den) {
        if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
        if (den.coeff(0) == 0)
            throw std::domain_error("denominator vanishes at the origin; no power series exists");
        if (num.is_zero()) {
            num_ = Poly();
            den_ = Poly::one();
            return;
        }
        Poly g = Poly::gcd(num, den);
        if (g.degree() > 0) {
            num = num.divide_exact(g);
            den = den.divide_exact(g);
        }
        Rat c = den.coeff(0);
        num_ = (Rat(1) / c) * num;
        den_ = (Rat(1) / c) * den;
    }
};

/// Reduce num/den to canonical form. Fails on a zero or origin-vanishing
/// denominator.
inline RationalGenFunction rf_reduce(Poly num, Poly den) {
    return RationalGenFunction(std::move(num), std::move(den));
}

inline QVec rf_expand(const RationalGenFunction& f, std::size_t order) {
    return f.expand(order);
}

}  // namespace eqehr
