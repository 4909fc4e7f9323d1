#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <utility>
#include <vector>

#include "eqehr/rational.hpp"

namespace eqehr {

/// Dense univariate polynomial over the rationals, coefficients stored
/// lowest degree first. Canonical form: no trailing zero coefficient, so
/// the zero polynomial is the empty coefficient list.
class Poly {
public:
    Poly() = default;
    explicit Poly(QVec coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(const Rat& v) { return Poly(QVec{v}); }
    static Poly one() { return constant(1); }
    /// v * t^k
    static Poly monomial(std::size_t k, const Rat& v = 1) {
        QVec c(k + 1);
        c[k] = v;
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const QVec& coeffs() const { return c_; }
    /// Coefficient of t^j (zero beyond the stored range).
    Rat coeff(std::size_t j) const { return j < c_.size() ? c_[j] : Rat(0); }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

    Rat operator()(const Rat& x) const {
        Rat acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly operator-() const {
        QVec c(c_);
        for (auto& v : c) v = -v;
        return Poly(std::move(c));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        QVec c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        QVec c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }
    friend Poly operator*(const Rat& s, const Poly& p) {
        if (s == 0) return Poly();
        QVec c(p.c_);
        for (auto& v : c) v *= s;
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& p, const Rat& s) { return s * p; }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned long e) const {
        Poly r = one();
        Poly base = *this;
        while (e) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    /// Euclidean division: returns {quotient, remainder} with
    /// *this == q * d + r and deg r < deg d.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        Poly r = *this;
        QVec q(r.c_.size() > d.c_.size() ? r.c_.size() - d.c_.size() + 1 : 1, Rat(0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            Rat f = r.leading() / d.leading();
            std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
            q[shift] = f;
            QVec rc = r.c_;
            for (std::size_t i = 0; i < d.c_.size(); ++i) rc[shift + i] -= f * d.c_[i];
            rc.pop_back();
            r = Poly(std::move(rc));
        }
        return {Poly(std::move(q)), r};
    }

    /// Exact division; throws if the remainder is nonzero.
    Poly divide_exact(const Poly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
        return q;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return (Rat(1) / leading()) * *this;
    }

    /// Monic greatest common divisor (Euclid over the rationals).
    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = a.divmod(b).second;
            a = std::move(b);
            b = r.monic();  // keeps coefficient growth in check
        }
        return a.monic();
    }

    bool is_integral() const {
        for (const auto& v : c_)
            if (!is_integer(v)) return false;
        return true;
    }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t j = 0; j < c_.size(); ++j) {
            if (c_[j] == 0) continue;
            Rat v = c_[j];
            if (first) {
                if (v < 0) { os << "-"; v = -v; }
            } else {
                os << (v < 0 ? " - " : " + ");
                if (v < 0) v = -v;
            }
            if (j == 0 || v != 1) {
                os << rat_to_string(v);
                if (j > 0) os << "*";
            }
            if (j == 1) os << var;
            else if (j > 1) os << var << "^" << j;
            first = false;
        }
        return os.str();
    }

private:
    QVec c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

/// (1 - t^n)^e, the standard Ehrhart denominator building block.
inline Poly one_minus_tn_pow(unsigned n, unsigned e) {
    QVec c(n + 1);
    c[0] = 1;
    c[n] = -1;
    return Poly(std::move(c)).pow(e);
}

/// 1 + t + ... + t^{n-1}
inline Poly geometric_sum(unsigned n) {
    return Poly(QVec(n, Rat(1)));
}

}  // namespace eqehr
