#pragma once

// Dense univariate polynomials over the rationals: just enough arithmetic
// (add, multiply, exact/euclidean division, monic gcd) to support a field
// of rational functions on top.

#include "rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace suq {

class UPoly {
public:
    UPoly() = default;
    explicit UPoly(Rational c) {
        if (c != 0) coef_.push_back(std::move(c));
    }
    static UPoly monomial(const Rational& c, std::size_t deg) {
        UPoly p;
        if (c != 0) {
            p.coef_.assign(deg + 1, Rational(0));
            p.coef_[deg] = c;
        }
        return p;
    }
    static UPoly one() { return UPoly(Rational(1)); }

    bool is_zero() const { return coef_.empty(); }
    // degree of the zero polynomial is reported as -1
    long degree() const { return static_cast<long>(coef_.size()) - 1; }

    const Rational& leading() const {
        if (is_zero()) throw std::domain_error("UPoly::leading: zero polynomial");
        return coef_.back();
    }

    Rational coeff(std::size_t i) const {
        return i < coef_.size() ? coef_[i] : Rational(0);
    }
    const std::vector<Rational>& coeffs() const { return coef_; }

    bool operator==(const UPoly& o) const { return coef_ == o.coef_; }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    UPoly operator-() const {
        UPoly r = *this;
        for (auto& c : r.coef_) c = -c;
        return r;
    }

    UPoly& operator+=(const UPoly& o) {
        if (coef_.size() < o.coef_.size()) coef_.resize(o.coef_.size(), Rational(0));
        for (std::size_t i = 0; i < o.coef_.size(); ++i) coef_[i] += o.coef_[i];
        trim();
        return *this;
    }
    UPoly& operator-=(const UPoly& o) {
        if (coef_.size() < o.coef_.size()) coef_.resize(o.coef_.size(), Rational(0));
        for (std::size_t i = 0; i < o.coef_.size(); ++i) coef_[i] -= o.coef_[i];
        trim();
        return *this;
    }

    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }

    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        UPoly r;
        r.coef_.assign(a.coef_.size() + b.coef_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coef_.size(); ++i) {
            if (a.coef_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coef_.size(); ++j)
                r.coef_[i + j] += a.coef_[i] * b.coef_[j];
        }
        r.trim();
        return r;
    }

    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

    UPoly& scale(const Rational& c) {
        if (c == 0) { coef_.clear(); return *this; }
        for (auto& x : coef_) x *= c;
        return *this;
    }

    // shift by u^k, i.e. multiply by the monomial of degree k
    UPoly shifted(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        UPoly r;
        r.coef_.assign(coef_.size() + k, Rational(0));
        std::copy(coef_.begin(), coef_.end(), r.coef_.begin() + static_cast<long>(k));
        return r;
    }

    // quotient and remainder with deg(rem) < deg(divisor)
    friend std::pair<UPoly, UPoly> divmod(UPoly num, const UPoly& den) {
        if (den.is_zero()) throw std::domain_error("UPoly divmod: division by zero");
        UPoly q;
        long dd = den.degree();
        if (num.degree() >= dd) q.coef_.assign(static_cast<std::size_t>(num.degree() - dd) + 1, Rational(0));
        while (!num.is_zero() && num.degree() >= dd) {
            long k = num.degree() - dd;
            Rational c = num.leading() / den.leading();
            q.coef_[static_cast<std::size_t>(k)] = c;
            for (long i = 0; i <= dd; ++i)
                num.coef_[static_cast<std::size_t>(k + i)] -= c * den.coef_[static_cast<std::size_t>(i)];
            num.trim();
        }
        q.trim();
        return {q, num};
    }

    friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }
    friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

    // normalized to leading coefficient 1
    UPoly monic() const {
        if (is_zero()) return *this;
        UPoly r = *this;
        Rational lc = r.leading();
        for (auto& c : r.coef_) c /= lc;
        return r;
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // true when only even powers of the variable occur
    bool even_only() const {
        for (std::size_t i = 1; i < coef_.size(); i += 2)
            if (coef_[i] != 0) return false;
        return true;
    }

private:
    void trim() {
        while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
    }

    std::vector<Rational> coef_; // coef_[i] multiplies u^i
};

// monic gcd via the Euclidean algorithm
inline UPoly poly_gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

} // namespace suq
