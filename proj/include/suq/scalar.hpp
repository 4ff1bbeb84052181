#pragma once

// The coefficient field: rational functions in a formal variable u with
// q = u^2. Working over Q(u) instead of Q(q) keeps half-integer powers of
// q exact (q^(1/2) = u), which the corepresentation unitarization needs.
//
// Canonical form: numerator and denominator coprime, denominator monic,
// zero stored as 0/1. Two scalars are equal iff their canonical forms are
// componentwise equal.

#include "polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace suq {

class Scalar {
public:
    Scalar() : num_(), den_(UPoly::one()) {}
    Scalar(const Rational& c) : num_(UPoly(c)), den_(UPoly::one()) {}
    Scalar(int c) : Scalar(Rational(c)) {}
    Scalar(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

    // q^k = u^(2k), any integer k
    static Scalar q_pow(long k) { return u_pow(2 * k); }
    // u^j, odd j giving half-integer powers of q
    static Scalar u_pow(long j) {
        if (j >= 0) return Scalar(UPoly::monomial(Rational(1), static_cast<std::size_t>(j)), UPoly::one());
        return Scalar(UPoly::one(), UPoly::monomial(Rational(1), static_cast<std::size_t>(-j)));
    }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == UPoly::one() && den_ == UPoly::one(); }

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar operator-() const {
        Scalar r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.den_ == b.den_) return Scalar(a.num_ + b.num_, a.den_);
        return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        if (a.den_ == b.den_) return Scalar(a.num_ - b.num_, a.den_);
        return Scalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.is_zero() || b.is_zero()) return Scalar();
        return Scalar(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw std::domain_error("Scalar: division by zero");
        if (a.is_zero()) return Scalar();
        return Scalar(a.num_ * b.den_, a.den_ * b.num_);
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const { return Scalar(1) / *this; }

    Scalar pow(long e) const {
        if (e == 0) return Scalar(1);
        Scalar base = e < 0 ? inverse() : *this;
        unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
        Scalar acc(1);
        while (n) {
            if (n & 1) acc *= base;
            base *= base;
            n >>= 1;
        }
        return acc;
    }

    // Substitute q = q0. Odd powers of u require q0 to be a square of a
    // rational; a vanishing denominator is rejected.
    Rational eval(const Rational& q0) const {
        bool needs_root = !num_.even_only() || !den_.even_only();
        Rational root(0);
        if (needs_root) {
            auto s = exact_sqrt(q0);
            if (!s) throw std::domain_error("Scalar::eval: odd power of q^(1/2) at a non-square point");
            root = *s;
        }
        Rational dv = eval_poly(den_, q0, root);
        if (dv == 0) throw std::domain_error("Scalar::eval: denominator vanishes at the evaluation point");
        return eval_poly(num_, q0, root) / dv;
    }

    // floating-point substitution q = q0 via u = sqrt(q0)
    double eval_d(double q0) const {
        double u = std::sqrt(q0);
        auto horner = [u](const UPoly& p) {
            double acc = 0.0;
            for (long i = p.degree(); i >= 0; --i)
                acc = acc * u + static_cast<double>(p.coeff(static_cast<std::size_t>(i)));
            return acc;
        };
        double dv = horner(den_);
        if (dv == 0.0) throw std::domain_error("Scalar::eval_d: denominator vanishes");
        return horner(num_) / dv;
    }

    // Laurent decomposition when the denominator is a single monomial:
    // list of (coefficient, exponent of u) pairs, ascending exponent.
    std::optional<std::vector<std::pair<Rational, long>>> laurent_terms() const {
        long shift = 0;
        if (den_ != UPoly::one()) {
            if (den_.coeff(static_cast<std::size_t>(den_.degree())) != 1) return std::nullopt;
            for (long i = 0; i < den_.degree(); ++i)
                if (den_.coeff(static_cast<std::size_t>(i)) != 0) return std::nullopt;
            shift = den_.degree();
        }
        std::vector<std::pair<Rational, long>> out;
        for (long i = 0; i <= num_.degree(); ++i) {
            Rational c = num_.coeff(static_cast<std::size_t>(i));
            if (c != 0) out.emplace_back(c, i - shift);
        }
        return out;
    }

private:
    static Rational eval_poly(const UPoly& p, const Rational& q0, const Rational& root) {
        Rational acc(0), qp(1);
        // walk even/odd coefficient pairs so q0 powers, not u powers, are formed
        for (long i = 0; i <= p.degree(); i += 2) {
            acc += p.coeff(static_cast<std::size_t>(i)) * qp;
            if (i + 1 <= p.degree()) acc += p.coeff(static_cast<std::size_t>(i + 1)) * qp * root;
            qp *= q0;
        }
        return acc;
    }

    void canonicalize() {
        if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
        if (num_.is_zero()) {
            den_ = UPoly::one();
            return;
        }
        // a unit denominator is already monic and coprime
        if (den_ == UPoly::one()) return;
        // denominator u^k (the common case: Laurent coefficients): cancel the
        // shared power of u by shifting instead of running the gcd
        bool monomial_den = den_.leading() == 1;
        for (long i = 0; monomial_den && i < den_.degree(); ++i)
            if (den_.coeff(static_cast<std::size_t>(i)) != 0) monomial_den = false;
        if (monomial_den) {
            long k = den_.degree();
            long t = 0;
            while (num_.coeff(static_cast<std::size_t>(t)) == 0) ++t;
            long s = std::min(k, t);
            if (s > 0) {
                num_ = num_ / UPoly::monomial(Rational(1), static_cast<std::size_t>(s));
                den_ = UPoly::monomial(Rational(1), static_cast<std::size_t>(k - s));
            }
            return;
        }
        UPoly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        Rational lc = den_.leading();
        if (lc != 1) {
            num_.scale(Rational(1) / lc);
            den_.scale(Rational(1) / lc);
        }
    }

    UPoly num_;
    UPoly den_; // monic, coprime to num_
};

// --- rendering ------------------------------------------------------------

// exponent of u -> power-of-q text ("", "q", "q^2", "q^-1", "q^(1/2)", ...)
inline std::string q_power_str(long ue) {
    if (ue == 0) return "";
    if (ue % 2 == 0) {
        long e = ue / 2;
        if (e == 1) return "q";
        return "q^" + std::to_string(e);
    }
    return "q^(" + std::to_string(ue) + "/2)";
}

inline std::string render_poly_in_q(const UPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = p.degree(); i >= 0; --i) {
        Rational c = p.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string qs = q_power_str(i);
        if (qs.empty()) os << rat_str(a);
        else if (a == 1) os << qs;
        else os << rat_str(a) << " " << qs;
        first = false;
    }
    return os.str();
}

// canonical text form p(q)/r(q); Laurent monomial denominators are folded in
inline std::string render_scalar(const Scalar& s) {
    if (s.is_zero()) return "0";
    if (auto lt = s.laurent_terms()) {
        std::ostringstream os;
        bool first = true;
        for (auto it = lt->rbegin(); it != lt->rend(); ++it) {
            auto& [c, ue] = *it;
            bool neg = c < 0;
            Rational a = neg ? Rational(-c) : c;
            if (first) {
                if (neg) os << "-";
            } else {
                os << (neg ? " - " : " + ");
            }
            std::string qs = q_power_str(ue);
            if (qs.empty()) os << rat_str(a);
            else if (a == 1) os << qs;
            else os << rat_str(a) << " " << qs;
            first = false;
        }
        return os.str();
    }
    std::string n = render_poly_in_q(s.num());
    std::string d = render_poly_in_q(s.den());
    return "(" + n + ")/(" + d + ")";
}

} // namespace suq
