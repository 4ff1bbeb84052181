#pragma once

// Independent checks that bypass the rewriting engine.
//
// 1. The l^2(N x Z) representation at a fixed rational 0 < q0 < 1:
//      a  e(r,s) = sqrt(1-q0^(2r)) e(r-1,s)     c  e(r,s) = q0^r e(r,s+1)
//    Square roots are never evaluated: a coefficient is a rational times a
//    multiset of radical indices j, standing for prod_j sqrt(1-q0^(2j)).
//    Terms of a normal form that hit the same target vector share the same
//    radical multiset, so vanishing of the stored rationals is exact.
// 2. Characters theta_z (z on the unit circle) and the circle morphism
//    pi: a -> z, c -> 0, both of which kill the rewriting's q-factors in
//    controlled ways.

#include "hopf.hpp"

#include <complex>
#include <cstdlib>

namespace suq {

// coefficient = rat * prod_j sqrt(1 - q0^(2j)) over the (squarefree) index list
struct RadicalCoeff {
    using Key = std::vector<long>; // sorted, each j >= 1, no repeats

    static void push(Key& key, Rational& rat, long j, const Rational& q0) {
        auto it = std::lower_bound(key.begin(), key.end(), j);
        if (it != key.end() && *it == j) {
            key.erase(it); // squared radical becomes rational
            rat *= Rational(1) - rat_pow(q0, 2 * j);
        } else {
            key.insert(it, j);
        }
    }
};

class L2Vector {
public:
    using Point = std::pair<long, long>; // (r, s)
    using ClassMap = std::map<RadicalCoeff::Key, Rational>;
    using TermMap = std::map<Point, ClassMap>;

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Point& p, const RadicalCoeff::Key& key, const Rational& c) {
        if (c == 0) return;
        auto& cm = terms_[p];
        auto [it, fresh] = cm.try_emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) cm.erase(it);
        }
        if (cm.empty()) terms_.erase(p);
    }

    bool operator==(const L2Vector& o) const { return terms_ == o.terms_; }

private:
    TermMap terms_;
};

namespace detail {

// apply the basis word B(k,n,m): first c^m, then c*^n, then the a-block
inline void l2_apply_basis(const BasisIndex& idx, long r, long s,
                           const RadicalCoeff::Key& key0, const Rational& c0,
                           const Rational& q0, L2Vector& out) {
    Rational rat = c0 * rat_pow(q0, r * (idx.n + idx.m));
    long s2 = s + idx.m - idx.n;
    RadicalCoeff::Key key = key0;
    if (idx.k > 0) {
        if (r < idx.k) return; // hits the 1 - q0^0 = 0 radical
        for (long l = 0; l < idx.k; ++l) RadicalCoeff::push(key, rat, r - l, q0);
    } else if (idx.k < 0) {
        for (long l = 1; l <= -idx.k; ++l) RadicalCoeff::push(key, rat, r + l, q0);
    }
    out.add({r - idx.k, s2}, key, rat);
}

} // namespace detail

inline L2Vector l2_apply(const AlgebraElement& x, long r, long s, const Rational& q0) {
    if (r < 0) throw std::invalid_argument("l2_apply: r must be nonnegative");
    L2Vector out;
    for (auto& [idx, c] : x.terms())
        detail::l2_apply_basis(idx, r, s, {}, c.eval(q0), q0, out);
    return out;
}

inline L2Vector l2_apply(const AlgebraElement& x, const L2Vector& v, const Rational& q0) {
    L2Vector out;
    for (auto& [pt, classes] : v.terms())
        for (auto& [key, rat] : classes)
            for (auto& [idx, c] : x.terms())
                detail::l2_apply_basis(idx, pt.first, pt.second, key, rat * c.eval(q0), q0, out);
    return out;
}

// Exact equality of the images of x and y in the representation. Sampling
// r = 0..R with R = max |k| + #terms + 2 separates the q0^(r(n+m)) factors
// of same-target terms (distinct exponents, distinct points q0^r), so an
// all-empty difference certifies equality of the represented operators.
inline bool oracle_equal(const AlgebraElement& x, const AlgebraElement& y, const Rational& q0) {
    if (!(q0 > 0 && q0 < 1)) throw std::invalid_argument("oracle_equal: need 0 < q0 < 1");
    AlgebraElement z = x - y;
    if (z.is_zero()) return true;
    long maxk = 0;
    for (auto& [idx, c] : z.terms()) maxk = std::max(maxk, std::labs(idx.k));
    long R = maxk + static_cast<long>(z.term_count()) + 2;
    for (long r = 0; r <= R; ++r)
        if (!l2_apply(z, r, 0, q0).is_zero()) return false;
    return true;
}

// --- characters of the circle subgroup --------------------------------------

struct GaussianRational {
    Rational re, im;
    bool operator==(const GaussianRational&) const = default;
    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
};

// i^t for t = 0..3, the exact fourth roots of unity
inline GaussianRational fourth_root(int t) {
    switch (((t % 4) + 4) % 4) {
        case 0: return {Rational(1), Rational(0)};
        case 1: return {Rational(0), Rational(1)};
        case 2: return {Rational(-1), Rational(0)};
        default: return {Rational(0), Rational(-1)};
    }
}

// theta_z(B(k,n,m)) = z^k [n=0][m=0], z = i^t, coefficients evaluated at q0
inline GaussianRational theta_eval(const AlgebraElement& x, int t, const Rational& q0) {
    GaussianRational acc{Rational(0), Rational(0)};
    for (auto& [idx, c] : x.terms())
        if (idx.n == 0 && idx.m == 0)
            acc = acc + GaussianRational{c.eval(q0), Rational(0)} *
                            fourth_root(static_cast<int>((t * idx.k) % 4));
    return acc;
}

// (theta_z * theta_w)(x) = sum over D(x) of theta_z(x1) theta_w(x2), exact
inline GaussianRational theta_convolve(int t1, int t2, const AlgebraElement& x,
                                       const Rational& q0) {
    GaussianRational acc{Rational(0), Rational(0)};
    TensorElement d = delta(x);
    for (auto& [kk, c] : d.terms()) {
        auto& [b1, b2] = kk;
        if (b1.n || b1.m || b2.n || b2.m) continue;
        acc = acc + GaussianRational{c.eval(q0), Rational(0)} *
                        fourth_root(static_cast<int>((t1 * b1.k + t2 * b2.k) % 4));
    }
    return acc;
}

// floating-point variants for arbitrary unimodular z
inline std::complex<double> theta_eval_d(const AlgebraElement& x, std::complex<double> z,
                                         double q0) {
    std::complex<double> acc = 0.0;
    for (auto& [idx, c] : x.terms())
        if (idx.n == 0 && idx.m == 0)
            acc += c.eval_d(q0) * std::pow(z, static_cast<double>(idx.k));
    return acc;
}

inline std::complex<double> theta_convolve_d(std::complex<double> z, std::complex<double> w,
                                             const AlgebraElement& x, double q0) {
    std::complex<double> acc = 0.0;
    TensorElement d = delta(x);
    for (auto& [kk, c] : d.terms()) {
        auto& [b1, b2] = kk;
        if (b1.n || b1.m || b2.n || b2.m) continue;
        acc += c.eval_d(q0) * std::pow(z, static_cast<double>(b1.k)) *
               std::pow(w, static_cast<double>(b2.k));
    }
    return acc;
}

// --- the circle morphism ----------------------------------------------------

// Laurent polynomials in z with Q(u) coefficients
class CirclePoly {
public:
    using TermMap = std::map<long, Scalar>;

    CirclePoly() = default;
    static CirclePoly monomial(long e, Scalar c) {
        CirclePoly p;
        p.add(e, std::move(c));
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(long e, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool operator==(const CirclePoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const CirclePoly& o) const { return !(*this == o); }

    friend CirclePoly operator+(const CirclePoly& a, const CirclePoly& b) {
        CirclePoly r = a;
        for (auto& [e, c] : b.terms_) r.add(e, c);
        return r;
    }
    friend CirclePoly operator*(const CirclePoly& a, const CirclePoly& b) {
        CirclePoly r;
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) r.add(ea + eb, ca * cb);
        return r;
    }

private:
    TermMap terms_;
};

// pi(a) = z, pi(c) = 0: only c-free basis words survive
inline CirclePoly pi_map(const AlgebraElement& x) {
    CirclePoly p;
    for (auto& [idx, c] : x.terms())
        if (idx.n == 0 && idx.m == 0) p.add(idx.k, c);
    return p;
}

} // namespace suq
