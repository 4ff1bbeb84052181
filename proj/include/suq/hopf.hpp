#pragma once

// Hopf *-algebra structure: comultiplication, counit, antipode, and the
// axiom checks that tie them together.
//
//   D(a) = a (x) a - q c* (x) c        D(c) = c (x) a + a* (x) c
//   eps(a) = 1, eps(c) = 0             S(a) = a*, S(c) = -q c
//
// D and eps are *-homomorphisms; S is a linear antihomomorphism with
// S(S(x*)*) = x.

#include "tensor.hpp"

#include <mutex>

namespace suq {

namespace detail {

inline const TensorElement& delta_gen(Gen g) {
    static const TensorElement da = [] {
        TensorElement t = TensorElement::simple(gen_index(Gen::A), gen_index(Gen::A));
        t.add_term(gen_index(Gen::CStar), gen_index(Gen::C), -Scalar::q_pow(1));
        return t;
    }();
    static const TensorElement dastar = star(da);
    static const TensorElement dc = [] {
        TensorElement t = TensorElement::simple(gen_index(Gen::C), gen_index(Gen::A));
        t.add_term(gen_index(Gen::AStar), gen_index(Gen::C), Scalar(1));
        return t;
    }();
    static const TensorElement dcstar = star(dc);
    switch (g) {
        case Gen::A: return da;
        case Gen::AStar: return dastar;
        case Gen::C: return dc;
        case Gen::CStar: return dcstar;
    }
    throw std::logic_error("delta_gen: bad generator");
}

// Returns a reference into a process-lifetime memo; map nodes are stable and
// never erased, so the reference stays valid after the lock is released.
inline const TensorElement& delta_basis(const BasisIndex& idx) {
    static std::map<BasisIndex, TensorElement> memo;
    static std::mutex mx;
    static const TensorElement unit_tensor = TensorElement::unit();
    if (idx == BasisIndex{0, 0, 0}) return unit_tensor;
    {
        std::lock_guard lk(mx);
        if (auto it = memo.find(idx); it != memo.end()) return it->second;
    }
    TensorElement r;
    if (idx.m > 0)
        r = delta_basis({idx.k, idx.n, idx.m - 1}) * delta_gen(Gen::C);
    else if (idx.n > 0)
        r = delta_basis({idx.k, idx.n - 1, 0}) * delta_gen(Gen::CStar);
    else if (idx.k > 0)
        r = delta_basis({idx.k - 1, 0, 0}) * delta_gen(Gen::A);
    else
        r = delta_basis({idx.k + 1, 0, 0}) * delta_gen(Gen::AStar);
    std::lock_guard lk(mx);
    return memo.try_emplace(idx, std::move(r)).first->second;
}

} // namespace detail

inline TensorElement delta(const AlgebraElement& x) {
    TensorElement r;
    for (auto& [idx, c] : x.terms()) r += c * detail::delta_basis(idx);
    return r;
}

// eps(B(k,n,m)) = 1 if n = m = 0 else 0, extended linearly
inline Scalar counit(const AlgebraElement& x) {
    Scalar s;
    for (auto& [idx, c] : x.terms())
        if (idx.n == 0 && idx.m == 0) s += c;
    return s;
}

// S reverses basis words; on the commuting c-block that collapses to
//   S(B(k,n,m)) = (-1)^(n+m) q^(m-n) q^(k(n+m)) B(-k,n,m)
inline AlgebraElement antipode(const AlgebraElement& x) {
    AlgebraElement r;
    for (auto& [idx, c] : x.terms()) {
        Scalar f = Scalar::q_pow((idx.m - idx.n) + idx.k * (idx.n + idx.m));
        if ((idx.n + idx.m) % 2 != 0) f = -f;
        r.add_term({-idx.k, idx.n, idx.m}, c * f);
    }
    return r;
}

// --- axiom checks ----------------------------------------------------------

namespace detail {

inline Tensor3Element delta_on_left(const TensorElement& t) {
    Tensor3Element r;
    for (auto& [kk, c] : t.terms()) {
        const TensorElement& d = delta_basis(kk.first);
        for (auto& [dk, dc] : d.terms())
            r.add_term({dk.first, dk.second, kk.second}, c * dc);
    }
    return r;
}

inline Tensor3Element delta_on_right(const TensorElement& t) {
    Tensor3Element r;
    for (auto& [kk, c] : t.terms()) {
        const TensorElement& d = delta_basis(kk.second);
        for (auto& [dk, dc] : d.terms())
            r.add_term({kk.first, dk.first, dk.second}, c * dc);
    }
    return r;
}

} // namespace detail

struct HopfReport {
    bool coassoc = false;
    bool counit_left = false;
    bool counit_right = false;
    bool antipode_left = false;
    bool antipode_right = false;
    bool s_square = false;
    bool all() const {
        return coassoc && counit_left && counit_right && antipode_left && antipode_right &&
               s_square;
    }
};

inline HopfReport hopf_axiom_check(const AlgebraElement& x) {
    HopfReport rep;
    TensorElement dx = delta(x);

    rep.coassoc = detail::delta_on_left(dx) == detail::delta_on_right(dx);

    AlgebraElement eps_l, eps_r, anti_l, anti_r;
    for (auto& [kk, c] : dx.terms()) {
        auto& [b1, b2] = kk;
        if (b1.n == 0 && b1.m == 0) eps_l.add_term(b2, c); // eps(b1) = 1
        if (b2.n == 0 && b2.m == 0) eps_r.add_term(b1, c);
        anti_l += c * (antipode(AlgebraElement::monomial(b1, Scalar(1))) *
                       AlgebraElement::monomial(b2, Scalar(1)));
        anti_r += c * (AlgebraElement::monomial(b1, Scalar(1)) *
                       antipode(AlgebraElement::monomial(b2, Scalar(1))));
    }
    rep.counit_left = eps_l == x;
    rep.counit_right = eps_r == x;

    AlgebraElement eps_unit = counit(x) * AlgebraElement::unit();
    rep.antipode_left = anti_l == eps_unit;
    rep.antipode_right = anti_r == eps_unit;

    rep.s_square = antipode(adjoint(antipode(adjoint(x)))) == x;
    return rep;
}

struct CocancelReport {
    bool alpha_identity = false;
    bool gamma_identity = false;
    bool broken_weight_vanishes = true; // must come back false
    bool all() const { return alpha_identity && gamma_identity && !broken_weight_vanishes; }
};

// The two right-leg cancellation identities behind well-definedness of the
// l^2 weight pairing:
//   a (x) 1 = D(a)(1 (x) a*) + q^2 D(c*)(1 (x) c)
//   c (x) 1 = D(c)(1 (x) a*) -  q  D(a*)(1 (x) c)
// plus a control: weakening the q^2 weight to q must leave a residue.
inline CocancelReport cocancel_witness() {
    CocancelReport rep;
    auto one = BasisIndex{0, 0, 0};
    TensorElement one_astar = TensorElement::simple(one, gen_index(Gen::AStar));
    TensorElement one_c = TensorElement::simple(one, gen_index(Gen::C));

    TensorElement lhs_a = TensorElement::simple(gen_index(Gen::A), one);
    TensorElement rhs_a = delta(AlgebraElement::generator(Gen::A)) * one_astar +
                          Scalar::q_pow(2) * (delta(AlgebraElement::generator(Gen::CStar)) * one_c);
    rep.alpha_identity = lhs_a == rhs_a;

    TensorElement lhs_c = TensorElement::simple(gen_index(Gen::C), one);
    TensorElement rhs_c = delta(AlgebraElement::generator(Gen::C)) * one_astar -
                          Scalar::q_pow(1) * (delta(AlgebraElement::generator(Gen::AStar)) * one_c);
    rep.gamma_identity = lhs_c == rhs_c;

    TensorElement rhs_bad = delta(AlgebraElement::generator(Gen::A)) * one_astar +
                            Scalar::q_pow(1) * (delta(AlgebraElement::generator(Gen::CStar)) * one_c);
    rep.broken_weight_vanishes = lhs_a == rhs_bad;
    return rep;
}

} // namespace suq
