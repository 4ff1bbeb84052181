#pragma once

// The *-algebra generated by a, c with the q-Weyl relations
//
//   a* a + c* c = 1        a a* + q^2 c* c = 1      c* c = c c*
//   a c  = q c a           a c* = q c* a
//
// Elements are kept in normal form: finite Q(u)-linear combinations of
// basis words  B(k,n,m) = a^k c*^n c^m  (a*^|k| when k < 0).  All products
// are rewritten into this basis eagerly, so equality is map equality.

#include "scalar.hpp"

#include <compare>
#include <map>
#include <mutex>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace suq {

enum class Gen { A, AStar, C, CStar };

struct BasisIndex {
    long k = 0;     // signed power of a (negative means a*)
    long n = 0;     // power of c*
    long m = 0;     // power of c
    auto operator<=>(const BasisIndex&) const = default;
};

inline BasisIndex gen_index(Gen g) {
    switch (g) {
        case Gen::A: return {1, 0, 0};
        case Gen::AStar: return {-1, 0, 0};
        case Gen::C: return {0, 0, 1};
        case Gen::CStar: return {0, 1, 0};
    }
    throw std::logic_error("gen_index: bad generator");
}

class AlgebraElement {
public:
    using TermMap = std::map<BasisIndex, Scalar>;

    AlgebraElement() = default;

    static AlgebraElement zero() { return {}; }
    static AlgebraElement unit() { return monomial({0, 0, 0}, Scalar(1)); }
    static AlgebraElement generator(Gen g) { return monomial(gen_index(g), Scalar(1)); }
    static AlgebraElement monomial(BasisIndex idx, Scalar c = Scalar(1)) {
        AlgebraElement x;
        x.add_term(idx, std::move(c));
        return x;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Scalar coeff(const BasisIndex& idx) const {
        auto it = terms_.find(idx);
        return it == terms_.end() ? Scalar() : it->second;
    }

    void add_term(const BasisIndex& idx, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(idx, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

    AlgebraElement operator-() const {
        AlgebraElement r;
        for (auto& [idx, c] : terms_) r.terms_.emplace(idx, -c);
        return r;
    }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        for (auto& [idx, c] : o.terms_) add_term(idx, c);
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& o) {
        for (auto& [idx, c] : o.terms_) add_term(idx, -c);
        return *this;
    }
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

    friend AlgebraElement operator*(const Scalar& c, const AlgebraElement& x) {
        AlgebraElement r;
        if (c.is_zero()) return r;
        for (auto& [idx, v] : x.terms_) r.terms_.emplace(idx, c * v);
        return r;
    }
    friend AlgebraElement operator*(const AlgebraElement& x, const Scalar& c) { return c * x; }

    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

private:
    TermMap terms_;
};

namespace detail {

// right multiplication by (c* c), i.e. (n, m) += (1, 1) on every term
inline AlgebraElement shift_nm(const AlgebraElement& x) {
    AlgebraElement r;
    for (auto& [idx, c] : x.terms()) r.add_term({idx.k, idx.n + 1, idx.m + 1}, c);
    return r;
}

// a^k a*^j in normal form (k, j >= 0):
//   a^k a*^j = a^(k-1) a*^(j-1) - q^(2j) [a^(k-1) a*^(j-1)] c* c
inline AlgebraElement contract_a_astar(long k, long j) {
    static std::map<std::pair<long, long>, AlgebraElement> memo;
    static std::mutex mx;
    if (k == 0 || j == 0) return AlgebraElement::monomial({k - j, 0, 0}, Scalar(1));
    {
        std::lock_guard lk(mx);
        if (auto it = memo.find({k, j}); it != memo.end()) return it->second;
    }
    AlgebraElement inner = contract_a_astar(k - 1, j - 1);
    AlgebraElement r = inner - Scalar::q_pow(2 * j) * shift_nm(inner);
    std::lock_guard lk(mx);
    return memo.try_emplace({k, j}, std::move(r)).first->second;
}

// a*^j a^k in normal form (j, k >= 0):
//   a*^j a^k = a*^(j-1) a^(k-1) - q^(-2(k-1)) [a*^(j-1) a^(k-1)] c* c
inline AlgebraElement contract_astar_a(long j, long k) {
    static std::map<std::pair<long, long>, AlgebraElement> memo;
    static std::mutex mx;
    if (k == 0 || j == 0) return AlgebraElement::monomial({k - j, 0, 0}, Scalar(1));
    {
        std::lock_guard lk(mx);
        if (auto it = memo.find({j, k}); it != memo.end()) return it->second;
    }
    AlgebraElement inner = contract_astar_a(j - 1, k - 1);
    AlgebraElement r = inner - Scalar::q_pow(-2 * (k - 1)) * shift_nm(inner);
    std::lock_guard lk(mx);
    return memo.try_emplace({j, k}, std::move(r)).first->second;
}

// product of two basis words, already in normal form
inline AlgebraElement mul_basis(const BasisIndex& x, const BasisIndex& y) {
    // commute y's a-block left through x's c-blocks: each crossing of one
    // a (resp. a*) with one c or c* costs q^-1 (resp. q)
    Scalar factor = Scalar::q_pow(-y.k * (x.n + x.m));
    long N = x.n + y.n, M = x.m + y.m;

    AlgebraElement alpha;
    if (x.k >= 0 && y.k <= 0 && x.k != 0 && y.k != 0)
        alpha = contract_a_astar(x.k, -y.k);
    else if (x.k <= 0 && y.k >= 0 && x.k != 0 && y.k != 0)
        alpha = contract_astar_a(-x.k, y.k);
    else
        alpha = AlgebraElement::monomial({x.k + y.k, 0, 0}, Scalar(1));

    AlgebraElement r;
    for (auto& [idx, c] : alpha.terms())
        r.add_term({idx.k, idx.n + N, idx.m + M}, c * factor);
    return r;
}

} // namespace detail

inline AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement r;
    for (auto& [ia, ca] : a.terms())
        for (auto& [ib, cb] : b.terms()) {
            Scalar c = ca * cb;
            AlgebraElement w = detail::mul_basis(ia, ib);
            for (auto& [idx, cw] : w.terms()) r.add_term(idx, c * cw);
        }
    return r;
}

enum class FoldOrder { left_to_right, right_to_left };

// reduce a generator word to normal form; both fold orders must agree
inline AlgebraElement normalize_word(std::span<const Gen> word, const Scalar& pre = Scalar(1),
                                     FoldOrder order = FoldOrder::left_to_right) {
    AlgebraElement acc = AlgebraElement::unit();
    if (order == FoldOrder::left_to_right) {
        for (Gen g : word) acc = acc * AlgebraElement::generator(g);
    } else {
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            acc = AlgebraElement::generator(*it) * acc;
    }
    return pre * acc;
}

// (a^k c*^n c^m)* = q^(k(n+m)) a^(-k) c*^m c^n; rational-in-q coefficients
// are fixed by complex conjugation
inline AlgebraElement adjoint(const AlgebraElement& x) {
    AlgebraElement r;
    for (auto& [idx, c] : x.terms())
        r.add_term({-idx.k, idx.m, idx.n}, c * Scalar::q_pow(idx.k * (idx.n + idx.m)));
    return r;
}

// --- rendering ------------------------------------------------------------

inline std::string render_word(const BasisIndex& idx) {
    std::ostringstream os;
    bool any = false;
    auto put = [&](const std::string& gen, long e) {
        if (e == 0) return;
        if (any) os << " ";
        os << gen;
        if (e > 1) os << "^" << e;
        any = true;
    };
    if (idx.k > 0) put("a", idx.k);
    if (idx.k < 0) put("a^*", -idx.k);
    put("c^*", idx.n);
    put("c", idx.m);
    if (!any) os << "1";
    return os.str();
}

// Canonical text form: "+/-"-joined terms "(scalar) * word" in (k,n,m)
// lexicographic order; polynomial coefficients are split into q-monomials
// so the output stays inside the expression grammar.
inline std::string render_element(const AlgebraElement& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [idx, c] : x.terms()) {
        auto lt = c.laurent_terms();
        std::vector<std::pair<Rational, long>> monos;
        if (lt) monos = *lt;
        else monos.emplace_back(Rational(0), 0); // placeholder, rendered as full fraction
        for (std::size_t i = 0; i < monos.size(); ++i) {
            std::string body;
            bool neg = false;
            if (lt) {
                auto& [a, ue] = monos[i];
                neg = a < 0;
                Rational mag = neg ? Rational(-a) : a;
                std::string qs = q_power_str(ue);
                if (mag == 1) body = qs; // empty for a bare +/-1 coefficient
                else if (qs.empty()) body = rat_str(mag);
                else body = rat_str(mag) + " " + qs;
            } else {
                body = render_scalar(c); // non-monomial denominator, rare
            }
            if (first) {
                if (neg) os << "-";
                first = false;
            } else {
                os << (neg ? " - " : " + ");
            }
            bool have_word = idx != BasisIndex{0, 0, 0};
            if (body.empty()) {
                os << (have_word ? render_word(idx) : std::string("1"));
            } else {
                os << "(" << body << ")";
                if (have_word) os << " * " << render_word(idx);
            }
            if (!lt) break;
        }
    }
    return os.str();
}

} // namespace suq
