#pragma once

// Tensor squares and cubes of the algebra, used for the comultiplication.
// Multiplication is slotwise; coefficients collect on shared index pairs.

#include "algebra.hpp"

#include <array>

namespace suq {

class TensorElement {
public:
    using Key = std::pair<BasisIndex, BasisIndex>;
    using TermMap = std::map<Key, Scalar>;

    TensorElement() = default;

    static TensorElement simple(const BasisIndex& l, const BasisIndex& r, Scalar c = Scalar(1)) {
        TensorElement t;
        t.add_term(l, r, std::move(c));
        return t;
    }
    static TensorElement simple(const AlgebraElement& l, const AlgebraElement& r) {
        TensorElement t;
        for (auto& [il, cl] : l.terms())
            for (auto& [ir, cr] : r.terms()) t.add_term(il, ir, cl * cr);
        return t;
    }
    static TensorElement unit() { return simple(BasisIndex{}, BasisIndex{}); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const BasisIndex& l, const BasisIndex& r, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(Key{l, r}, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const TensorElement& o) const { return !(*this == o); }

    TensorElement& operator+=(const TensorElement& o) {
        for (auto& [kk, c] : o.terms_) add_term(kk.first, kk.second, c);
        return *this;
    }
    TensorElement& operator-=(const TensorElement& o) {
        for (auto& [kk, c] : o.terms_) add_term(kk.first, kk.second, -c);
        return *this;
    }
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }

    friend TensorElement operator*(const Scalar& c, const TensorElement& t) {
        TensorElement r;
        for (auto& [kk, v] : t.terms_) r.add_term(kk.first, kk.second, c * v);
        return r;
    }

    friend TensorElement operator*(const TensorElement& a, const TensorElement& b) {
        TensorElement r;
        for (auto& [ka, ca] : a.terms_)
            for (auto& [kb, cb] : b.terms_) {
                Scalar c = ca * cb;
                AlgebraElement wl = detail::mul_basis(ka.first, kb.first);
                AlgebraElement wr = detail::mul_basis(ka.second, kb.second);
                for (auto& [il, cl] : wl.terms())
                    for (auto& [ir, cr] : wr.terms())
                        r.add_term(il, ir, c * cl * cr);
            }
        return r;
    }

    // slotwise adjoint (no leg swap)
    friend TensorElement star(const TensorElement& t) {
        TensorElement r;
        for (auto& [kk, c] : t.terms_) {
            auto l = adjoint(AlgebraElement::monomial(kk.first, Scalar(1)));
            auto rr = adjoint(AlgebraElement::monomial(kk.second, Scalar(1)));
            for (auto& [il, cl] : l.terms())
                for (auto& [ir, cr] : rr.terms()) r.add_term(il, ir, c * cl * cr);
        }
        return r;
    }

private:
    TermMap terms_;
};

class Tensor3Element {
public:
    using Key = std::array<BasisIndex, 3>;
    using TermMap = std::map<Key, Scalar>;

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Key& k, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool operator==(const Tensor3Element& o) const { return terms_ == o.terms_; }
    bool operator!=(const Tensor3Element& o) const { return !(*this == o); }

private:
    TermMap terms_;
};

inline std::string render_tensor(const TensorElement& t) {
    if (t.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [kk, c] : t.terms()) {
        std::string cs = render_scalar(c);
        if (!first) os << " + ";
        os << "(" << cs << ") * " << render_word(kk.first) << " (x) " << render_word(kk.second);
        first = false;
    }
    return os.str();
}

} // namespace suq
