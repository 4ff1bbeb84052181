#pragma once

// The classical warm-up: irreducible integer-matrix representations of the
// sl2 triple {e, f, h} on the basis w_0 .. w_n, with
//
//   e w_k = -(n-k+1) w_{k-1}   (w_{-1} = 0)
//   f w_k = (k+1) w_{k+1}      (w_{n+1} = 0)
//   h w_k = (n-2k) w_k
//
// and the bracket convention [h,e] = 2e, [f,h] = 2f, [f,e] = h.  The sign
// convention (e lowers the index with a negative coefficient, [f,e] rather
// than [e,f]) is kept exactly as stated; every check below is against these
// displays.  The diagonal of h is n-2k: it is the unique diagonal closing
// the brackets with the e/f actions above.

#include "ratmatrix.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace suq {

// Dense matrix with integer entries; everything here is exact.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, 0) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    long long& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    long long at(std::size_t i, std::size_t j) const {
        return e_[i * cols_ + j];
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("IntMatrix: shape mismatch");
        IntMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t l = 0; l < a.cols_; ++l) {
                if (a.at(i, l) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r.at(i, j) += a.at(i, l) * b.at(l, j);
            }
        return r;
    }

    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("IntMatrix: shape mismatch");
        IntMatrix r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
        return r;
    }

    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("IntMatrix: shape mismatch");
        IntMatrix r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
        return r;
    }

    friend IntMatrix operator*(long long c, const IntMatrix& m) {
        IntMatrix r = m;
        for (auto& x : r.e_) x *= c;
        return r;
    }

    long long trace() const {
        long long t = 0;
        for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
        return t;
    }

    RatMatrix to_rational() const {
        RatMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                r.at(i, j) = Rational(at(i, j));
        return r;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<long long> e_;
};

struct SL2Rep {
    long n = 0;
    IntMatrix e, f, h;
};

// The stated eigenvalue ladders of the composite operators on w_k.
inline long long sl2_fe_eigenvalue(long n, long k) {
    return -(n - k + 1) * k;
}
inline long long sl2_ef_eigenvalue(long n, long k) {
    return -(n - k) * (k + 1);
}

inline SL2Rep sl2_build(long n) {
    if (n < 0) throw std::invalid_argument("sl2_build: n must be nonnegative");
    auto d = static_cast<std::size_t>(n) + 1;
    SL2Rep r;
    r.n = n;
    r.e = IntMatrix(d, d);
    r.f = IntMatrix(d, d);
    r.h = IntMatrix(d, d);
    for (long k = 0; k <= n; ++k) {
        auto kk = static_cast<std::size_t>(k);
        if (k >= 1) r.e.at(kk - 1, kk) = -(n - k + 1);
        if (k + 1 <= n) r.f.at(kk + 1, kk) = k + 1;
        r.h.at(kk, kk) = n - 2 * k;
    }
    return r;
}

// Dimension of {X : Xe = eX, Xf = fX, Xh = hX}, by exact rational
// elimination on the stacked system.
inline std::size_t sl2_commutant_dim(const IntMatrix& e, const IntMatrix& f,
                                     const IntMatrix& h) {
    const std::size_t d = e.rows();
    RatMatrix sys(3 * d * d, d * d);
    const IntMatrix* gens[3] = {&e, &f, &h};
    for (std::size_t t = 0; t < 3; ++t) {
        const IntMatrix& g = *gens[t];
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                std::size_t row = t * d * d + i * d + j;
                for (std::size_t l = 0; l < d; ++l) {
                    sys.at(row, l * d + j) += Rational(g.at(i, l));
                    sys.at(row, i * d + l) -= Rational(g.at(l, j));
                }
            }
    }
    return nullspace(sys).size();
}

struct SL2Report {
    bool bracket_he = false;   // [h,e] = 2e
    bool bracket_fh = false;   // [f,h] = 2f
    bool bracket_fe = false;   // [f,e] = h
    bool trace_h_zero = false;
    bool fe_eigenvalues = false; // (fe) w_k = -(n-k+1)k w_k for every k
    bool ef_eigenvalues = false; // (ef) w_k = -(n-k)(k+1) w_k for every k
    bool weight_string = false;  // h diagonal is {n, n-2, ..., -n}, each once
    bool irreducible = false;    // commutant of {e,f,h} is scalars

    bool all() const {
        return bracket_he && bracket_fh && bracket_fe && trace_h_zero &&
               fe_eigenvalues && ef_eigenvalues && weight_string &&
               irreducible;
    }
};

inline SL2Report sl2_verify(long n) {
    SL2Rep r = sl2_build(n);
    const auto d = static_cast<std::size_t>(n) + 1;
    SL2Report rep;

    rep.bracket_he = (r.h * r.e - r.e * r.h) == 2 * r.e;
    rep.bracket_fh = (r.f * r.h - r.h * r.f) == 2 * r.f;
    rep.bracket_fe = (r.f * r.e - r.e * r.f) == r.h;
    rep.trace_h_zero = r.h.trace() == 0;

    IntMatrix fe_expect(d, d), ef_expect(d, d);
    for (long k = 0; k <= n; ++k) {
        auto kk = static_cast<std::size_t>(k);
        fe_expect.at(kk, kk) = sl2_fe_eigenvalue(n, k);
        ef_expect.at(kk, kk) = sl2_ef_eigenvalue(n, k);
    }
    rep.fe_eigenvalues = (r.f * r.e) == fe_expect;
    rep.ef_eigenvalues = (r.e * r.f) == ef_expect;

    rep.weight_string = true;
    for (long k = 0; k <= n; ++k) {
        auto kk = static_cast<std::size_t>(k);
        if (r.h.at(kk, kk) != n - 2 * k) rep.weight_string = false;
        for (std::size_t j = 0; j < d; ++j)
            if (j != kk && r.h.at(j, j) == r.h.at(kk, kk))
                rep.weight_string = false;
    }

    rep.irreducible = sl2_commutant_dim(r.e, r.f, r.h) == 1;
    return rep;
}

} // namespace suq
