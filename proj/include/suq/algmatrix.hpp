#pragma once

// Matrices with entries in the algebra, plus the 2x2 defining matrix
// [[a, -q c*], [c, a*]] whose unitarity encodes all six relations at once.

#include "algebra.hpp"

#include <vector>

namespace suq {

class AlgMatrix {
public:
    AlgMatrix() = default;
    AlgMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static AlgMatrix identity(std::size_t n) {
        AlgMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = AlgebraElement::unit();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    AlgebraElement& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const AlgebraElement& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const AlgMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const AlgMatrix& o) const { return !(*this == o); }

    friend AlgMatrix operator*(const AlgMatrix& a, const AlgMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("AlgMatrix: shape mismatch");
        AlgMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t l = 0; l < a.cols_; ++l) {
                if (a.at(i, l).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r.at(i, j) += a.at(i, l) * b.at(l, j);
            }
        return r;
    }

    friend AlgMatrix operator+(const AlgMatrix& a, const AlgMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("AlgMatrix: shape mismatch");
        AlgMatrix r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
        return r;
    }

    friend AlgMatrix operator-(const AlgMatrix& a, const AlgMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("AlgMatrix: shape mismatch");
        AlgMatrix r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
        return r;
    }

    friend AlgMatrix operator*(const Scalar& c, const AlgMatrix& m) {
        AlgMatrix r = m;
        for (auto& x : r.e_) x = c * x;
        return r;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<AlgebraElement> e_;
};

// conjugate transpose over the *-algebra
inline AlgMatrix adjoint_transpose(const AlgMatrix& m) {
    AlgMatrix r(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(j, i) = adjoint(m.at(i, j));
    return r;
}

inline AlgMatrix fundamental_matrix() {
    AlgMatrix f(2, 2);
    f.at(0, 0) = AlgebraElement::generator(Gen::A);
    f.at(0, 1) = -Scalar::q_pow(1) * AlgebraElement::generator(Gen::CStar);
    f.at(1, 0) = AlgebraElement::generator(Gen::C);
    f.at(1, 1) = AlgebraElement::generator(Gen::AStar);
    return f;
}

// both products F F* and F* F must rewrite to the identity matrix
inline bool check_matrix_unitary(const AlgMatrix& f) {
    if (f.rows() != f.cols()) return false;
    AlgMatrix fs = adjoint_transpose(f);
    AlgMatrix id = AlgMatrix::identity(f.rows());
    return f * fs == id && fs * f == id;
}

inline bool check_fundamental_unitary() {
    return check_matrix_unitary(fundamental_matrix());
}

} // namespace suq
