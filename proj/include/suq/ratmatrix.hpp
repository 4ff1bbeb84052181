#pragma once

// Dense matrices over the exact rationals with reduced row echelon form,
// rank, nullspace bases, and inverses. Used wherever a linear question is
// decided exactly at a fixed rational parameter value: intertwiner spaces,
// commutant dimensions, equivalence of matrix systems.

#include "rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace suq {

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Rational(0)) {}

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool is_zero() const {
        for (auto& x : e_)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const RatMatrix& o) const { return !(*this == o); }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("RatMatrix: shape mismatch");
        RatMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t l = 0; l < a.cols_; ++l) {
                if (a.at(i, l) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, l) * b.at(l, j);
            }
        return r;
    }

    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("RatMatrix: shape mismatch");
        RatMatrix r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
        return r;
    }

    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("RatMatrix: shape mismatch");
        RatMatrix r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
        return r;
    }

    friend RatMatrix operator*(const Rational& c, const RatMatrix& m) {
        RatMatrix r = m;
        for (auto& x : r.e_) x *= c;
        return r;
    }

    RatMatrix transpose() const {
        RatMatrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> e_;
};

// In-place reduced row echelon form; returns the pivot column indices.
// Exact arithmetic: the first nonzero entry in each column is the pivot.
inline std::vector<std::size_t> rref_in_place(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
        Rational inv = Rational(1) / m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rational f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(RatMatrix m) { return rref_in_place(m).size(); }

// Basis of the right kernel {x : m x = 0}, one vector per free column.
inline std::vector<std::vector<Rational>> nullspace(RatMatrix m) {
    std::vector<std::size_t> pivots = rref_in_place(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free_col] = Rational(1);
        for (std::size_t p = 0; p < pivots.size(); ++p) v[pivots[p]] = -m.at(p, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline bool is_invertible(const RatMatrix& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

// Inverse via Gauss-Jordan on the augmented matrix; throws if singular.
inline RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
    std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Rational(1);
    }
    std::vector<std::size_t> pivots = rref_in_place(aug);
    if (pivots.size() != n || pivots.back() != n - 1)
        throw std::domain_error("inverse: matrix is singular");
    RatMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
    return r;
}

} // namespace suq
