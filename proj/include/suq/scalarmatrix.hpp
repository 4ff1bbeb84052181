#pragma once

// Dense matrices over the scalar field Q(u).

#include "scalar.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace suq {

class ScalarMatrix {
public:
    ScalarMatrix() = default;
    ScalarMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static ScalarMatrix identity(std::size_t n) {
        ScalarMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool is_zero() const {
        for (auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool operator==(const ScalarMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const ScalarMatrix& o) const { return !(*this == o); }

    friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("ScalarMatrix: shape mismatch");
        ScalarMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t l = 0; l < a.cols_; ++l) {
                if (a.at(i, l).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r.at(i, j) += a.at(i, l) * b.at(l, j);
            }
        return r;
    }

    friend ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("ScalarMatrix: shape mismatch");
        ScalarMatrix r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
        return r;
    }

    friend ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("ScalarMatrix: shape mismatch");
        ScalarMatrix r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
        return r;
    }

    friend ScalarMatrix operator*(const Scalar& c, const ScalarMatrix& m) {
        ScalarMatrix r = m;
        for (auto& x : r.e_) x = c * x;
        return r;
    }

    ScalarMatrix transpose() const {
        ScalarMatrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> e_;
};

} // namespace suq
