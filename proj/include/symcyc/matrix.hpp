#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace symcyc {

/// Dense row-major matrix over an exact scalar ring.
template <typename T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), d_(static_cast<size_t>(rows) * cols) {}

    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int r, int c) { return d_[static_cast<size_t>(r) * cols_ + c]; }
    const T& operator()(int r, int c) const { return d_[static_cast<size_t>(r) * cols_ + c]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        assert(a.cols_ == b.rows_);
        Matrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const T& bkj = b(k, j);
                    if (bkj == T(0)) continue;
                    r(i, j) += aik * bkj;
                }
            }
        return r;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        assert(static_cast<int>(v.size()) == cols_);
        std::vector<T> r(static_cast<size_t>(rows_), T(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                const T& a = (*this)(i, j);
                if (!(a == T(0)) && !(v[static_cast<size_t>(j)] == T(0)))
                    r[static_cast<size_t>(i)] += a * v[static_cast<size_t>(j)];
            }
        return r;
    }

    Matrix pow(unsigned long e) const {
        assert(rows_ == cols_);
        Matrix result = identity(rows_);
        Matrix base = *this;
        while (e) {
            if (e & 1) result = result * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return result;
    }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<T> d_;
};

}  // namespace symcyc
