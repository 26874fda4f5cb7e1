#ifndef SIMPLAP_MATRIX_HPP
#define SIMPLAP_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "simplap/rational.hpp"

namespace simplap {

/// Dense row-major matrix over an exact or floating scalar.
template <typename T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_)
            throw std::invalid_argument("matrix product: inner dimensions differ");
        Matrix p(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T(0))
                    continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    p(i, j) += a * o(k, j);
            }
        return p;
    }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o, "sum");
        Matrix s = *this;
        for (std::size_t i = 0; i < data_.size(); ++i)
            s.data_[i] += o.data_[i];
        return s;
    }

    Matrix operator-(const Matrix& o) const {
        check_same_shape(o, "difference");
        Matrix s = *this;
        for (std::size_t i = 0; i < data_.size(); ++i)
            s.data_[i] -= o.data_[i];
        return s;
    }

    Matrix operator*(const T& scalar) const {
        Matrix s = *this;
        for (auto& x : s.data_)
            x *= scalar;
        return s;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != T(0))
                return false;
        return true;
    }

    /// Principal submatrix on the given (sorted or unsorted) index set.
    Matrix principal_submatrix(const std::vector<std::size_t>& idx) const {
        Matrix s(idx.size(), idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j)
                s(i, j) = (*this)(idx[i], idx[j]);
        return s;
    }

  private:
    void check_same_shape(const Matrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument(std::string("matrix ") + op + ": shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using RealMatrix = Matrix<double>;
using IntMatrix = Matrix<BigInt>;

template <typename T>
Matrix<double> to_real(const Matrix<T>& m) {
    Matrix<double> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = static_cast<double>(m(i, j));
    return r;
}

}  // namespace simplap

#endif  // SIMPLAP_MATRIX_HPP
