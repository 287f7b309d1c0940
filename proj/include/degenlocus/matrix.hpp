#ifndef DEGENLOCUS_MATRIX_HPP
#define DEGENLOCUS_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "degenlocus/multipoly.hpp"
#include "degenlocus/rational.hpp"

namespace degenlocus {

// Dense matrix with exact entries (GaussianRational or MultiPoly).
template <class T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(size_t rows, size_t cols, T fill = T()) : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        a.require_same_shape(b);
        Mat r(a.rows_, a.cols_);
        for (size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] + b.a_[k];
        return r;
    }

    friend Mat operator-(const Mat& a, const Mat& b) {
        a.require_same_shape(b);
        Mat r(a.rows_, a.cols_);
        for (size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] - b.a_[k];
        return r;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Mat: dimension mismatch in product");
        Mat r(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                for (size_t j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + aik * b(k, j);
            }
        return r;
    }

    Mat scaled(const T& c) const {
        Mat r(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * c;
        return r;
    }

    Mat pow(unsigned e) const {
        if (!is_square()) throw std::invalid_argument("Mat: pow of non-square matrix");
        Mat r = identity(rows_);
        Mat base = *this;
        while (e) {
            if (e & 1) r = r * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return r;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    void swap_rows(size_t i, size_t j) {
        for (size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }

private:
    void require_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat: shape mismatch");
    }

    size_t rows_, cols_;
    std::vector<T> a_;
};

using QMat = Mat<GaussianRational>;   // concrete exact matrix
using PMat = Mat<MultiPoly>;          // symbolic exact matrix

inline QMat conj_transpose(const QMat& m) {
    QMat r(m.cols(), m.rows());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) r(j, i) = m(i, j).conj();
    return r;
}

inline GaussianRational trace(const QMat& m) {
    GaussianRational t;
    for (size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

inline MultiPoly trace(const PMat& m) {
    if (m.rows() == 0) return MultiPoly();
    MultiPoly t = MultiPoly::zero(m(0, 0).vars());
    for (size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

// Lifts a concrete matrix to a symbolic one with constant entries.
inline PMat lift(const QMat& m, const MultiPoly::VarList& vars) {
    PMat r(m.rows(), m.cols(), MultiPoly::zero(vars));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) r(i, j) = MultiPoly::constant(vars, m(i, j));
    return r;
}

}  // namespace degenlocus

#endif
