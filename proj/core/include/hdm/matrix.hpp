#pragma once

#include "hdm/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hdm {

struct SingularMatrix : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, const T& fill = T()) : r_(r), c_(c), a_(r * c, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        r_ = rows.size();
        c_ = r_ ? rows.begin()->size() : 0;
        a_.reserve(r_ * c_);
        for (auto& row : rows) {
            if (row.size() != c_) throw std::invalid_argument("ragged matrix literal");
            for (auto& x : row) a_.push_back(x);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n, T(0));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool empty() const { return r_ == 0 || c_ == 0; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    Matrix transpose() const {
        Matrix t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix submatrix(const std::vector<int>& ri, const std::vector<int>& ci) const {
        Matrix s(ri.size(), ci.size());
        for (std::size_t i = 0; i < ri.size(); ++i)
            for (std::size_t j = 0; j < ci.size(); ++j) s(i, j) = (*this)(ri[i], ci[j]);
        return s;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_same(a, b);
        Matrix s = a;
        for (std::size_t k = 0; k < s.a_.size(); ++k) s.a_[k] += b.a_[k];
        return s;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check_same(a, b);
        Matrix s = a;
        for (std::size_t k = 0; k < s.a_.size(); ++k) s.a_[k] -= b.a_[k];
        return s;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix p(a.r_, b.c_, T(0));
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                const T& x = a(i, k);
                if (x == T(0)) continue;
                for (std::size_t j = 0; j < b.c_; ++j) p(i, j) += x * b(k, j);
            }
        return p;
    }
    friend Matrix operator*(const T& s, const Matrix& a) {
        Matrix p = a;
        for (auto& x : p.a_) x = s * x;
        return p;
    }

private:
    static void check_same(const Matrix& a, const Matrix& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t r_ = 0, c_ = 0;
    std::vector<T> a_;
};

using QMatrix = Matrix<Q>;

// Fraction-free elimination; `exact_div(a, b)` must return a/b when b | a.
template <class T, class Div>
T det_bareiss(Matrix<T> m, Div exact_div) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    if (n == 0) return T(1);
    T prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == T(0)) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == T(0)) ++p;
            if (p == n) return T(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = exact_div(t, prev);
            }
            m(i, k) = T(0);
        }
        prev = m(k, k);
    }
    T d = m(n - 1, n - 1);
    return sign < 0 ? T(-d) : d;
}

Q det(const QMatrix& m);
std::size_t rank(const QMatrix& m);
QMatrix inverse(const QMatrix& m);
// Solves A X = B.
QMatrix solve(const QMatrix& a, const QMatrix& b);
QMatrix parse_qmatrix_rows(const std::vector<std::vector<std::string>>& rows);

}  // namespace hdm
