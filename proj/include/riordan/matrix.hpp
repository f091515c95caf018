#pragma once

#include <utility>
#include <vector>

#include "riordan/errors.hpp"
#include "riordan/fraction.hpp"

namespace riordan {

// Dense square matrix of exact fractions.  Small fixed truncations only;
// everything downstream slices triangles or bands out of this.
class Matrix {
public:
    explicit Matrix(int size) : size_(size), a_(static_cast<std::size_t>(size) * size) {
        if (size <= 0) throw std::invalid_argument("matrix size must be positive");
    }

    static Matrix identity(int size) {
        Matrix m(size);
        for (int i = 0; i < size; ++i) m.at(i, i) = Frac(1);
        return m;
    }

    int size() const { return size_; }

    Frac& at(int r, int c) {
        check(r, c);
        return a_[static_cast<std::size_t>(r) * size_ + c];
    }
    const Frac& at(int r, int c) const {
        check(r, c);
        return a_[static_cast<std::size_t>(r) * size_ + c];
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.size_ != y.size_) throw std::invalid_argument("matrix size mismatch");
        Matrix r(x.size_);
        for (int i = 0; i < x.size_; ++i)
            for (int k = 0; k < x.size_; ++k) {
                const Frac& xik = x.at(i, k);
                if (xik.is_zero()) continue;
                for (int j = 0; j < x.size_; ++j) {
                    const Frac& ykj = y.at(k, j);
                    if (ykj.is_zero()) continue;
                    r.at(i, j) += xik * ykj;
                }
            }
        return r;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        if (x.size_ != y.size_) return false;
        for (std::size_t i = 0; i < x.a_.size(); ++i)
            if (!(x.a_[i] == y.a_[i])) return false;
        return true;
    }

    bool is_lower_triangular() const {
        for (int r = 0; r < size_; ++r)
            for (int c = r + 1; c < size_; ++c)
                if (!at(r, c).is_zero()) return false;
        return true;
    }

    bool is_identity() const { return *this == identity(size_); }

    // Inverse of a lower-triangular matrix by forward substitution.
    Matrix inverse_lower_triangular() const {
        for (int i = 0; i < size_; ++i)
            if (at(i, i).is_zero()) throw SingularMatrix();
        Matrix inv(size_);
        for (int j = 0; j < size_; ++j) {
            inv.at(j, j) = at(j, j).inverse();
            for (int i = j + 1; i < size_; ++i) {
                Frac acc;
                for (int k = j; k < i; ++k) {
                    if (at(i, k).is_zero() || inv.at(k, j).is_zero()) continue;
                    acc += at(i, k) * inv.at(k, j);
                }
                inv.at(i, j) = -acc / at(i, i);
            }
        }
        return inv;
    }

private:
    void check(int r, int c) const {
        if (r < 0 || c < 0 || r >= size_ || c >= size_) throw IndexOutOfRange("matrix index");
    }

    int size_;
    std::vector<Frac> a_;
};

// Lower-triangular matrix; construction rejects anything above the diagonal.
class LTMatrix {
public:
    explicit LTMatrix(Matrix m) : m_(std::move(m)) {
        if (!m_.is_lower_triangular())
            throw std::invalid_argument("matrix has entries above the diagonal");
    }
    static LTMatrix identity(int size) { return LTMatrix(Matrix::identity(size)); }

    int size() const { return m_.size(); }
    const Frac& at(int r, int c) const { return m_.at(r, c); }
    const Matrix& dense() const { return m_; }

    LTMatrix inverse() const { return LTMatrix(m_.inverse_lower_triangular()); }

    friend bool operator==(const LTMatrix& a, const LTMatrix& b) { return a.m_ == b.m_; }

private:
    Matrix m_;
};

// Production matrix: in general a full matrix; for the arrays in this
// library it is lower-Hessenberg with unit superdiagonal.
class ProductionMatrix {
public:
    explicit ProductionMatrix(Matrix m) : m_(std::move(m)) {}

    int size() const { return m_.size(); }
    const Frac& at(int r, int c) const { return m_.at(r, c); }
    Frac& at(int r, int c) { return m_.at(r, c); }
    const Matrix& dense() const { return m_; }

    friend bool operator==(const ProductionMatrix& a, const ProductionMatrix& b) {
        return a.m_ == b.m_;
    }

private:
    Matrix m_;
};

}  // namespace riordan
