/**
 * @file matrix.hpp
 * @brief Dense exact matrices and the elimination routines built on them.
 *
 * Matrices act on column vectors: a linear map V -> W is a dim(W) x dim(V)
 * matrix whose column j is the image of the j-th basis vector of V.
 *
 * Tensor convention (used everywhere in the library): the basis vector
 * e_i (x) e_j of V (x) W sits at flat index i * dim(W) + j. kron() follows it.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "hopfint/errors.hpp"
#include "hopfint/scalar.hpp"

namespace hopfint {

using Vector = std::vector<Scalar>;

inline Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

inline Vector unit_vector(const Field& f, std::size_t n, std::size_t i) {
    Vector v = zero_vector(f, n);
    v.at(i) = Scalar::one(f);
    return v;
}

inline bool is_zero(std::span<const Scalar> v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

class Matrix {
public:
    Matrix() : Matrix(Field::rationals(), 0, 0) {}
    Matrix(const Field& f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

    static Matrix identity(const Field& f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
        return m;
    }

    static Matrix from_rows(const Field& f, const std::vector<Vector>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r ? rows.front().size() : 0;
        Matrix m(f, r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw invalid_input("ragged rows");
            for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
        }
        return m;
    }

    static Matrix from_columns(const Field& f, std::size_t rows, const std::vector<Vector>& cols) {
        Matrix m(f, rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
        return m;
    }

    /// Integer entries, row-major; convenient in tests.
    static Matrix from_ints(const Field& f, std::size_t rows, std::size_t cols,
                            std::initializer_list<std::int64_t> values) {
        if (values.size() != rows * cols) throw invalid_input("entry count does not match shape");
        Matrix m(f, rows, cols);
        std::size_t k = 0;
        for (auto v : values) m.data_[k++] = Scalar::from_int(f, v);
        return m;
    }

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void set(std::size_t r, std::size_t c, const Scalar& s) {
        if (!(s.field() == field_)) throw invalid_input("entry field differs from matrix field");
        data_.at(r * cols_ + c) = s;
    }

    Vector column(std::size_t j) const {
        Vector v;
        v.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
        return v;
    }
    Vector row(std::size_t i) const {
        return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                      data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }
    void set_column(std::size_t j, std::span<const Scalar> v) {
        if (v.size() != rows_) throw invalid_input("column length mismatch");
        for (std::size_t i = 0; i < rows_; ++i) set(i, j, v[i]);
    }

    bool is_zero() const { return hopfint::is_zero(data_); }
    bool is_square() const { return rows_ == cols_; }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix& operator+=(const Matrix& o) {
        same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    Matrix& operator*=(const Scalar& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
    friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (!(a.field_ == b.field_)) throw invalid_input("mixed fields in matrix product");
        if (a.cols_ != b.rows_) throw invalid_input("shape mismatch in matrix product");
        Matrix c(a.field_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Scalar& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const Scalar& bkj = b(k, j);
                    if (!bkj.is_zero()) add_product(c(i, j), aik, bkj);
                }
            }
        return c;
    }

    friend Vector operator*(const Matrix& a, std::span<const Scalar> v) {
        if (a.cols_ != v.size()) throw invalid_input("shape mismatch in matrix-vector product");
        Vector out = zero_vector(a.field_, a.rows_);
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (v[k].is_zero()) continue;
            for (std::size_t i = 0; i < a.rows_; ++i)
                if (!a(i, k).is_zero()) add_product(out[i], a(i, k), v[k]);
        }
        return out;
    }
    friend Vector operator*(const Matrix& a, const Vector& v) { return a * std::span<const Scalar>(v); }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    const std::vector<Scalar>& entries() const { return data_; }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        os << '[';
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i ? ", [" : "[");
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
            os << ']';
        }
        return os << ']';
    }

private:
    void same_shape(const Matrix& o) const {
        if (!(field_ == o.field_)) throw invalid_input("mixed fields");
        if (rows_ != o.rows_ || cols_ != o.cols_) throw invalid_input("shape mismatch");
    }

    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Reduced row-echelon form by exact Gauss-Jordan elimination.
inline RrefResult rref(Matrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    for (const auto& s : m.entries())
        if (!(s.field() == m.field())) throw invalid_input("mixed field descriptors in matrix");
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
        const Scalar inv = m(r, c).inverse();
        for (std::size_t j = c; j < cols; ++j)
            if (!m(r, j).is_zero()) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Scalar factor = m(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!m(r, j).is_zero()) m(i, j) -= factor * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots), r};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// Basis of the right nullspace {v : m v = 0}, one vector per free column.
inline std::vector<Vector> kernel_basis(const Matrix& m) {
    const auto [red, pivots, rk] = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vector v = unit_vector(m.field(), cols, free);
        for (std::size_t i = 0; i < rk; ++i)
            if (!red(i, free).is_zero()) v[pivots[i]] = -red(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// One solution of m x = b, or nullopt when the system is inconsistent.
inline std::optional<Vector> solve_linear(const Matrix& m, std::span<const Scalar> b) {
    if (b.size() != m.rows()) throw invalid_input("right-hand side length does not match row count");
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug.set(i, m.cols(), b[i]);
    }
    const auto [red, pivots, rk] = rref(std::move(aug));
    if (rk > 0 && pivots[rk - 1] == m.cols()) return std::nullopt;
    Vector x = zero_vector(m.field(), m.cols());
    for (std::size_t i = 0; i < rk; ++i) x[pivots[i]] = red(i, m.cols());
    return x;
}

/// Solves m X = b column by column; nullopt if any column is inconsistent.
inline std::optional<Matrix> solve_linear(const Matrix& m, const Matrix& b) {
    if (b.rows() != m.rows()) throw invalid_input("right-hand side row count mismatch");
    Matrix aug(m.field(), m.rows(), m.cols() + b.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug.set(i, m.cols() + j, b(i, j));
    }
    const auto [red, pivots, rk] = rref(std::move(aug));
    if (rk > 0 && pivots[rk - 1] >= m.cols()) return std::nullopt;
    Matrix x(m.field(), m.cols(), b.cols());
    for (std::size_t i = 0; i < rk; ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[i], j) = red(i, m.cols() + j);
    return x;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) return std::nullopt;
    if (rank(m) != m.rows()) return std::nullopt;
    return solve_linear(m, Matrix::identity(m.field(), m.rows()));
}

inline Matrix power(const Matrix& m, std::size_t k) {
    if (!m.is_square()) throw invalid_input("power of a non-square matrix");
    Matrix acc = Matrix::identity(m.field(), m.rows());
    Matrix base = m;
    while (k) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return acc;
}

/// Kronecker product; row/column (i, j) of the factors lands at i * dim_b + j.
inline Matrix kron(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw invalid_input("mixed fields in kron");
    Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar& aij = a(i, j);
            if (aij.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

inline Vector kron(std::span<const Scalar> v, std::span<const Scalar> w) {
    if (v.empty() || w.empty()) return {};
    const Field f = v.front().field();
    Vector out = zero_vector(f, v.size() * w.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < w.size(); ++j)
            if (!w[j].is_zero()) out[i * w.size() + j] = v[i] * w[j];
    }
    return out;
}

/// Coordinates of each column of `targets` in the basis given by the columns of
/// `basis`; nullopt if some column is outside the span.
inline std::optional<Matrix> coordinates(const Matrix& basis, const Matrix& targets) {
    return solve_linear(basis, targets);
}

} // namespace hopfint
