#pragma once

#include "symhodge/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace symhodge {

using VecQ = std::vector<Rational>;

/// Dense exact-rational matrix. Elimination uses first-nonzero pivoting
/// (no magnitude heuristics), so every derived object — RREF, rank,
/// nullspace basis, particular solutions — is deterministic.
class Matrix {
public:
    Matrix() = default;

    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols)
    {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("negative matrix shape");
    }

    static Matrix identity(int n)
    {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_zero() const
    {
        for (const auto& x : a_)
            if (x != 0)
                return false;
        return true;
    }

    bool is_symmetric() const
    {
        if (rows_ != cols_)
            return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if (at(i, j) != at(j, i))
                    return false;
        return true;
    }

    Matrix transposed() const
    {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                t.at(j, i) = at(i, j);
        return t;
    }

    Matrix& operator+=(const Matrix& b)
    {
        check_same_shape(b);
        for (std::size_t i = 0; i < a_.size(); ++i)
            a_[i] += b.a_[i];
        return *this;
    }

    Matrix& operator-=(const Matrix& b)
    {
        check_same_shape(b);
        for (std::size_t i = 0; i < a_.size(); ++i)
            a_[i] -= b.a_[i];
        return *this;
    }

    Matrix& operator*=(const Rational& s)
    {
        for (auto& x : a_)
            x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
    friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Rational& aik = a.at(i, k);
                if (aik == 0)
                    continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const Rational& bkj = b.at(k, j);
                    if (bkj != 0)
                        c.at(i, j) += aik * bkj;
                }
            }
        return c;
    }

    friend VecQ operator*(const Matrix& a, const VecQ& v)
    {
        if (static_cast<int>(v.size()) != a.cols_)
            throw std::invalid_argument("matrix-vector shape mismatch");
        VecQ out(a.rows_, Rational(0));
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j)
                if (a.at(i, j) != 0)
                    out[i] += a.at(i, j) * v[j];
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    void check_same_shape(const Matrix& b) const
    {
        if (rows_ != b.rows_ || cols_ != b.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    int rows_ = 0;
    int cols_ = 0;
    VecQ a_;
};

inline Matrix hstack(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows())
        throw std::invalid_argument("hstack: row mismatch");
    Matrix c(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j)
            c.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j)
            c.at(i, a.cols() + j) = b.at(i, j);
    }
    return c;
}

inline Matrix vstack(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.cols())
        throw std::invalid_argument("vstack: column mismatch");
    Matrix c(a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            c.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            c.at(a.rows() + i, j) = b.at(i, j);
    return c;
}

inline Matrix from_columns(int rows, const std::vector<VecQ>& cols)
{
    Matrix m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j) {
        if (static_cast<int>(cols[j].size()) != rows)
            throw std::invalid_argument("from_columns: column length mismatch");
        for (int i = 0; i < rows; ++i)
            m.at(i, j) = cols[j][i];
    }
    return m;
}

inline VecQ column(const Matrix& m, int j)
{
    VecQ v(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        v[i] = m.at(i, j);
    return v;
}

struct Rref {
    Matrix r;
    std::vector<int> pivot_cols;
};

inline Rref rref(Matrix m)
{
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m.at(i, col) != 0) {
                p = i;
                break;
            }
        if (p < 0)
            continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j)
                std::swap(m.at(p, j), m.at(row, j));
        const Rational inv = Rational(1) / m.at(row, col);
        for (int j = col; j < m.cols(); ++j)
            m.at(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0)
                continue;
            const Rational f = m.at(i, col);
            for (int j = col; j < m.cols(); ++j)
                m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

inline int rank(const Matrix& m) { return static_cast<int>(rref(m).pivot_cols.size()); }

/// Canonical RREF nullspace basis, one vector per free column, in
/// ascending free-column order.
inline std::vector<VecQ> nullspace(const Matrix& m)
{
    const Rref rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : rr.pivot_cols)
        is_pivot[c] = true;
    std::vector<VecQ> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        VecQ v(m.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t pi = 0; pi < rr.pivot_cols.size(); ++pi)
            v[rr.pivot_cols[pi]] = -rr.r.at(static_cast<int>(pi), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Particular solution of A x = b, or nullopt when inconsistent. Free
/// variables are set to zero, so the result is deterministic.
inline std::optional<VecQ> solve(const Matrix& a, const VecQ& b)
{
    if (static_cast<int>(b.size()) != a.rows())
        throw std::invalid_argument("solve: rhs length mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j)
            aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    const Rref rr = rref(std::move(aug));
    for (int c : rr.pivot_cols)
        if (c == a.cols())
            return std::nullopt;
    VecQ x(a.cols(), Rational(0));
    for (std::size_t pi = 0; pi < rr.pivot_cols.size(); ++pi)
        x[rr.pivot_cols[pi]] = rr.r.at(static_cast<int>(pi), a.cols());
    return x;
}

/// Indices of the pivot columns of m: a deterministic choice of columns
/// whose span is the column space.
inline std::vector<int> image_pivot_columns(const Matrix& m) { return rref(m).pivot_cols; }

inline std::vector<VecQ> image_basis(const Matrix& m)
{
    std::vector<VecQ> basis;
    for (int c : image_pivot_columns(m))
        basis.push_back(column(m, c));
    return basis;
}

inline std::optional<Matrix> inverse(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse: matrix not square");
    const int n = m.rows();
    const Rref rr = rref(hstack(m, Matrix::identity(n)));
    if (static_cast<int>(rr.pivot_cols.size()) != n || (n > 0 && rr.pivot_cols.back() >= n))
        return std::nullopt;
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv.at(i, j) = rr.r.at(i, n + j);
    return inv;
}

inline Rational determinant(Matrix m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant: matrix not square");
    const int n = m.rows();
    Rational det(1);
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int i = col; i < n; ++i)
            if (m.at(i, col) != 0) {
                p = i;
                break;
            }
        if (p < 0)
            return Rational(0);
        if (p != col) {
            for (int j = 0; j < n; ++j)
                std::swap(m.at(p, j), m.at(col, j));
            det = -det;
        }
        det *= m.at(col, col);
        const Rational inv = Rational(1) / m.at(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (m.at(i, col) == 0)
                continue;
            const Rational f = m.at(i, col) * inv;
            for (int j = col; j < n; ++j)
                m.at(i, j) -= f * m.at(col, j);
        }
    }
    return det;
}

/// Exact positive-semidefinite test for a symmetric matrix via symmetric
/// elimination: a zero pivot must have an all-zero row, and every pivot
/// must be nonnegative.
inline bool is_positive_semidefinite(Matrix m)
{
    if (!m.is_symmetric())
        return false;
    const int n = m.rows();
    for (int k = 0; k < n; ++k) {
        if (m.at(k, k) < 0)
            return false;
        if (m.at(k, k) == 0) {
            for (int j = k; j < n; ++j)
                if (m.at(k, j) != 0)
                    return false;
            continue;
        }
        const Rational inv = Rational(1) / m.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (m.at(i, k) == 0)
                continue;
            const Rational f = m.at(i, k) * inv;
            for (int j = k; j < n; ++j)
                m.at(i, j) -= f * m.at(k, j);
        }
    }
    return true;
}

/// Sylvester's criterion: symmetric with all leading principal minors > 0.
inline bool is_positive_definite(const Matrix& m)
{
    if (!m.is_symmetric())
        return false;
    for (int k = 1; k <= m.rows(); ++k) {
        Matrix lead(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                lead.at(i, j) = m.at(i, j);
        if (determinant(std::move(lead)) <= 0)
            return false;
    }
    return true;
}

inline Rational dot(const VecQ& a, const VecQ& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dot: length mismatch");
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

inline bool vec_is_zero(const VecQ& v)
{
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

} // namespace symhodge
