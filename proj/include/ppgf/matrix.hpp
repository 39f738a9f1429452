#pragma once

// Dense matrices over the polynomial ring, a validated skew-symmetric
// wrapper, and 1-based row/column index sets.

#include "ppgf/poly.hpp"

#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace ppgf {

template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, T init = T())
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, init) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions");
    }

    static Matrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
        Matrix m(static_cast<int>(rows.size()),
                 rows.size() ? static_cast<int>(rows.begin()->size()) : 0);
        int i = 0;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != m.cols_)
                throw std::invalid_argument("ragged matrix literal");
            int j = 0;
            for (const auto& v : row) m.at(i, j++) = v;
            ++i;
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& at(int i, int j) {
        check(i, j);
        return data_[static_cast<size_t>(i) * cols_ + j];
    }
    const T& at(int i, int j) const {
        check(i, j);
        return data_[static_cast<size_t>(i) * cols_ + j];
    }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    /// Submatrix on 0-based row indices ri and column indices ci.
    Matrix submatrix(const std::vector<int>& ri, const std::vector<int>& ci) const {
        Matrix m(static_cast<int>(ri.size()), static_cast<int>(ci.size()));
        for (size_t a = 0; a < ri.size(); ++a)
            for (size_t b = 0; b < ci.size(); ++b) m.at(static_cast<int>(a), static_cast<int>(b)) = at(ri[a], ci[b]);
        return m;
    }

    template <class F>
    auto map(F f) const {
        Matrix<decltype(f(std::declval<T>()))> m(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m.at(i, j) = f(at(i, j));
        return m;
    }

private:
    void check(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw std::out_of_range("matrix index out of range");
    }
    int rows_, cols_;
    std::vector<T> data_;
};

using PolyMatrix = Matrix<Poly>;

/// Strictly increasing 1-based indices within [1, n].
class IndexSet {
public:
    IndexSet() = default;
    IndexSet(std::vector<int> members, int n) : members_(std::move(members)) {
        for (size_t i = 0; i < members_.size(); ++i) {
            if (members_[i] < 1 || members_[i] > n)
                throw std::out_of_range("index set member out of [1, n]");
            if (i > 0 && members_[i] <= members_[i - 1])
                throw std::invalid_argument("index set not strictly increasing");
        }
    }

    const std::vector<int>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool contains(int v) const {
        for (int m : members_) if (m == v) return true;
        return false;
    }

    IndexSet complement(int n) const {
        std::vector<int> out;
        for (int v = 1; v <= n; ++v)
            if (!contains(v)) out.push_back(v);
        return IndexSet(out, n);
    }

    /// 0-based copy, for use with Matrix::submatrix.
    std::vector<int> zero_based() const {
        std::vector<int> out;
        out.reserve(members_.size());
        for (int m : members_) out.push_back(m - 1);
        return out;
    }

private:
    std::vector<int> members_;
};

/// Square skew-symmetric matrix; a[i][j] = -a[j][i] and zero diagonal are
/// validated at construction.
class SkewMatrix {
public:
    SkewMatrix() = default;
    explicit SkewMatrix(PolyMatrix m) : m_(std::move(m)) {
        if (m_.rows() != m_.cols()) throw std::invalid_argument("skew matrix must be square");
        for (int i = 0; i < m_.rows(); ++i) {
            if (!m_.at(i, i).is_zero())
                throw std::invalid_argument("skew matrix has nonzero diagonal");
            for (int j = i + 1; j < m_.cols(); ++j)
                if (m_.at(i, j) != -m_.at(j, i))
                    throw std::invalid_argument("matrix is not skew-symmetric");
        }
    }

    /// Builds from the strict upper triangle: f(i, j) for 1-based i < j.
    static SkewMatrix from_upper(int n, const std::function<Poly(int, int)>& f) {
        PolyMatrix m(n, n);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                Poly v = f(i, j);
                m.at(i - 1, j - 1) = v;
                m.at(j - 1, i - 1) = -v;
            }
        return SkewMatrix(std::move(m));
    }

    int size() const { return m_.rows(); }
    const Poly& at(int i, int j) const { return m_.at(i, j); }
    const PolyMatrix& matrix() const { return m_; }

    /// Restriction to the rows and columns of a 1-based index set.
    SkewMatrix restrict(const IndexSet& idx) const {
        auto zi = idx.zero_based();
        SkewMatrix out;
        out.m_ = m_.submatrix(zi, zi);
        return out;
    }

    /// Restriction to 0-based indices (assumed sorted).
    SkewMatrix restrict0(const std::vector<int>& idx) const {
        SkewMatrix out;
        out.m_ = m_.submatrix(idx, idx);
        return out;
    }

    SkewMatrix substitute(const std::map<Var, Poly>& bindings) const {
        SkewMatrix out;
        out.m_ = m_.map([&](const Poly& p) { return p.substitute(bindings); });
        return out;
    }

    bool operator==(const SkewMatrix& o) const { return m_ == o.m_; }

private:
    PolyMatrix m_;
};

}  // namespace ppgf
