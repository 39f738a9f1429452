#pragma once

// The combinatorial objects: restricted column-strict plane partitions
// (class parameters n, m), triangular shifted plane partitions, and monotone
// triangles, with validated constructors, deterministic enumeration, and the
// subset filters used by the identity checks.
//
// Enumeration order for plane partitions is ascending by row-reading word,
// then by number of rows, then by the row list itself; this reproduces the
// reference listings byte for byte.

#include "ppgf/numbers.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

namespace ppgf {

/// Class parameters: at most n columns, parts in column j at most n+m-j.
struct CsppClass {
    int n = 1;
    int m = 0;
    int levels() const { return n + m; }
};

inline constexpr int kEnumerationLevelGuard = 9;  // n+m beyond this refuses
inline constexpr int kTriangleSizeGuard = 7;
inline constexpr int kCubeLevelGuard = 4;

// ---------------------------------------------------------------------------
// Plane partitions
// ---------------------------------------------------------------------------

class PlanePartition {
public:
    PlanePartition() = default;
    explicit PlanePartition(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
        for (size_t i = 0; i < rows_.size(); ++i) {
            const auto& row = rows_[i];
            if (row.empty()) throw std::invalid_argument("empty row inside a plane partition");
            for (size_t j = 0; j < row.size(); ++j) {
                if (row[j] <= 0) throw std::invalid_argument("plane partition parts must be positive");
                if (j > 0 && row[j] > row[j - 1])
                    throw std::invalid_argument("row not weakly decreasing");
            }
            if (i > 0) {
                if (row.size() > rows_[i - 1].size())
                    throw std::invalid_argument("row lengths not weakly decreasing");
                for (size_t j = 0; j < row.size(); ++j)
                    if (row[j] > rows_[i - 1][j])
                        throw std::invalid_argument("column not weakly decreasing");
            }
        }
    }

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int row_count() const { return static_cast<int>(rows_.size()); }
    int column_count() const { return rows_.empty() ? 0 : static_cast<int>(rows_[0].size()); }

    /// Entry at 1-based (i, j); 0 outside the shape.
    int at(int i, int j) const {
        if (i < 1 || i > row_count()) return 0;
        const auto& row = rows_[static_cast<size_t>(i - 1)];
        if (j < 1 || j > static_cast<int>(row.size())) return 0;
        return row[static_cast<size_t>(j - 1)];
    }

    int row_length(int i) const {
        return i >= 1 && i <= row_count() ? static_cast<int>(rows_[static_cast<size_t>(i - 1)].size()) : 0;
    }

    int column_length(int j) const {
        int len = 0;
        while (at(len + 1, j) > 0) ++len;
        return len;
    }

    long weight() const {
        long w = 0;
        for (const auto& row : rows_)
            for (int v : row) w += v;
        return w;
    }

    std::vector<int> shape() const {
        std::vector<int> s;
        for (const auto& row : rows_) s.push_back(static_cast<int>(row.size()));
        return s;
    }

    std::vector<int> reading_word() const {
        std::vector<int> w;
        for (const auto& row : rows_) w.insert(w.end(), row.begin(), row.end());
        return w;
    }

    bool operator==(const PlanePartition& o) const { return rows_ == o.rows_; }
    bool operator<(const PlanePartition& o) const {
        auto wa = reading_word(), wb = o.reading_word();
        if (wa != wb) return wa < wb;
        if (row_count() != o.row_count()) return row_count() < o.row_count();
        return rows_ < o.rows_;
    }

private:
    std::vector<std::vector<int>> rows_;
};

/// Column-strictness plus the per-column part bound of the class.
inline bool is_cspp(const PlanePartition& p, const CsppClass& cls) {
    if (p.column_count() > cls.n) return false;
    for (int j = 1; j <= p.column_count(); ++j) {
        if (p.at(1, j) > cls.levels() - j) return false;
        for (int i = 2; p.at(i, j) > 0; ++i)
            if (p.at(i, j) >= p.at(i - 1, j)) return false;
    }
    return true;
}

/// All members of the class, in the documented deterministic order.
inline std::vector<PlanePartition> enumerate_cspp(const CsppClass& cls) {
    if (cls.n < 1 || cls.m < 0) throw std::invalid_argument("enumerate_cspp: need n >= 1, m >= 0");
    if (cls.levels() > kEnumerationLevelGuard)
        throw std::invalid_argument("enumerate_cspp: size guard exceeded");

    std::vector<PlanePartition> out;
    std::vector<std::vector<int>> rows;

    // Enumerate weakly decreasing rows below pointwise caps; the cap for row
    // i is the previous row minus one in each column (column-strictness) and
    // levels - j in column j.
    std::function<void()> emit = [&] { out.emplace_back(rows); };
    std::function<void(const std::vector<int>&)> extend = [&](const std::vector<int>& cap) {
        emit();
        std::vector<int> row;
        std::function<void(int)> build = [&](int j) {
            if (!row.empty()) {
                rows.push_back(row);
                std::vector<int> next_cap(row.size());
                for (size_t c = 0; c < row.size(); ++c) next_cap[c] = row[c] - 1;
                extend(next_cap);
                rows.pop_back();
            }
            if (j >= static_cast<int>(cap.size())) return;
            int hi = cap[static_cast<size_t>(j)];
            if (j > 0) hi = std::min(hi, row[static_cast<size_t>(j - 1)]);
            for (int v = 1; v <= hi; ++v) {
                row.push_back(v);
                build(j + 1);
                row.pop_back();
            }
        };
        build(0);
    };

    std::vector<int> top_cap(static_cast<size_t>(cls.n));
    for (int j = 1; j <= cls.n; ++j) top_cap[static_cast<size_t>(j - 1)] = cls.levels() - j;
    extend(top_cap);

    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Triangular shifted plane partitions
// ---------------------------------------------------------------------------

/// Shifted array b_{ij}, 1 <= i <= j <= n+m-1, of staircase shifted shape,
/// with max(n-i, 0) <= b_{ij} <= n and weak decrease along rows and columns.
/// The virtual boundary entries b_{i, n+m} = n-i and b_{0, j} = n are supplied
/// by at().
class ShiftedPP {
public:
    ShiftedPP() = default;
    ShiftedPP(CsppClass cls, std::vector<std::vector<int>> rows)
        : cls_(cls), rows_(std::move(rows)) {
        int side = cls_.levels() - 1;
        if (static_cast<int>(rows_.size()) != side)
            throw std::invalid_argument("shifted shape mismatch");
        for (int i = 1; i <= side; ++i) {
            if (static_cast<int>(rows_[static_cast<size_t>(i - 1)].size()) != side - i + 1)
                throw std::invalid_argument("shifted shape mismatch");
            for (int j = i; j <= side; ++j) {
                int v = entry(i, j);
                if (v < std::max(cls_.n - i, 0) || v > cls_.n)
                    throw std::invalid_argument("entry outside its bounds");
                if (j > i && entry(i, j) > entry(i, j - 1))
                    throw std::invalid_argument("row not weakly decreasing");
                if (i > 1 && j > i - 1 && entry(i, j) > entry(i - 1, j))
                    throw std::invalid_argument("column not weakly decreasing");
            }
        }
    }

    const CsppClass& cls() const { return cls_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    /// b_{ij} with the boundary conventions.
    int at(int i, int j) const {
        int levels = cls_.levels();
        if (i == 0) return cls_.n;
        if (j == levels) return cls_.n - i;
        return entry(i, j);
    }

    std::vector<int> reading_word() const {
        std::vector<int> w;
        for (const auto& row : rows_) w.insert(w.end(), row.begin(), row.end());
        return w;
    }

    bool operator==(const ShiftedPP& o) const { return rows_ == o.rows_; }

private:
    int entry(int i, int j) const {
        return rows_[static_cast<size_t>(i - 1)][static_cast<size_t>(j - i)];
    }
    CsppClass cls_;
    std::vector<std::vector<int>> rows_;
};

/// All members, ordered by descending reading word (the order the small
/// reference listings use).
inline std::vector<ShiftedPP> enumerate_tspp(const CsppClass& cls) {
    if (cls.n < 1 || cls.m < 0) throw std::invalid_argument("enumerate_tspp: need n >= 1, m >= 0");
    if (cls.levels() > kEnumerationLevelGuard)
        throw std::invalid_argument("enumerate_tspp: size guard exceeded");
    int side = cls.levels() - 1;

    std::vector<ShiftedPP> out;
    std::vector<std::vector<int>> rows(static_cast<size_t>(side));
    std::function<void(int, int)> fill = [&](int i, int j) {
        if (i > side) {
            out.emplace_back(cls, rows);
            return;
        }
        int ni = j == side ? i + 1 : i;
        int nj = j == side ? i + 1 : j + 1;
        int lo = std::max(cls.n - i, 0);
        int hi = cls.n;
        if (j > i) hi = std::min(hi, rows[static_cast<size_t>(i - 1)][static_cast<size_t>(j - i - 1)]);
        if (i > 1) hi = std::min(hi, rows[static_cast<size_t>(i - 2)][static_cast<size_t>(j - i + 1)]);
        for (int v = hi; v >= lo; --v) {
            rows[static_cast<size_t>(i - 1)].push_back(v);
            fill(ni, nj);
            rows[static_cast<size_t>(i - 1)].pop_back();
        }
    };
    if (side == 0) {
        out.emplace_back(cls, rows);
        return out;
    }
    fill(1, 1);
    return out;
}

// ---------------------------------------------------------------------------
// Monotone triangles
// ---------------------------------------------------------------------------

/// Rows indexed 1..n from the full bottom row upward; row i holds entries
/// m_{ij} for j = i..n.  Rows increase strictly left to right, consecutive
/// rows interlace, and the bottom row is (1, ..., n).
class MonotoneTriangle {
public:
    MonotoneTriangle() = default;
    MonotoneTriangle(int n, std::vector<std::vector<int>> rows)
        : n_(n), rows_(std::move(rows)) {
        if (static_cast<int>(rows_.size()) != n) throw std::invalid_argument("triangle shape");
        for (int i = 1; i <= n; ++i) {
            if (static_cast<int>(rows_[static_cast<size_t>(i - 1)].size()) != n - i + 1)
                throw std::invalid_argument("triangle shape");
            for (int j = i; j <= n; ++j) {
                int v = at(i, j);
                if (v < 1) throw std::invalid_argument("entries must be positive");
                if (j > i && v <= at(i, j - 1))
                    throw std::invalid_argument("row not strictly increasing");
                if (i > 1) {
                    if (j <= n && at(i - 1, j) < v)
                        throw std::invalid_argument("upper row exceeds lower row");
                    if (at(i - 1, j - 1) > v)
                        throw std::invalid_argument("interlacing violated");
                }
            }
        }
        for (int j = 1; j <= n; ++j)
            if (at(1, j) != j) throw std::invalid_argument("bottom row must be 1..n");
    }

    int size() const { return n_; }
    int at(int i, int j) const {
        return rows_[static_cast<size_t>(i - 1)][static_cast<size_t>(j - i)];
    }
    int top() const { return at(n_, n_); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    bool operator==(const MonotoneTriangle& o) const { return rows_ == o.rows_; }

private:
    int n_ = 0;
    std::vector<std::vector<int>> rows_;
};

inline std::vector<MonotoneTriangle> enumerate_mt(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_mt: need n >= 1");
    if (n > kTriangleSizeGuard) throw std::invalid_argument("enumerate_mt: size guard exceeded");
    std::vector<MonotoneTriangle> out;
    std::vector<std::vector<int>> rows;
    rows.emplace_back();
    for (int j = 1; j <= n; ++j) rows[0].push_back(j);

    std::function<void(int)> build = [&](int i) {
        if (i > n) {
            out.emplace_back(n, rows);
            return;
        }
        const std::vector<int> below = rows[static_cast<size_t>(i - 2)];  // copy: rows reallocates
        std::vector<int> row;
        std::function<void(int)> pick = [&](int j) {
            if (j > n) {
                rows.push_back(row);
                build(i + 1);
                rows.pop_back();
                return;
            }
            // interlacing: below[j-1] <= m_{ij} <= below[j] (1-based in row i-1)
            int lo = below[static_cast<size_t>(j - 1 - (i - 1))];
            int hi = below[static_cast<size_t>(j - (i - 1))];
            if (!row.empty()) lo = std::max(lo, row.back() + 1);
            for (int v = lo; v <= hi; ++v) {
                row.push_back(v);
                pick(j + 1);
                row.pop_back();
            }
        };
        pick(i);
    };
    build(2);
    return out;
}

// ---------------------------------------------------------------------------
// Subset filters
// ---------------------------------------------------------------------------

inline bool all_rows_even(const PlanePartition& p) {
    for (int i = 1; i <= p.row_count(); ++i)
        if (p.row_length(i) % 2 != 0) return false;
    return true;
}

inline bool all_cols_even(const PlanePartition& p) {
    for (int j = 1; j <= p.column_count(); ++j)
        if (p.column_length(j) % 2 != 0) return false;
    return true;
}

template <class T, class Pred>
std::vector<T> filtered(const std::vector<T>& objects, Pred pred) {
    std::vector<T> out;
    for (const T& o : objects)
        if (pred(o)) out.push_back(o);
    return out;
}

/// Members with at most k rows.
inline std::vector<PlanePartition> cspp_at_most_k_rows(const std::vector<PlanePartition>& objects,
                                                       int k) {
    return filtered(objects, [&](const PlanePartition& p) { return p.row_count() <= k; });
}

/// Number of saturated parts: first-row entries meeting their column cap.
inline int saturated_parts(const PlanePartition& p, const CsppClass& cls) {
    int count = 0;
    for (int j = 1; j <= p.row_length(1); ++j)
        if (p.at(1, j) == cls.levels() - j) ++count;
    return count;
}

/// The (k, x, y) refinement: at most k rows, the k-th row of length exactly
/// n+m-k-x, and exactly y saturated parts.  k = 0 selects the empty partition
/// with (x, y) = (0, 0).
inline std::vector<PlanePartition> cspp_kxy(const std::vector<PlanePartition>& objects,
                                            const CsppClass& cls, int k, int x, int y) {
    return filtered(objects, [&](const PlanePartition& p) {
        if (p.row_count() > k) return false;
        if (k == 0) return x == 0 && y == 0;
        if (p.row_length(k) != cls.levels() - k - x) return false;
        return saturated_parts(p, cls) == y;
    });
}

/// Members whose first n+m-1-k columns are pinned at the maximum value n.
inline std::vector<ShiftedPP> tspp_k(const std::vector<ShiftedPP>& objects, int k) {
    return filtered(objects, [&](const ShiftedPP& b) {
        int side = b.cls().levels() - 1;
        for (int j = 1; j <= side - k && j <= side; ++j)
            for (int i = 1; i <= j; ++i)
                if (b.at(i, j) != b.cls().n) return false;
        return true;
    });
}

/// The (k, x, y) refinement on the shifted side: x entries at the maximum in
/// column n+m-k and y entries at their minimum in the last column.
inline std::vector<ShiftedPP> tspp_kxy(const std::vector<ShiftedPP>& objects, int k, int x,
                                       int y) {
    std::vector<ShiftedPP> base = tspp_k(objects, k);
    return filtered(base, [&](const ShiftedPP& b) {
        int levels = b.cls().levels();
        int side = levels - 1;
        int max_count = 0;
        if (k >= 1) {
            int col = levels - k;
            for (int i = 1; i <= col && col <= side; ++i)
                if (b.at(i, col) == b.cls().n) ++max_count;
        }
        if (k == 0 && x != 0) return false;
        if (k >= 1 && max_count != x) return false;
        int min_count = 0;
        for (int i = 1; i <= side; ++i)
            if (b.at(i, side) == std::max(b.cls().n - i, 0)) ++min_count;
        return min_count == y;
    });
}

/// Triangles whose first n-k columns sit at their minimum values j-i+1.
inline std::vector<MonotoneTriangle> mt_subset(const std::vector<MonotoneTriangle>& objects,
                                               int k) {
    return filtered(objects, [&](const MonotoneTriangle& t) {
        int n = t.size();
        for (int j = 1; j <= n - k; ++j)
            for (int i = 1; i <= j; ++i)
                if (t.at(i, j) != j - i + 1) return false;
        return true;
    });
}

/// The (k, x, y) refinement: x+1 minimal entries in column n-k+1 and y+1
/// maximal entries in the last column.  k = 0 pins x = 0.
inline std::vector<MonotoneTriangle> mt_subset_kxy(const std::vector<MonotoneTriangle>& objects,
                                                   int k, int x, int y) {
    std::vector<MonotoneTriangle> base = mt_subset(objects, k);
    return filtered(base, [&](const MonotoneTriangle& t) {
        int n = t.size();
        if (k == 0) {
            if (x != 0) return false;
        } else {
            int col = n - k + 1;
            int min_count = 0;
            for (int i = 1; i <= col; ++i)
                if (t.at(i, col) == col - i + 1) ++min_count;
            if (min_count != x + 1) return false;
        }
        int max_count = 0;
        for (int i = 1; i <= n; ++i)
            if (t.at(i, n) == n) ++max_count;
        return max_count == y + 1;
    });
}

}  // namespace ppgf
