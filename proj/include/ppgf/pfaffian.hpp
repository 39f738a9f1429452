#pragma once

// Exact Pfaffians of skew-symmetric matrices over integers, rationals and
// sparse polynomials.
//
// Two independent routes are provided:
//   * pfaffian_by_matchings — the signed perfect-matching expansion, usable up
//     to size 12; this is the test oracle.
//   * pfaffian — the production algorithm: skew-symmetric elimination over the
//     rationals for constant matrices, and per-variable evaluation at integer
//     points followed by Lagrange interpolation for polynomial matrices.
//
// Odd-size Pfaffians are 0 by convention and size 0 gives 1. Also here: exact
// determinants, sub-Pfaffians, shuffle signs, copfaffian matrices, and the
// minor summation identity checker.

#include "ppgf/matrix.hpp"
#include "ppgf/poly.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace ppgf {

// ---------------------------------------------------------------------------
// Oracle: signed sum over perfect matchings
// ---------------------------------------------------------------------------

namespace detail {

inline Poly matchings_sum(const SkewMatrix& a, std::vector<int>& live) {
    if (live.empty()) return Poly(1);
    int i0 = live[0];
    Poly total;
    for (size_t pos = 1; pos < live.size(); ++pos) {
        int j = live[pos];
        if (a.at(i0, j).is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(live.size() - 2);
        for (size_t k = 1; k < live.size(); ++k)
            if (k != pos) rest.push_back(live[k]);
        Poly sub = matchings_sum(a, rest);
        Poly term = a.at(i0, j) * sub;
        total += is_odd(static_cast<long>(pos) - 1) ? -term : term;
    }
    return total;
}

}  // namespace detail

inline constexpr int kMatchingsSizeLimit = 12;

inline Poly pfaffian_by_matchings(const SkewMatrix& a) {
    int n = a.size();
    if (n == 0) return Poly(1);
    if (n % 2 == 1) return Poly(0);
    if (n > kMatchingsSizeLimit)
        throw std::invalid_argument("pfaffian_by_matchings: size above the complexity guard");
    std::vector<int> live(static_cast<size_t>(n));
    std::iota(live.begin(), live.end(), 0);
    return detail::matchings_sum(a, live);
}

// ---------------------------------------------------------------------------
// Production path: skew elimination over the rationals
// ---------------------------------------------------------------------------

/// Pfaffian of a constant skew matrix given as rationals, by repeated Schur
/// complements on 2x2 leading blocks with row/column swaps on zero pivots.
inline Rational pfaffian_rational(std::vector<std::vector<Rational>> a) {
    int n = static_cast<int>(a.size());
    if (n == 0) return Rational(1);
    if (n % 2 == 1) return Rational(0);
    Rational result(1);
    for (int k = 0; k + 1 < n; k += 2) {
        int pivot_row = -1;
        for (int i = k + 1; i < n; ++i)
            if (a[k][i] != 0) { pivot_row = i; break; }
        if (pivot_row < 0) return Rational(0);  // row k is zero in the remainder
        if (pivot_row != k + 1) {
            std::swap(a[pivot_row], a[k + 1]);
            for (int i = 0; i < n; ++i) std::swap(a[i][pivot_row], a[i][k + 1]);
            result = -result;
        }
        Rational p = a[k][k + 1];
        result *= p;
        for (int i = k + 2; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                Rational upd = a[i][j] - (a[k][i] * a[k + 1][j] - a[k][j] * a[k + 1][i]) / p;
                a[i][j] = upd;
                a[j][i] = -upd;
            }
        }
    }
    return result;
}

namespace detail {

inline std::vector<std::vector<Rational>> constant_entries(const SkewMatrix& a) {
    int n = a.size();
    std::vector<std::vector<Rational>> m(static_cast<size_t>(n),
                                         std::vector<Rational>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = Rational(a.at(i, j).constant_value());
    return m;
}

/// Degree bound for a variable in Pf(a): the sum of the n/2 largest degrees
/// among the entries, since each matching multiplies n/2 entries.
inline int pfaffian_degree_bound(const SkewMatrix& a, Var v) {
    std::vector<int> degs;
    for (int i = 0; i < a.size(); ++i)
        for (int j = i + 1; j < a.size(); ++j) {
            int d = a.at(i, j).degree(v);
            if (d > 0) degs.push_back(d);
        }
    std::sort(degs.rbegin(), degs.rend());
    int take = std::min<int>(a.size() / 2, static_cast<int>(degs.size()));
    int bound = 0;
    for (int i = 0; i < take; ++i) bound += degs[static_cast<size_t>(i)];
    return bound;
}

inline Poly pfaffian_interpolated(const SkewMatrix& a, const std::vector<Var>& vars) {
    if (vars.empty()) {
        Rational v = pfaffian_rational(constant_entries(a));
        return Poly(rational_to_integer(v));
    }
    Var v = vars.back();
    std::vector<Var> rest(vars.begin(), vars.end() - 1);
    int bound = pfaffian_degree_bound(a, v);
    std::vector<std::pair<Integer, Poly>> samples;
    samples.reserve(static_cast<size_t>(bound) + 1);
    for (int x = 0; x <= bound; ++x) {
        SkewMatrix ax = a.substitute({{v, Poly(x)}});
        samples.emplace_back(Integer(x), pfaffian_interpolated(ax, rest));
    }
    return interpolate_poly(samples, v);
}

}  // namespace detail

inline constexpr long kInterpolationGridLimit = 1L << 21;

/// Exact Pfaffian for any even size; agrees with pfaffian_by_matchings
/// wherever both are defined.
inline Poly pfaffian(const SkewMatrix& a) {
    if (a.size() == 0) return Poly(1);
    if (a.size() % 2 == 1) return Poly(0);
    std::set<Var> used;
    for (int i = 0; i < a.size(); ++i)
        for (int j = i + 1; j < a.size(); ++j)
            for (Var v : a.at(i, j).vars_used()) used.insert(v);
    std::vector<Var> vars(used.begin(), used.end());
    long grid = 1;
    for (Var v : vars) {
        grid *= detail::pfaffian_degree_bound(a, v) + 1;
        if (grid > kInterpolationGridLimit)
            throw std::runtime_error("pfaffian: interpolation grid too large");
    }
    return detail::pfaffian_interpolated(a, vars);
}

inline Poly sub_pfaffian(const SkewMatrix& a, const IndexSet& idx) {
    for (int m : idx.members())
        if (m > a.size()) throw std::out_of_range("sub_pfaffian: index out of range");
    return pfaffian(a.restrict(idx));
}

// ---------------------------------------------------------------------------
// Shuffle signs and copfaffians
// ---------------------------------------------------------------------------

/// (-1)^{s(complement, I)} where s counts the pairs (a, b) with a in the
/// complement of I, b in I and a > b — the inversions of the merge.
inline int shuffle_sign(const IndexSet& idx, int n) {
    IndexSet comp = idx.complement(n);
    long inversions = 0;
    for (int a : comp.members())
        for (int b : idx.members())
            if (a > b) ++inversions;
    return is_odd(inversions) ? -1 : 1;
}

/// Matrix of gamma(i, j) = (-1)^{j-i-1} Pf(a with rows/cols i, j removed).
inline SkewMatrix copfaffian_matrix(const SkewMatrix& a) {
    int n = a.size();
    if (n % 2 == 1) throw std::invalid_argument("copfaffian_matrix: odd size");
    return SkewMatrix::from_upper(n, [&](int i, int j) {
        std::vector<int> keep;
        for (int k = 0; k < n; ++k)
            if (k != i - 1 && k != j - 1) keep.push_back(k);
        Poly sub = pfaffian(a.restrict0(keep));
        return is_odd(j - i - 1) ? -sub : sub;
    });
}

// ---------------------------------------------------------------------------
// Determinants
// ---------------------------------------------------------------------------

/// Exact determinant of a rational matrix by fraction-free (Bareiss-style)
/// elimination over a common denominator.
inline Rational determinant_rational(std::vector<std::vector<Rational>> a) {
    int n = static_cast<int>(a.size());
    if (n == 0) return Rational(1);
    Rational det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (a[i][col] != 0) { pivot = i; break; }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (int i = col + 1; i < n; ++i) {
            Rational f = a[i][col] / a[col][col];
            for (int j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    return det;
}

/// Determinant of a polynomial matrix by cofactor expansion along the first
/// row (fine for the small symbolic matrices used in this library).
inline Poly determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
    int n = m.rows();
    if (n == 0) return Poly(1);
    if (n == 1) return m.at(0, 0);

    bool constant = true;
    for (int i = 0; i < n && constant; ++i)
        for (int j = 0; j < n && constant; ++j)
            if (!m.at(i, j).is_constant()) constant = false;
    if (constant) {
        std::vector<std::vector<Rational>> a(static_cast<size_t>(n),
                                             std::vector<Rational>(static_cast<size_t>(n)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a[i][j] = Rational(m.at(i, j).constant_value());
        return Poly(rational_to_integer(determinant_rational(std::move(a))));
    }

    Poly total;
    std::vector<int> cols(static_cast<size_t>(n - 1));
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        int w = 0;
        for (int c = 0; c < n; ++c)
            if (c != j) cols[static_cast<size_t>(w++)] = c;
        std::vector<int> rows(static_cast<size_t>(n - 1));
        std::iota(rows.begin(), rows.end(), 1);
        Poly minor = determinant(m.submatrix(rows, cols));
        Poly term = m.at(0, j) * minor;
        total += is_odd(j) ? -term : term;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Minor summation identity
// ---------------------------------------------------------------------------

/// All m-element subsets of [1, n], in lexicographic order.
inline std::vector<IndexSet> subsets_of(int n, int m) {
    std::vector<IndexSet> out;
    if (m < 0 || m > n) return out;
    std::vector<int> cur(static_cast<size_t>(m));
    std::iota(cur.begin(), cur.end(), 1);
    while (true) {
        out.emplace_back(cur, n);
        int i = m - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] == n - (m - 1 - i)) --i;
        if (i < 0) break;
        ++cur[static_cast<size_t>(i)];
        for (int j = i + 1; j < m; ++j)
            cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

/// Assembles Pf[[0, J_m T], [-T^t J_m, B]] — the block Pfaffian side of the
/// minor summation identity.
inline SkewMatrix minor_summation_block(const PolyMatrix& t, const SkewMatrix& b) {
    int m = t.rows(), n = t.cols();
    if (b.size() != n) throw std::invalid_argument("minor summation: shape mismatch");
    PolyMatrix blk(m + n, m + n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            Poly v = t.at(m - 1 - i, j);  // J_m reverses the row order of T
            blk.at(i, m + j) = v;
            blk.at(m + j, i) = -v;
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) blk.at(m + i, m + j) = b.at(i, j);
    return SkewMatrix(std::move(blk));
}

struct MinorSummationReport {
    Poly subset_sum;       // sum over I of sign * Pf(B on complement) * det(T_I)
    Poly block_pfaffian;   // Pf of the bordered block matrix
    Poly quadratic_form;   // Pf(T B T^t) for even m, or its bordered odd-m variant
    bool block_matches = false;
    bool quadratic_matches = false;
};

/// Checks the minor summation identity for an m-by-n matrix T and a skew B of
/// size n (n - m even): the signed subset sum against the block Pfaffian, and
/// the quadratic form Pf(T B T^t) against the unsigned subset sum (bordering
/// T and B by a unit row when m is odd).
inline MinorSummationReport minor_summation_check(const PolyMatrix& t, const SkewMatrix& b) {
    int m = t.rows(), n = t.cols();
    if (b.size() != n) throw std::invalid_argument("minor summation: shape mismatch");
    if ((n - m) % 2 != 0) throw std::invalid_argument("minor summation: n - m must be even");

    MinorSummationReport rep;
    std::vector<int> all_cols(static_cast<size_t>(m));
    std::iota(all_cols.begin(), all_cols.end(), 0);

    for (const IndexSet& idx : subsets_of(n, m)) {
        Poly det_t = determinant(t.submatrix(all_cols, idx.zero_based()));
        if (det_t.is_zero()) continue;
        Poly pf = sub_pfaffian(b, idx.complement(n));
        Poly term = pf * det_t;
        rep.subset_sum += shuffle_sign(idx, n) < 0 ? -term : term;
    }
    rep.block_pfaffian = pfaffian(minor_summation_block(t, b));
    rep.block_matches = rep.subset_sum == rep.block_pfaffian;

    // Quadratic-form variant: sum over I of Pf(B_I) det(T_I) = Pf(T B T^t).
    auto quadratic = [](const PolyMatrix& tm, const SkewMatrix& bm) {
        int mm = tm.rows(), nn = tm.cols();
        PolyMatrix q(mm, mm);
        for (int i = 0; i < mm; ++i)
            for (int j = i + 1; j < mm; ++j) {
                Poly s;
                for (int k = 0; k < nn; ++k)
                    for (int l = 0; l < nn; ++l)
                        if (!bm.at(k, l).is_zero()) s += tm.at(i, k) * bm.at(k, l) * tm.at(j, l);
                q.at(i, j) = s;
                q.at(j, i) = -s;
            }
        return pfaffian(SkewMatrix(std::move(q)));
    };
    auto unsigned_sum = [&all_cols](const PolyMatrix& tm, const SkewMatrix& bm) {
        Poly s;
        std::vector<int> rs(static_cast<size_t>(tm.rows()));
        std::iota(rs.begin(), rs.end(), 0);
        for (const IndexSet& idx : subsets_of(tm.cols(), tm.rows())) {
            Poly det_t = determinant(tm.submatrix(rs, idx.zero_based()));
            if (det_t.is_zero()) continue;
            s += sub_pfaffian(bm, idx) * det_t;
        }
        return s;
    };

    if (m % 2 == 0) {
        rep.quadratic_form = quadratic(t, b);
        rep.quadratic_matches = rep.quadratic_form == unsigned_sum(t, b);
    } else {
        // Border both T and B with a unit row/column pair so the even-size
        // identity applies; the extra index pairs the bordered entries.
        PolyMatrix tb(m + 1, n + 1);
        tb.at(0, 0) = Poly(1);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) tb.at(i + 1, j + 1) = t.at(i, j);
        PolyMatrix bb(n + 1, n + 1);
        for (int j = 1; j <= n; ++j) {
            bb.at(0, j) = Poly(1);
            bb.at(j, 0) = Poly(-1);
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) bb.at(i + 1, j + 1) = b.at(i, j);
        SkewMatrix b0(std::move(bb));
        rep.quadratic_form = quadratic(tb, b0);
        rep.quadratic_matches = rep.quadratic_form == unsigned_sum(tb, b0);
    }
    return rep;
}

}  // namespace ppgf
