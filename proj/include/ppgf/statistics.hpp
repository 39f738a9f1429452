#pragma once

// Statistics on the objects and the brute-force generating-function
// evaluator, the ground truth every Pfaffian and constant-term identity is
// checked against.
//
// On the shifted side, level_stat is the telescoping diagonal sum with the
// boundary conventions b_{i, n+m} = n-i and b_{0, j} = n.  On the plane
// partition side the complementary statistic counts parts equal to r plus
// saturated parts below r; the two are exchanged by the bijection via
// ubar = n+m-1 - u.

#include "ppgf/bijections.hpp"
#include "ppgf/objects.hpp"
#include "ppgf/poly.hpp"

#include <string>
#include <vector>

namespace ppgf {

/// U_r on a shifted triangle, r in [1, n+m].
inline int level_stat(const ShiftedPP& b, int r) {
    int levels = b.cls().levels();
    if (r < 1 || r > levels) throw std::invalid_argument("level_stat: r out of range");
    int total = 0;
    for (int t = 1; t <= levels - r; ++t) total += b.at(t, t + r - 1) - b.at(t, t + r);
    for (int t = levels - r + 1; t <= levels - 1; ++t)
        if (b.at(t, levels - 1) > b.cls().n - t) ++total;
    return total;
}

/// Complementary statistic on a plane partition: parts equal to r plus
/// saturated parts with value below r.
inline int ubar_stat(const PlanePartition& c, const CsppClass& cls, int r) {
    if (r < 1 || r > cls.levels()) throw std::invalid_argument("ubar_stat: r out of range");
    int count = 0;
    for (const auto& row : c.rows())
        for (int v : row)
            if (v == r) ++count;
    for (int k = 1; k < r; ++k)
        if (c.at(1, cls.levels() - k) == k) ++count;
    return count;
}

inline int odd_rows(const PlanePartition& c) {
    int k = 0;
    for (int i = 1; i <= c.row_count(); ++i) k += c.row_length(i) % 2;
    return k;
}

inline int odd_cols(const PlanePartition& c) {
    int k = 0;
    for (int j = 1; j <= c.column_count(); ++j) k += c.column_length(j) % 2;
    return k;
}

/// Sum of the parts in the first row.
inline long profile(const PlanePartition& c) {
    long s = 0;
    if (c.row_count() >= 1)
        for (int v : c.rows()[0]) s += v;
    return s;
}

/// Orbit-move counts as read off the plane partition: (0, profile,
/// weight - profile).  The cube-side count is the independent oracle.
inline std::array<long, 3> move_counts(const PlanePartition& c) {
    return {0, profile(c), c.weight() - profile(c)};
}

// ---------------------------------------------------------------------------
// Weight specifications
// ---------------------------------------------------------------------------

enum class StatKind { UbarR, UR, OddRows, OddCols, Profile, Weight };

struct WeightFactor {
    StatKind stat;
    int r = 0;   // for the level statistics
    Var variable;
};

/// Which statistic feeds which variable, plus optional sign weights.
struct WeightSpec {
    std::vector<WeightFactor> factors;
    bool sign_by_weight = false;   // multiply by (-1)^{|c|}
    bool sign_by_profile = false;  // multiply by (-1)^{profile}

    WeightSpec& with(StatKind stat, Var v, int r = 0) {
        for (const auto& f : factors)
            if (f.variable == v) throw std::invalid_argument("weight variable used twice");
        factors.push_back({stat, r, v});
        return *this;
    }
};

inline long stat_value(const PlanePartition& c, const CsppClass& cls, StatKind kind, int r) {
    switch (kind) {
        case StatKind::UbarR: return ubar_stat(c, cls, r);
        case StatKind::UR: return level_stat(cspp_to_tspp(c, cls), r);
        case StatKind::OddRows: return odd_rows(c);
        case StatKind::OddCols: return odd_cols(c);
        case StatKind::Profile: return profile(c);
        case StatKind::Weight: return c.weight();
    }
    throw std::logic_error("unreachable");
}

/// Sum over the objects of the signed monomial the weight spec describes.
inline Poly brute_gf(const std::vector<PlanePartition>& objects, const CsppClass& cls,
                     const WeightSpec& w) {
    Poly total;
    for (const PlanePartition& c : objects) {
        ExpVec e;
        for (const auto& f : w.factors) {
            long v = stat_value(c, cls, f.stat, f.r);
            if (v < 0) throw std::domain_error("negative statistic");
            e = e + ExpVec::unit(f.variable, static_cast<int>(v));
        }
        Integer coeff(1);
        if (w.sign_by_weight && is_odd(c.weight())) coeff = -coeff;
        if (w.sign_by_profile && is_odd(profile(c))) coeff = -coeff;
        total += Poly::monomial(e, coeff);
    }
    return total;
}

/// Same on the shifted side; only the level statistic applies there.
inline Poly brute_gf_tspp(const std::vector<ShiftedPP>& objects, const WeightSpec& w) {
    Poly total;
    for (const ShiftedPP& b : objects) {
        ExpVec e;
        for (const auto& f : w.factors) {
            if (f.stat != StatKind::UR)
                throw std::invalid_argument("statistic inapplicable to shifted triangles");
            e = e + ExpVec::unit(f.variable, level_stat(b, f.r));
        }
        if (w.sign_by_weight || w.sign_by_profile)
            throw std::invalid_argument("sign weights inapplicable to shifted triangles");
        total += Poly::monomial(e, Integer(1));
    }
    return total;
}

/// The weight polynomial of the k-banded monotone triangles: t^{top - 1}.
inline Poly mt_polynomial(int n, int k) {
    if (k < 0 || k > n - 1) throw std::invalid_argument("mt_polynomial: need 0 <= k <= n-1");
    Poly total;
    for (const MonotoneTriangle& m : mt_subset(enumerate_mt(n), k))
        total += Poly::monomial(ExpVec::unit(var_t(), m.top() - 1), Integer(1));
    return total;
}

}  // namespace ppgf
