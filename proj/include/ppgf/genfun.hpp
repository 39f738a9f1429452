#pragma once

// Pfaffian-side generating functions.  Every weight kind pairs a rectangular
// transfer matrix B with a skew matrix A; the generating function is the
// block Pfaffian Pf [[0, J B], [-B^t J, A]], and the brute-force counterpart
// (the weighted sum over the objects themselves) is produced here as well so
// the two routes can be compared mechanically.

#include "ppgf/families.hpp"
#include "ppgf/objects.hpp"
#include "ppgf/pfaffian.hpp"
#include "ppgf/statistics.hpp"

#include <string>

namespace ppgf {

enum class WeightKind {
    Refined,         // t^{ubar_r}
    Doubly,          // t^{ubar_1} u^{ubar_r}, r >= 2
    ColsEven,        // columns-even subclass, t^{ubar_r}
    RowsEven,        // rows-even subclass, t^{ubar_r}
    ColsEvenDoubly,  // columns-even subclass, t^{ubar_1} u^{ubar_r}
    OddCols,         // t^{#odd columns}
    OddRows,         // t^{#odd rows}
    RefinedOddCols,  // t^{ubar_r} u^{#odd columns}
    Mt,              // at-most-k-rows subclass, t^{ubar_r}, eps-limit route
    MtTruncated,     // same subclass via the truncated transfer matrix
    Neg1,            // (-1)^{|c|}
    Neg1First,       // (-1)^{|c|} t^{ubar_1}
    Neg1Top,         // (-1)^{|c|} t^{ubar_{n+m}}
    Neg1OddCols,     // (-1)^{|c|} t^{#odd columns}
};

inline const char* weight_kind_name(WeightKind k) {
    switch (k) {
        case WeightKind::Refined: return "refined";
        case WeightKind::Doubly: return "doubly";
        case WeightKind::ColsEven: return "cols-even";
        case WeightKind::RowsEven: return "rows-even";
        case WeightKind::ColsEvenDoubly: return "cols-even-doubly";
        case WeightKind::OddCols: return "vc";
        case WeightKind::OddRows: return "vr";
        case WeightKind::RefinedOddCols: return "vc-doubly";
        case WeightKind::Mt: return "mt";
        case WeightKind::MtTruncated: return "mt-truncated";
        case WeightKind::Neg1: return "neg1";
        case WeightKind::Neg1First: return "neg1-first";
        case WeightKind::Neg1Top: return "neg1-top";
        case WeightKind::Neg1OddCols: return "neg1-vc";
    }
    throw std::logic_error("unreachable");
}

inline WeightKind weight_kind_from_string(const std::string& s) {
    for (WeightKind k :
         {WeightKind::Refined, WeightKind::Doubly, WeightKind::ColsEven, WeightKind::RowsEven,
          WeightKind::ColsEvenDoubly, WeightKind::OddCols, WeightKind::OddRows,
          WeightKind::RefinedOddCols, WeightKind::Mt, WeightKind::MtTruncated, WeightKind::Neg1,
          WeightKind::Neg1First, WeightKind::Neg1Top, WeightKind::Neg1OddCols})
        if (s == weight_kind_name(k)) return k;
    throw std::invalid_argument("unknown weight kind: " + s);
}

struct GfRequest {
    WeightKind kind = WeightKind::Refined;
    int n = 1;
    int m = 0;
    int N = 0;  // 0 means the default even width
    int k = 0;  // band parameter for the at-most-k-rows kinds

    int width() const { return N > 0 ? N : default_block_width(n, m); }
};

// ---------------------------------------------------------------------------
// The Pfaffian route
// ---------------------------------------------------------------------------

/// The eps-polynomial of the banded block Pfaffian, before the limit.
inline Poly gf_mt_prelimit(int n, int m, int N, int k) {
    PolyMatrix b = binomial_matrix(n, m, N, BinomialMode::Refined);
    SkewMatrix a = build_skew(SkewKind::AltBanded, n + N,
                              SkewParams{.t = std::nullopt, .m = n, .k = k});
    return pfaffian(minor_summation_block(b, a));
}

inline Poly gf_pfaffian(const GfRequest& req) {
    int n = req.n, m = req.m, N = req.width();
    if (n < 1 || m < 0) throw std::invalid_argument("gf_pfaffian: bad class");
    if (N % 2 != 0 || N < n + m - 1)
        throw std::invalid_argument("gf_pfaffian: N must be even and at least n+m-1");
    Poly t = Poly::variable(var_t());
    Poly u = Poly::variable(var_u());

    auto block = [&](const PolyMatrix& b, const SkewMatrix& a) {
        return pfaffian(minor_summation_block(b, a));
    };
    auto B = [&](BinomialMode mode) { return binomial_matrix(n, m, N, mode); };
    auto A = [&](SkewKind kind, const Poly& param) {
        return build_skew(kind, n + N, SkewParams{.t = param});
    };

    switch (req.kind) {
        case WeightKind::Refined:
            return block(B(BinomialMode::Refined), A(SkewKind::Alt, t));
        case WeightKind::Doubly:
            return block(B(BinomialMode::DoublyRefined), A(SkewKind::Alt, t));
        case WeightKind::ColsEven:
            return block(B(BinomialMode::Refined), A(SkewKind::AltGapPow, Poly(0)));
        case WeightKind::RowsEven:
            return block(B(BinomialMode::Refined), A(SkewKind::AltParityPow, Poly(0)));
        case WeightKind::ColsEvenDoubly:
            return block(B(BinomialMode::DoublyRefined), A(SkewKind::AltGapPow, Poly(0)));
        case WeightKind::OddCols:
            return block(B(BinomialMode::Plain), A(SkewKind::AltGapPow, t));
        case WeightKind::OddRows:
            return block(B(BinomialMode::Plain), A(SkewKind::AltParityPow, t));
        case WeightKind::RefinedOddCols:
            return block(B(BinomialMode::Refined), A(SkewKind::AltGapPow, u));
        case WeightKind::Mt: {
            if (req.k < 0 || req.k > n + m - 1)
                throw std::invalid_argument("gf_pfaffian: band parameter out of range");
            Poly pre = gf_mt_prelimit(n, m, N, req.k);
            int order = req.k / 2;
            for (int j = 0; j < order; ++j)
                if (!pre.coeff_of(var_eps(), j).is_zero())
                    throw std::runtime_error(
                        "gf_pfaffian: nonvanishing low-order eps coefficient");
            return pre.coeff_of(var_eps(), order);
        }
        case WeightKind::MtTruncated: {
            if (req.k < 0 || req.k > n + m - 1)
                throw std::invalid_argument("gf_pfaffian: band parameter out of range");
            PolyMatrix b = binomial_matrix_truncated(n, m, N, req.k);
            return block(b, A(SkewKind::Alt, t));
        }
        case WeightKind::Neg1:
            return block(signed_binomial_matrix(n, m, N, SignedMode::Plain),
                         A(SkewKind::Alt, t));
        case WeightKind::Neg1First:
            return block(signed_binomial_matrix(n, m, N, SignedMode::FirstLevel),
                         A(SkewKind::Alt, t));
        case WeightKind::Neg1Top:
            return block(signed_binomial_matrix(n, m, N, SignedMode::TopLevel),
                         A(SkewKind::Alt, t));
        case WeightKind::Neg1OddCols:
            return block(signed_binomial_matrix(n, m, N, SignedMode::Plain),
                         A(SkewKind::AltGapPow, t));
    }
    throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// The brute-force route
// ---------------------------------------------------------------------------

/// Weighted sum over the enumerated class; r indexes the free level
/// statistic where the kind has one (defaults to 1, or 2 for the doubly
/// refined kinds).
inline Poly gf_brute(const GfRequest& req, int r = 0) {
    CsppClass cls{req.n, req.m};
    auto objects = enumerate_cspp(cls);
    Var t = var_t(), u = var_u();
    WeightSpec w;
    int levels = cls.levels();
    switch (req.kind) {
        case WeightKind::Refined:
            w.with(StatKind::UbarR, t, r ? r : 1);
            break;
        case WeightKind::Doubly:
            w.with(StatKind::UbarR, t, 1).with(StatKind::UbarR, u, r ? r : 2);
            break;
        case WeightKind::ColsEven:
            objects = filtered(objects, all_cols_even);
            w.with(StatKind::UbarR, t, r ? r : 1);
            break;
        case WeightKind::RowsEven:
            objects = filtered(objects, all_rows_even);
            w.with(StatKind::UbarR, t, r ? r : 1);
            break;
        case WeightKind::ColsEvenDoubly:
            objects = filtered(objects, all_cols_even);
            w.with(StatKind::UbarR, t, 1).with(StatKind::UbarR, u, r ? r : 2);
            break;
        case WeightKind::OddCols:
            w.with(StatKind::OddCols, t);
            break;
        case WeightKind::OddRows:
            w.with(StatKind::OddRows, t);
            break;
        case WeightKind::RefinedOddCols:
            w.with(StatKind::UbarR, t, r ? r : 1).with(StatKind::OddCols, u);
            break;
        case WeightKind::Mt:
        case WeightKind::MtTruncated:
            objects = cspp_at_most_k_rows(objects, req.k);
            w.with(StatKind::UbarR, t, r ? r : 1);
            break;
        case WeightKind::Neg1:
            w.sign_by_weight = true;
            break;
        case WeightKind::Neg1First:
            w.sign_by_weight = true;
            w.with(StatKind::UbarR, t, 1);
            break;
        case WeightKind::Neg1Top:
            w.sign_by_weight = true;
            w.with(StatKind::UbarR, t, levels);
            break;
        case WeightKind::Neg1OddCols:
            w.sign_by_weight = true;
            w.with(StatKind::OddCols, t);
            break;
    }
    return brute_gf(objects, cls, w);
}

// ---------------------------------------------------------------------------
// The general multivariate identity
// ---------------------------------------------------------------------------

inline constexpr int kGeneralLevelCap = 6;

/// Lattice-path determinant: the generating function of the class members of
/// a fixed shape, det(e^{(N-i)}_{lambda_j - j + i}) at the weighted level
/// variables, N = n + m.
inline Poly lattice_determinant(const Partition& lambda, int n, int m,
                                const std::vector<Poly>& level_t,
                                const std::vector<Poly>& level_x) {
    if (lambda.length() > n) throw std::invalid_argument("lattice_determinant: partition too long");
    int levels = n + m;
    if (static_cast<int>(level_t.size()) != levels || static_cast<int>(level_x.size()) != levels)
        throw std::invalid_argument("lattice_determinant: need n+m level weights");
    std::vector<Poly> suffix(static_cast<size_t>(levels) + 2, Poly(1));
    for (int i = levels; i >= 1; --i)
        suffix[static_cast<size_t>(i)] =
            level_t[static_cast<size_t>(i - 1)] * suffix[static_cast<size_t>(i + 1)];
    PolyMatrix d(n, n);
    for (int i = 1; i <= n; ++i) {
        std::vector<Poly> args;
        for (int k = 1; k <= levels - i; ++k) {
            Poly tk = (k == levels - i) ? suffix[static_cast<size_t>(k)]
                                        : level_t[static_cast<size_t>(k - 1)];
            args.push_back(tk * level_x[static_cast<size_t>(k - 1)]);
        }
        for (int j = 1; j <= n; ++j)
            d.at(i - 1, j - 1) = elementary_symmetric(lambda.part(j) - j + i, args);
    }
    return determinant(d);
}

/// Block Pfaffian of the fully weighted identity: A is (n+N) x (n+N), the
/// transfer matrix carries per-level weights t_1..t_{n+m}, x_1..x_{n+m}.
inline Poly gf_general(int n, int m, int N, const SkewMatrix& a,
                       const std::vector<Poly>& level_t, const std::vector<Poly>& level_x) {
    if (n + m > kGeneralLevelCap)
        throw std::invalid_argument("gf_general: level cap exceeded");
    if (a.size() != n + N) throw std::invalid_argument("gf_general: dimension mismatch");
    BinomialParams params;
    params.level_t = level_t;
    params.level_x = level_x;
    PolyMatrix b = binomial_matrix(n, m, N, BinomialMode::General, params);
    return pfaffian(minor_summation_block(b, a));
}

/// Brute-force counterpart of gf_general: the weighted sum over the class of
/// (-1)^{|shape'|} Pf(A on the complementary index set) times the full level
/// monomial.
inline Poly gf_general_brute(int n, int m, int N, const SkewMatrix& a,
                             const std::vector<Poly>& level_t,
                             const std::vector<Poly>& level_x) {
    CsppClass cls{n, m};
    int levels = cls.levels();
    Poly total;
    for (const PlanePartition& c : enumerate_cspp(cls)) {
        // lambda' = shape(c), indexed over the n columns
        std::vector<int> colshape;
        for (int j = 1; j <= c.column_count(); ++j) colshape.push_back(c.column_length(j));
        Partition lambda(std::move(colshape));
        IndexSet idx = index_set_of_partition(lambda, n, n + N);
        Poly pf = sub_pfaffian(a, idx.complement(n + N));
        if (pf.is_zero()) continue;
        Poly weight(sign_pow(lambda.weight()));
        for (int r = 1; r <= levels; ++r)
            weight *= level_t[static_cast<size_t>(r - 1)].pow(ubar_stat(c, cls, r));
        for (int v = 1; v <= levels; ++v) {
            int mult = 0;
            for (const auto& row : c.rows())
                for (int entry : row) mult += entry == v;
            weight *= level_x[static_cast<size_t>(v - 1)].pow(mult);
        }
        total += pf * weight;
    }
    return total;
}

}  // namespace ppgf
