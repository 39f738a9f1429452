#pragma once

// Constant-term side of the identities.  Every weighted class sum equals the
// constant term in z_1..z_n of
//
//   prod_{i<j} (1 - z_j/z_i) * prod_k h_{n-k}(1/z_k, t, u) * F(z),
//
// where h_i collects the transfer-matrix row coefficients and F is the
// Littlewood kernel matching the skew block (full sum, even-row sum, even
// column sum, marked variants, or the bounded Schur sum).  The extraction
// multiplies everything out as an exact Laurent polynomial against a series
// truncated at cap 2n+m per variable, which provably covers every exponent
// the constant term can touch.  The explicit subset sum D (signed
// sub-Pfaffians against maximal minors) is implemented alongside as the
// third route.

#include "ppgf/families.hpp"
#include "ppgf/genfun.hpp"
#include "ppgf/series.hpp"

#include <map>
#include <vector>

namespace ppgf {

// ---------------------------------------------------------------------------
// Kernels
// ---------------------------------------------------------------------------

enum class KernelKind {
    Full,        // sum over all partitions:     prod 1/(1-z_i)  prod 1/(1-z_i z_j)
    RowsEven,    // partitions with even rows:   prod 1/(1-z_i^2) prod 1/(1-z_i z_j)
    ColsEven,    // partitions with even cols:   prod 1/(1-z_i z_j)
    RowsMarked,  // v^{#odd rows}:               prod (1+v z_i)/(1-z_i^2) prod 1/(1-z_i z_j)
    ColsMarked,  // v^{#odd cols}:               prod 1/(1-v z_i) prod 1/(1-z_i z_j)
    Bounded,     // first part at most k:        finite Schur sum
};

struct KernelParams {
    Poly mark = Poly(1);  // the v above
    int k = 0;            // bound for the Bounded kind
};

inline TruncSeries kernel_series(KernelKind kind, int n, int cap,
                                 const KernelParams& params = {}) {
    TruncSeries s = TruncSeries::one(n, cap);
    auto pair_part = [&](TruncSeries acc) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                acc = acc.mul(TruncSeries::geometric_pair(n, cap, i, j));
        return acc;
    };
    switch (kind) {
        case KernelKind::Full:
            for (int i = 0; i < n; ++i) s = s.mul(TruncSeries::geometric(n, cap, i));
            return pair_part(s);
        case KernelKind::RowsEven:
            for (int i = 0; i < n; ++i) s = s.mul(TruncSeries::geometric(n, cap, i, 2));
            return pair_part(s);
        case KernelKind::ColsEven:
            return pair_part(s);
        case KernelKind::RowsMarked:
            for (int i = 0; i < n; ++i) {
                s = s.mul(TruncSeries::geometric(n, cap, i, 2));
                s = s.mul(TruncSeries::linear(n, cap, i, params.mark));
            }
            return pair_part(s);
        case KernelKind::ColsMarked:
            for (int i = 0; i < n; ++i)
                s = s.mul(TruncSeries::geometric(n, cap, i, 1, params.mark));
            return pair_part(s);
        case KernelKind::Bounded:
            return TruncSeries::from_poly(n, cap, bounded_schur_sum(n, params.k));
    }
    throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Laurent prefactor and constant-term extraction
// ---------------------------------------------------------------------------

namespace detail {

/// Laurent polynomial in z_1..z_n over Poly coefficients, exponents keyed by
/// vector<int> (negative entries allowed).
using Laurent = std::map<std::vector<int>, Poly>;

inline void laurent_add(Laurent& p, const std::vector<int>& e, const Poly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = p.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

inline Laurent laurent_mul(const Laurent& a, const Laurent& b, int n) {
    Laurent out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i)
                e[static_cast<size_t>(i)] = ea[static_cast<size_t>(i)] + eb[static_cast<size_t>(i)];
            laurent_add(out, e, ca * cb);
        }
    return out;
}

/// Coefficients of h_i(1/z, t, u) by descending power of z: position g holds
/// the transfer-entry coefficient at column offset g.
inline std::vector<Poly> transfer_row_coefficients(int m, int i, const Poly& t, const Poly& u) {
    std::vector<Poly> out;
    int top = m + i;
    for (int g = 0; g <= top; ++g) {
        Poly c;
        if (top == 0) {
            c = g == 0 ? Poly(1) : Poly(0);
        } else if (top == 1) {
            c = g == 0 ? Poly(1) : (g == 1 ? t * u : Poly(0));
        } else {
            c = Poly(binomial(top - 2, g)) + (t + u) * Integer(binomial(top - 2, g - 1)) +
                t * u * Integer(binomial(top - 2, g - 2));
        }
        out.push_back(c);
    }
    return out;
}

/// prod_{i<j} (1 - z_j/z_i) * prod_k h_{n-k}(1/z_k, t, u), exact.
inline Laurent ct_prefactor(int n, int m, const Poly& t, const Poly& u) {
    Laurent q;
    laurent_add(q, std::vector<int>(static_cast<size_t>(n), 0), Poly(1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Laurent f;
            laurent_add(f, std::vector<int>(static_cast<size_t>(n), 0), Poly(1));
            std::vector<int> e(static_cast<size_t>(n), 0);
            e[static_cast<size_t>(j)] = 1;
            e[static_cast<size_t>(i)] = -1;
            laurent_add(f, e, Poly(-1));
            q = laurent_mul(q, f, n);
        }
    for (int k = 1; k <= n; ++k) {
        Laurent f;
        std::vector<Poly> coeffs = transfer_row_coefficients(m, n - k, t, u);
        for (int g = 0; g < static_cast<int>(coeffs.size()); ++g) {
            std::vector<int> e(static_cast<size_t>(n), 0);
            e[static_cast<size_t>(k - 1)] = -g;
            laurent_add(f, e, coeffs[static_cast<size_t>(g)]);
        }
        q = laurent_mul(q, f, n);
    }
    return q;
}

}  // namespace detail

/// Sufficient per-variable cap: the prefactor's most negative exponent in z_k
/// is -(n-k) - (m+n-k), bounded by 2n+m.
inline int ct_default_cap(int n, int m) { return 2 * n + m; }

/// Constant term of prefactor * kernel; the cap must dominate every negative
/// prefactor exponent (checked).
inline Poly constant_term_of(int n, int m, const Poly& t, const Poly& u, KernelKind kernel,
                             const KernelParams& params = {}, int cap = 0) {
    if (cap == 0) cap = ct_default_cap(n, m);
    detail::Laurent q = detail::ct_prefactor(n, m, t, u);
    for (const auto& [e, c] : q)
        for (int v : e)
            if (-v > cap) throw std::invalid_argument("constant_term: cap too small");
    TruncSeries f = kernel_series(kernel, n, cap, params);
    Poly total;
    for (const auto& [e, c] : q) {
        bool nonpos = true;
        for (int v : e)
            if (v > 0) { nonpos = false; break; }
        if (!nonpos) continue;
        std::vector<int> flip(e.size());
        for (size_t i = 0; i < e.size(); ++i) flip[i] = -e[i];
        Poly fc = f.coeff(flip);
        if (!fc.is_zero()) total += c * fc;
    }
    return total;
}

/// Constant-term route for a weight kind (those with a kernel counterpart).
inline Poly constant_term(const GfRequest& req, int cap = 0) {
    int n = req.n, m = req.m;
    Poly t = Poly::variable(var_t());
    Poly u = Poly::variable(var_u());
    switch (req.kind) {
        case WeightKind::Refined:
            return constant_term_of(n, m, t, Poly(1), KernelKind::Full, {}, cap);
        case WeightKind::Doubly:
            return constant_term_of(n, m, t, u, KernelKind::Full, {}, cap);
        case WeightKind::ColsEven:
            return constant_term_of(n, m, t, Poly(1), KernelKind::RowsEven, {}, cap);
        case WeightKind::RowsEven:
            return constant_term_of(n, m, t, Poly(1), KernelKind::ColsEven, {}, cap);
        case WeightKind::ColsEvenDoubly:
            return constant_term_of(n, m, t, u, KernelKind::RowsEven, {}, cap);
        case WeightKind::OddCols:
            return constant_term_of(n, m, Poly(1), Poly(1), KernelKind::RowsMarked,
                                    {.mark = t, .k = 0}, cap);
        case WeightKind::OddRows:
            return constant_term_of(n, m, Poly(1), Poly(1), KernelKind::ColsMarked,
                                    {.mark = t, .k = 0}, cap);
        case WeightKind::RefinedOddCols:
            return constant_term_of(n, m, t, Poly(1), KernelKind::RowsMarked,
                                    {.mark = u, .k = 0}, cap);
        case WeightKind::Mt:
        case WeightKind::MtTruncated:
            return constant_term_of(n, m, t, Poly(1), KernelKind::Bounded,
                                    {.mark = Poly(1), .k = req.k}, cap);
        default:
            throw std::invalid_argument("constant_term: no kernel for this weight kind");
    }
}

// ---------------------------------------------------------------------------
// The explicit subset sum
// ---------------------------------------------------------------------------

inline constexpr long kSubsetSumGuard = 200000;

/// D: the signed sum over n-element column sets of Pf(A on the complement)
/// times the corresponding maximal minor of B.
inline Poly subset_sum(const PolyMatrix& b, const SkewMatrix& a) {
    int n = b.rows(), total = b.cols();
    if (a.size() != total) throw std::invalid_argument("subset_sum: shape mismatch");
    long count = 1;
    for (int i = 0; i < n; ++i) count = count * (total - i) / (i + 1);
    if (count > kSubsetSumGuard) throw std::invalid_argument("subset_sum: too many subsets");
    std::vector<int> all_rows(static_cast<size_t>(n));
    std::iota(all_rows.begin(), all_rows.end(), 0);
    Poly totalv;
    for (const IndexSet& idx : subsets_of(total, n)) {
        Poly det_b = determinant(b.submatrix(all_rows, idx.zero_based()));
        if (det_b.is_zero()) continue;
        Poly pf = sub_pfaffian(a, idx.complement(total));
        if (pf.is_zero()) continue;
        Poly term = pf * det_b;
        totalv += shuffle_sign(idx, total) < 0 ? -term : term;
    }
    return totalv;
}

/// Subset-sum route for a weight kind, mirroring the block-Pfaffian pairing.
inline Poly d_sum(const GfRequest& req) {
    int n = req.n, m = req.m, N = req.width();
    auto B = [&](BinomialMode mode) { return binomial_matrix(n, m, N, mode); };
    auto A = [&](SkewKind kind, const Poly& param) {
        return build_skew(kind, n + N, SkewParams{.t = param});
    };
    Poly t = Poly::variable(var_t());
    Poly u = Poly::variable(var_u());
    switch (req.kind) {
        case WeightKind::Refined:
            return subset_sum(B(BinomialMode::Refined), A(SkewKind::Alt, t));
        case WeightKind::Doubly:
            return subset_sum(B(BinomialMode::DoublyRefined), A(SkewKind::Alt, t));
        case WeightKind::ColsEven:
            return subset_sum(B(BinomialMode::Refined), A(SkewKind::AltGapPow, Poly(0)));
        case WeightKind::RowsEven:
            return subset_sum(B(BinomialMode::Refined), A(SkewKind::AltParityPow, Poly(0)));
        case WeightKind::ColsEvenDoubly:
            return subset_sum(B(BinomialMode::DoublyRefined), A(SkewKind::AltGapPow, Poly(0)));
        case WeightKind::OddCols:
            return subset_sum(B(BinomialMode::Plain), A(SkewKind::AltGapPow, t));
        case WeightKind::OddRows:
            return subset_sum(B(BinomialMode::Plain), A(SkewKind::AltParityPow, t));
        case WeightKind::RefinedOddCols:
            return subset_sum(B(BinomialMode::Refined), A(SkewKind::AltGapPow, u));
        case WeightKind::Mt: {
            SkewMatrix banded = build_skew(SkewKind::AltBanded, n + N,
                                           SkewParams{.t = std::nullopt, .m = n, .k = req.k});
            Poly pre = subset_sum(B(BinomialMode::Refined), banded);
            int order = req.k / 2;
            for (int j = 0; j < order; ++j)
                if (!pre.coeff_of(var_eps(), j).is_zero())
                    throw std::runtime_error("d_sum: nonvanishing low-order eps coefficient");
            return pre.coeff_of(var_eps(), order);
        }
        case WeightKind::MtTruncated:
            return subset_sum(binomial_matrix_truncated(n, m, N, req.k), A(SkewKind::Alt, t));
        case WeightKind::Neg1:
            return subset_sum(signed_binomial_matrix(n, m, N, SignedMode::Plain),
                              A(SkewKind::Alt, t));
        case WeightKind::Neg1First:
            return subset_sum(signed_binomial_matrix(n, m, N, SignedMode::FirstLevel),
                              A(SkewKind::Alt, t));
        case WeightKind::Neg1Top:
            return subset_sum(signed_binomial_matrix(n, m, N, SignedMode::TopLevel),
                              A(SkewKind::Alt, t));
        case WeightKind::Neg1OddCols:
            return subset_sum(signed_binomial_matrix(n, m, N, SignedMode::Plain),
                              A(SkewKind::AltGapPow, t));
    }
    throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Determinant-ratio cross-check at n = 2
// ---------------------------------------------------------------------------

/// Exact division of an antisymmetric polynomial by (z_2 - z_1), by synthetic
/// division in z_2 over the remaining variables.
inline Poly divide_by_difference(const Poly& p) {
    Var z1 = var_z(1), z2 = var_z(2);
    int d = p.degree(z2);
    Poly q;
    Poly carry;  // running quotient coefficient
    for (int deg = d; deg >= 1; --deg) {
        carry = p.coeff_of(z2, deg) + Poly::variable(z1) * carry;
        q += carry * Poly::variable(z2).pow(deg - 1);
    }
    Poly remainder = p.coeff_of(z2, 0) + Poly::variable(z1) * carry;
    if (!remainder.is_zero()) throw std::domain_error("divide_by_difference: not divisible");
    return q;
}

/// The bounded kernel via the determinant ratio, at n = 2 only: the numerator
/// determinant divided by (z_2 - z_1) and by the three geometric denominators
/// (as series), compared against the finite Schur sum elsewhere.
inline TruncSeries bounded_kernel_by_ratio(int k, int cap) {
    Var z1 = var_z(1), z2 = var_z(2);
    auto entry = [&](Var z, int j) {
        return Poly::variable(z).pow(j - 1) - Poly::variable(z).pow(k + 4 - j);
    };
    Poly num = entry(z1, 1) * entry(z2, 2) - entry(z1, 2) * entry(z2, 1);
    Poly reduced = divide_by_difference(num);
    TruncSeries s = TruncSeries::from_poly(2, cap, reduced);
    s = s.mul(TruncSeries::geometric(2, cap, 0));
    s = s.mul(TruncSeries::geometric(2, cap, 1));
    s = s.mul(TruncSeries::geometric_pair(2, cap, 0, 1));
    return s;
}

}  // namespace ppgf
