#pragma once

// Truncated multivariate power series in z_1..z_n with polynomial (t, u)
// coefficients, plus the symmetric polynomials needed for the kernel
// expansions: complete homogeneous h_r, Schur polynomials via Jacobi-Trudi,
// and the bounded Schur sum (an exact polynomial, no truncation error).
//
// Multiplication truncates any exponent above the per-variable cap; since all
// series here have nonnegative support, every retained coefficient is exact.

#include "ppgf/poly.hpp"
#include "ppgf/partition.hpp"
#include "ppgf/pfaffian.hpp"

#include <map>
#include <vector>

namespace ppgf {

class TruncSeries {
public:
    TruncSeries(int nvars, int cap) : nvars_(nvars), cap_(cap) {}

    static TruncSeries one(int nvars, int cap) {
        TruncSeries s(nvars, cap);
        s.coeffs_[std::vector<int>(static_cast<size_t>(nvars), 0)] = Poly(1);
        return s;
    }

    int nvars() const { return nvars_; }
    int cap() const { return cap_; }
    const std::map<std::vector<int>, Poly>& coeffs() const { return coeffs_; }

    void add(const std::vector<int>& e, const Poly& c) {
        if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("series arity");
        for (int v : e)
            if (v < 0 || v > cap_) return;
        if (c.is_zero()) return;
        auto [it, inserted] = coeffs_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    Poly coeff(const std::vector<int>& e) const {
        for (int v : e)
            if (v > cap_) throw std::out_of_range("series coefficient beyond the cap");
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? Poly(0) : it->second;
    }

    TruncSeries mul(const TruncSeries& o) const {
        if (o.nvars_ != nvars_ || o.cap_ != cap_) throw std::invalid_argument("series mismatch");
        TruncSeries out(nvars_, cap_);
        for (const auto& [ea, ca] : coeffs_)
            for (const auto& [eb, cb] : o.coeffs_) {
                std::vector<int> e(static_cast<size_t>(nvars_));
                bool keep = true;
                for (int i = 0; i < nvars_; ++i) {
                    e[static_cast<size_t>(i)] =
                        ea[static_cast<size_t>(i)] + eb[static_cast<size_t>(i)];
                    if (e[static_cast<size_t>(i)] > cap_) { keep = false; break; }
                }
                if (keep) out.add(e, ca * cb);
            }
        return out;
    }

    /// Geometric factor sum_r (scale^r) z_v^{r*step}, v 0-based.
    static TruncSeries geometric(int nvars, int cap, int v, int step = 1,
                                 const Poly& scale = Poly(1)) {
        TruncSeries s(nvars, cap);
        Poly c(1);
        for (int r = 0; r * step <= cap; ++r) {
            std::vector<int> e(static_cast<size_t>(nvars), 0);
            e[static_cast<size_t>(v)] = r * step;
            s.add(e, c);
            c *= scale;
        }
        return s;
    }

    /// Pair factor sum_r (z_a z_b)^r.
    static TruncSeries geometric_pair(int nvars, int cap, int a, int b) {
        TruncSeries s(nvars, cap);
        for (int r = 0; r <= cap; ++r) {
            std::vector<int> e(static_cast<size_t>(nvars), 0);
            e[static_cast<size_t>(a)] = r;
            e[static_cast<size_t>(b)] = r;
            s.add(e, Poly(1));
        }
        return s;
    }

    /// Linear factor 1 + scale * z_v.
    static TruncSeries linear(int nvars, int cap, int v, const Poly& scale) {
        TruncSeries s = one(nvars, cap);
        std::vector<int> e(static_cast<size_t>(nvars), 0);
        e[static_cast<size_t>(v)] = 1;
        s.add(e, scale);
        return s;
    }

    /// Exact polynomial as a series; throws if it exceeds the cap.
    static TruncSeries from_poly(int nvars, int cap, const Poly& p) {
        TruncSeries s(nvars, cap);
        for (const auto& [e, c] : p.terms()) {
            std::vector<int> exps(static_cast<size_t>(nvars), 0);
            for (size_t i = 0; i < e.size(); ++i) {
                if (e.raw()[i] == 0) continue;
                bool placed = false;
                for (int v = 0; v < nvars; ++v)
                    if (Var(static_cast<int>(i)) == var_z(v + 1)) {
                        exps[static_cast<size_t>(v)] = e.raw()[i];
                        placed = true;
                    }
                if (!placed) throw std::invalid_argument("from_poly: non-series variable");
            }
            for (int v : exps)
                if (v > cap) throw std::out_of_range("from_poly: beyond the cap");
            s.add(exps, Poly::monomial(ExpVec(), c));
        }
        return s;
    }

private:
    int nvars_;
    int cap_;
    std::map<std::vector<int>, Poly> coeffs_;
};

// ---------------------------------------------------------------------------
// Symmetric polynomials in z_1..z_n
// ---------------------------------------------------------------------------

/// Complete homogeneous symmetric polynomial h_r(z_1..z_n), exact.
inline Poly complete_homogeneous(int r, int n) {
    if (r < 0) return Poly(0);
    if (r == 0) return Poly(1);
    // h over k variables by the recurrence h_r^{(k)} = sum_j z_k^j h_{r-j}^{(k-1)}
    std::vector<Poly> h(static_cast<size_t>(r) + 1);
    h[0] = Poly(1);
    for (int k = 1; k <= n; ++k) {
        Poly zk = Poly::variable(var_z(k));
        std::vector<Poly> next(static_cast<size_t>(r) + 1);
        next[0] = Poly(1);
        for (int d = 1; d <= r; ++d) {
            // next_d = h_d^{(k-1)} + z_k * next_{d-1}
            next[static_cast<size_t>(d)] =
                (k == 1 ? (d == 0 ? Poly(1) : Poly(0)) : h[static_cast<size_t>(d)]) +
                zk * next[static_cast<size_t>(d - 1)];
        }
        h = next;
    }
    return h[static_cast<size_t>(r)];
}

/// Schur polynomial s_lambda(z_1..z_n) by the Jacobi-Trudi determinant over
/// complete homogeneous polynomials.
inline Poly schur_polynomial(const Partition& lambda, int n) {
    if (lambda.length() > n) return Poly(0);
    int l = lambda.length();
    if (l == 0) return Poly(1);
    PolyMatrix jt(l, l);
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j)
            jt.at(i - 1, j - 1) = complete_homogeneous(lambda.part(i) - i + j, n);
    return determinant(jt);
}

/// Finite Schur sum over partitions in the k x n box — the bounded kernel,
/// exact as a polynomial.
inline Poly bounded_schur_sum(int n, int k) {
    Poly total;
    for (const Partition& lam : partitions_in_box(n, k)) total += schur_polynomial(lam, n);
    return total;
}

}  // namespace ppgf
