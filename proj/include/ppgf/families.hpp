#pragma once

// Constructors for the structured matrices driving the generating-function
// identities.  Skew families are named by their entry pattern (upper triangle,
// 1-based i < j):
//
//   ones            a_ij = 1
//   alt             a_ij = (-1)^{j-i-1}
//   parity_pow      a_ij = t^{rem(i-1,2) + rem(j,2)}
//   gap_pow         a_ij = t^{j-i-1}
//   alt_gap_pow     a_ij = (-1)^{j-i-1} t^{j-i-1}
//   alt_parity_pow  a_ij = (-1)^{j-i-1} t^{rem(n+1-i,2) + rem(n-j,2)}
//   banded          a_ij = 1 on the leading band (j <= m+k), eps outside
//   alt_banded      the signed version, with the band split depending on the
//                   parity of k
//
// The sub-Pfaffians of these families on partition index sets evaluate to
// monomial weights (odd-row / odd-column counters, band indicators), which is
// what makes the weighted subset sums collapse to a single block Pfaffian.
//
// Rectangular families: the binomial transfer matrices B(t, u) whose rows are
// elementary symmetric functions of weighted level variables, their truncated
// variant, and the signed q-binomial (q = -1) matrices for the signed
// enumerations.

#include "ppgf/matrix.hpp"
#include "ppgf/numbers.hpp"
#include "ppgf/partition.hpp"
#include "ppgf/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ppgf {

enum class SkewKind {
    Ones,
    Alt,
    ParityPow,
    GapPow,
    AltGapPow,
    AltParityPow,
    Banded,
    AltBanded,
};

struct SkewParams {
    std::optional<Poly> t;  // substituted for the weight variable when given
    int m = 0;              // band offset for the banded kinds
    int k = 0;              // band width for the banded kinds
};

inline SkewMatrix build_skew(SkewKind kind, int n, const SkewParams& params = {}) {
    Poly t = params.t.value_or(Poly::variable(var_t()));
    Poly eps = Poly::variable(var_eps());
    auto tpow = [&](int e) { return t.pow(e); };

    switch (kind) {
        case SkewKind::Ones:
            return SkewMatrix::from_upper(n, [](int, int) { return Poly(1); });
        case SkewKind::Alt:
            return SkewMatrix::from_upper(
                n, [](int i, int j) { return Poly(sign_pow(j - i - 1)); });
        case SkewKind::ParityPow:
            return SkewMatrix::from_upper(
                n, [&](int i, int j) { return tpow(static_cast<int>(rem(i - 1, 2) + rem(j, 2))); });
        case SkewKind::GapPow:
            return SkewMatrix::from_upper(n, [&](int i, int j) { return tpow(j - i - 1); });
        case SkewKind::AltGapPow:
            return SkewMatrix::from_upper(n, [&](int i, int j) {
                return tpow(j - i - 1) * sign_pow(j - i - 1);
            });
        case SkewKind::AltParityPow:
            return SkewMatrix::from_upper(n, [&](int i, int j) {
                return tpow(static_cast<int>(rem(n + 1 - i, 2) + rem(n - j, 2))) *
                       sign_pow(j - i - 1);
            });
        case SkewKind::Banded: {
            int mk = params.m + params.k;
            if (params.m < 1 || params.m > n || params.k < 0 || params.k > n - params.m)
                throw std::invalid_argument("banded kind: need 1 <= m <= n, 0 <= k <= n-m");
            return SkewMatrix::from_upper(n, [&](int i, int j) {
                (void)i;
                return j <= mk ? Poly(1) : eps;
            });
        }
        case SkewKind::AltBanded: {
            int mk = params.m + params.k;
            if (params.m < 1 || params.m > n || params.k < 0 || params.k > n - params.m)
                throw std::invalid_argument("alt banded kind: need 1 <= m <= n, 0 <= k <= n-m");
            bool even = params.k % 2 == 0;
            return SkewMatrix::from_upper(n, [&](int i, int j) {
                Poly sign(sign_pow(j - i - 1));
                if (even) return i <= mk ? sign * eps : sign;
                return j <= mk ? sign * eps : sign;
            });
        }
    }
    throw std::logic_error("unreachable");
}

inline SkewKind skew_kind_from_string(const std::string& s) {
    if (s == "ones") return SkewKind::Ones;
    if (s == "alt") return SkewKind::Alt;
    if (s == "parity-pow") return SkewKind::ParityPow;
    if (s == "gap-pow") return SkewKind::GapPow;
    if (s == "alt-gap-pow") return SkewKind::AltGapPow;
    if (s == "alt-parity-pow") return SkewKind::AltParityPow;
    if (s == "banded") return SkewKind::Banded;
    if (s == "alt-banded") return SkewKind::AltBanded;
    throw std::invalid_argument("unknown skew kind: " + s);
}

// ---------------------------------------------------------------------------
// Binomial transfer matrices
// ---------------------------------------------------------------------------

/// Elementary symmetric polynomial e_r(args) of given ring elements.
inline Poly elementary_symmetric(int r, const std::vector<Poly>& args) {
    if (r < 0 || r > static_cast<int>(args.size())) return Poly(0);
    // e-table by the one-variable-at-a-time recurrence
    std::vector<Poly> e(static_cast<size_t>(r) + 1);
    e[0] = Poly(1);
    int filled = 0;
    for (const Poly& a : args) {
        int top = std::min<int>(r, ++filled);
        for (int j = top; j >= 1; --j) e[static_cast<size_t>(j)] += e[static_cast<size_t>(j - 1)] * a;
    }
    return e[static_cast<size_t>(r)];
}

enum class BinomialMode { Plain, Refined, DoublyRefined, General };

struct BinomialParams {
    Poly t = Poly::variable(var_t());
    Poly u = Poly::variable(var_u());
    std::vector<Poly> level_t;  // t_1..t_{n+m}, general mode only
    std::vector<Poly> level_x;  // x_1..x_{n+m}, general mode only
};

/// The n x (n+N) transfer matrix with rows 0..n-1 and columns 0..n+N-1.
/// Row i lists e^{(i+m)}_{j-i} of the weighted level variables
/// (t_1 x_1, ..., t_{i+m-1} x_{i+m-1}, T_{i+m} x_{i+m}) with
/// T_i = prod_{k>=i} t_k; the plain / refined / doubly refined modes are its
/// binomial specializations.
inline PolyMatrix binomial_matrix(int n, int m, int N, BinomialMode mode,
                                  const BinomialParams& params = {}) {
    if (n < 1 || m < 0 || N < 1) throw std::invalid_argument("binomial_matrix: bad dimensions");
    PolyMatrix b(n, n + N);
    const Poly& t = params.t;
    const Poly& u = params.u;

    if (mode == BinomialMode::General) {
        int levels = n + m;
        if (static_cast<int>(params.level_t.size()) != levels ||
            static_cast<int>(params.level_x.size()) != levels)
            throw std::invalid_argument("binomial_matrix: general mode needs n+m level weights");
        // suffix products T_i = t_i * t_{i+1} * ... * t_{n+m}
        std::vector<Poly> suffix(static_cast<size_t>(levels) + 2, Poly(1));
        for (int i = levels; i >= 1; --i)
            suffix[static_cast<size_t>(i)] =
                params.level_t[static_cast<size_t>(i - 1)] * suffix[static_cast<size_t>(i + 1)];
        for (int i = 0; i < n; ++i) {
            std::vector<Poly> args;
            for (int k = 1; k <= i + m; ++k) {
                Poly tk = (k == i + m) ? suffix[static_cast<size_t>(k)]
                                       : params.level_t[static_cast<size_t>(k - 1)];
                args.push_back(tk * params.level_x[static_cast<size_t>(k - 1)]);
            }
            for (int j = 0; j < n + N; ++j)
                b.at(i, j) = elementary_symmetric(j - i, args);
        }
        return b;
    }

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n + N; ++j) {
            int g = j - i;
            switch (mode) {
                case BinomialMode::Plain:
                    b.at(i, j) = Poly(binomial(i + m, g));
                    break;
                case BinomialMode::Refined:
                    if (i + m == 0)
                        b.at(i, j) = Poly(j == 0 ? 1 : 0);
                    else
                        b.at(i, j) = Poly(binomial(i + m - 1, g)) +
                                     t * Integer(binomial(i + m - 1, g - 1));
                    break;
                case BinomialMode::DoublyRefined:
                    if (i + m == 0)
                        b.at(i, j) = Poly(j == 0 ? 1 : 0);
                    else if (i + m == 1)
                        b.at(i, j) = Poly(g == 0 ? 1 : 0) +
                                     t * u * Integer(g == 1 ? 1 : 0);
                    else
                        b.at(i, j) = Poly(binomial(i + m - 2, g)) +
                                     (t + u) * Integer(binomial(i + m - 2, g - 1)) +
                                     t * u * Integer(binomial(i + m - 2, g - 2));
                    break;
                case BinomialMode::General:
                    break;  // handled above
            }
        }
    }
    return b;
}

/// Variant with all columns >= n+k zeroed out.
inline PolyMatrix binomial_matrix_truncated(int n, int m, int N, int k,
                                            const Poly& t = Poly::variable(var_t())) {
    if (k < 0 || k > n + m - 1)
        throw std::invalid_argument("binomial_matrix_truncated: need 0 <= k <= n+m-1");
    BinomialParams params;
    params.t = t;
    PolyMatrix b = binomial_matrix(n, m, N, BinomialMode::Refined, params);
    for (int i = 0; i < n; ++i)
        for (int j = n + k; j < n + N; ++j) b.at(i, j) = Poly(0);
    return b;
}

// ---------------------------------------------------------------------------
// Signed q-binomial (q = -1) matrices
// ---------------------------------------------------------------------------

/// Gaussian binomial [a over b] at q = -1, by the closed form: zero when a is
/// even and b odd, else binom(floor(a/2), floor(b/2)); zero outside 0<=b<=a.
inline Integer qbinomial_neg1(int a, int b) {
    if (b < 0 || b > a) return 0;
    if (a % 2 == 0 && b % 2 == 1) return 0;
    return binomial(a / 2, b / 2);
}

enum class SignedMode { Plain, FirstLevel, TopLevel };

/// The n x (n+N) matrices of signed q = -1 binomials used for the signed
/// enumerations: Plain carries no weight; FirstLevel and TopLevel carry a t
/// refining, respectively, the lowest-level and the saturated-part statistic.
inline PolyMatrix signed_binomial_matrix(int n, int m, int N, SignedMode mode,
                                         const Poly& t = Poly::variable(var_t())) {
    if (n < 1 || m < 0 || N < 1)
        throw std::invalid_argument("signed_binomial_matrix: bad dimensions");
    PolyMatrix b(n, n + N);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n + N; ++j) {
            int g = j - i;
            Integer sign = sign_pow(static_cast<long>(g + 1) * g / 2);
            switch (mode) {
                case SignedMode::Plain:
                    b.at(i, j) = Poly(sign * qbinomial_neg1(m + i, g));
                    break;
                case SignedMode::FirstLevel:
                    if (i + m == 0) {
                        b.at(i, j) = Poly(j == 0 ? 1 : 0);
                    } else {
                        Poly inner = Poly(sign_pow(g) * qbinomial_neg1(m + i - 1, g)) +
                                     t * qbinomial_neg1(m + i - 1, g - 1);
                        b.at(i, j) = inner * sign;
                    }
                    break;
                case SignedMode::TopLevel:
                    if (i + m == 0) {
                        b.at(i, j) = Poly(j == 0 ? 1 : 0);
                    } else {
                        Poly inner = Poly(qbinomial_neg1(m + i - 1, g)) +
                                     t * (sign_pow(m + 2 * i - j) * qbinomial_neg1(m + i - 1, g - 1));
                        b.at(i, j) = inner * sign;
                    }
                    break;
            }
        }
    }
    return b;
}

/// Smallest even N admissible for the block identities at given (n, m).
inline int default_block_width(int n, int m) {
    int N = n + m - 1;
    if (N < 2) N = 2;
    if (N % 2 == 1) ++N;
    return N;
}

}  // namespace ppgf
