#pragma once

// The verification harness: every identity the library implements, run as a
// flat list of cases with two independently computed sides.  Theorem cases
// gate (a mismatch is a failure); conjecture and observation cases report
// match/mismatch without failing the run.  Output is deterministic: fixed
// seeds, a self-contained random stream, and canonical case order.

#include "ppgf/bijections.hpp"
#include "ppgf/constterm.hpp"
#include "ppgf/genfun.hpp"
#include "ppgf/refnum.hpp"
#include "ppgf/statistics.hpp"

#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace ppgf {

struct VerificationCase {
    std::string id;
    std::vector<std::pair<std::string, std::string>> params;
    std::string method_lhs;
    std::string method_rhs;
    std::string lhs;
    std::string rhs;
    bool match = false;
    bool gating = true;  // theorems gate, conjectures only report
};

namespace detail {

struct CaseSink {
    std::vector<VerificationCase>& out;

    void push(std::string id, std::vector<std::pair<std::string, std::string>> params,
              std::string method_lhs, std::string lhs, std::string method_rhs, std::string rhs,
              bool gating = true) {
        VerificationCase c;
        c.id = std::move(id);
        c.params = std::move(params);
        c.method_lhs = std::move(method_lhs);
        c.method_rhs = std::move(method_rhs);
        c.lhs = std::move(lhs);
        c.rhs = std::move(rhs);
        c.match = c.lhs == c.rhs;
        c.gating = gating;
        out.push_back(std::move(c));
    }

    void push_poly(std::string id, std::vector<std::pair<std::string, std::string>> params,
                   std::string method_lhs, const Poly& lhs, std::string method_rhs,
                   const Poly& rhs, bool gating = true) {
        push(std::move(id), std::move(params), std::move(method_lhs), lhs.to_string(),
             std::move(method_rhs), rhs.to_string(), gating);
    }
};

/// Deterministic small integers independent of the standard library's
/// distribution implementations.
struct SmallRng {
    std::mt19937_64 engine;
    explicit SmallRng(uint64_t seed) : engine(seed) {}
    int uniform(int lo, int hi) {
        return lo + static_cast<int>(engine() % static_cast<uint64_t>(hi - lo + 1));
    }
};

inline std::string num(long v) { return std::to_string(v); }

/// t^d p(1/t): the reversal that exchanges the two level statistics.
inline Poly reverse_in(const Poly& p, Var v, int d) {
    Poly out;
    for (int j = 0; j <= d; ++j)
        out += p.coeff_of(v, j) * Poly::variable(v).pow(d - j);
    if (p.degree(v) > d) throw std::invalid_argument("reverse_in: degree above d");
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Statistics table rendering
// ---------------------------------------------------------------------------

/// The compact per-class table: one row per statistic, one column per object
/// in enumeration order.
inline std::string statistics_table(const CsppClass& cls) {
    auto objs = enumerate_cspp(cls);
    std::ostringstream out;
    for (int r = 1; r <= cls.levels(); ++r) {
        out << "Ubar_" << r;
        for (const auto& c : objs) out << "," << ubar_stat(c, cls, r);
        out << "\n";
    }
    out << "V_R";
    for (const auto& c : objs) out << "," << odd_rows(c);
    out << "\nV_C";
    for (const auto& c : objs) out << "," << odd_cols(c);
    out << "\n";
    return out.str();
}

/// The expected table for the seven objects of the 3-level class, computed
/// from the defining statistics (two cells of the traditionally tabulated
/// version disagree with the definitions; the definitions win here).
inline std::string expected_table_levels3() {
    return "Ubar_1,0,1,2,0,1,1,2\n"
           "Ubar_2,0,0,1,1,2,1,2\n"
           "Ubar_3,0,0,1,1,2,1,2\n"
           "V_R,0,1,0,1,0,2,1\n"
           "V_C,0,1,2,1,2,0,1\n";
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

inline std::vector<std::pair<int, int>> classes_up_to(int max_levels, int min_levels = 1) {
    std::vector<std::pair<int, int>> out;
    for (int levels = min_levels; levels <= max_levels; ++levels)
        for (int n = 1; n <= levels; ++n) out.emplace_back(n, levels - n);
    return out;
}

inline std::vector<VerificationCase> verify_bijections(int max_levels = 5,
                                                       int max_cube_levels = 4) {
    std::vector<VerificationCase> cases;
    detail::CaseSink sink{cases};

    for (auto [n, m] : classes_up_to(max_levels)) {
        CsppClass cls{n, m};
        auto cs = enumerate_cspp(cls);
        auto ts = enumerate_tspp(cls);

        sink.push("count-formula", {{"n", detail::num(n)}, {"m", detail::num(m)}},
                  "enumeration", detail::num(static_cast<long>(cs.size())), "product-formula",
                  card_cspp(n, m).get_str());

        bool roundtrip = cs.size() == ts.size();
        bool transport = true;
        std::set<std::vector<int>> images;
        for (const auto& c : cs) {
            ShiftedPP b = cspp_to_tspp(c, cls);
            images.insert(b.reading_word());
            if (!(tspp_to_cspp(b) == c)) roundtrip = false;
            for (int r = 1; r <= cls.levels() && transport; ++r)
                if (ubar_stat(c, cls, r) != cls.levels() - 1 - level_stat(b, r))
                    transport = false;
        }
        if (images.size() != cs.size()) roundtrip = false;
        for (const auto& b : ts)
            if (!(cspp_to_tspp(tspp_to_cspp(b), cls) == b)) roundtrip = false;

        sink.push("roundtrip-shifted", {{"n", detail::num(n)}, {"m", detail::num(m)}},
                  "roundtrip+injective", roundtrip ? "ok" : "violated", "expected", "ok");
        sink.push("stat-transport", {{"n", detail::num(n)}, {"m", detail::num(m)}},
                  "complement-statistic", transport ? "ok" : "violated", "expected", "ok");

        if (n + m <= max_cube_levels) {
            bool cube_ok = true;
            long half = 0;
            std::set<long> distinct;
            for (const auto& c : cs) {
                Tsscpp3D cube = cspp_to_tsscpp(c, cls);
                long side = cube.side();
                half = side * side * side / 2;
                if (!validate_tsscpp(cube)) cube_ok = false;
                if (cube.filled_count() != half) cube_ok = false;
                if (!(tsscpp_to_cspp(cube) == c)) cube_ok = false;
                auto moves = orbit_moves(cube);
                if (moves[0] != 0) cube_ok = false;
                if (moves[0] + moves[1] + moves[2] != c.weight()) cube_ok = false;
            }
            sink.push("roundtrip-cube", {{"n", detail::num(n)}, {"m", detail::num(m)}},
                      "cube-validation", cube_ok ? "ok" : "violated", "expected", "ok");
        }
    }
    return cases;
}

inline std::vector<VerificationCase> verify_statistics(int max_levels = 5) {
    std::vector<VerificationCase> cases;
    detail::CaseSink sink{cases};

    sink.push("statistics-table-levels3", {}, "enumerated", statistics_table(CsppClass{3, 0}),
              "frozen", expected_table_levels3());

    for (auto [n, m] : classes_up_to(max_levels)) {
        CsppClass cls{n, m};
        auto cs = enumerate_cspp(cls);
        int levels = cls.levels();

        // the two top statistics coincide object by object
        if (levels >= 2) {
            bool same = true;
            for (const auto& c : cs)
                if (ubar_stat(c, cls, levels - 1) != ubar_stat(c, cls, levels)) same = false;
            sink.push("top-two-levels-agree", {{"n", detail::num(n)}, {"m", detail::num(m)}},
                      "objectwise", same ? "ok" : "violated", "expected", "ok");
        }

        // r-independence of the distribution, and the odd-column equality
        WeightSpec w1;
        w1.with(StatKind::UbarR, var_t(), 1);
        Poly base = brute_gf(cs, cls, w1);
        bool equidistributed = true;
        for (int r = 2; r <= levels; ++r) {
            WeightSpec wr;
            wr.with(StatKind::UbarR, var_t(), r);
            if (brute_gf(cs, cls, wr) != base) equidistributed = false;
        }
        WeightSpec wvc;
        wvc.with(StatKind::OddCols, var_t());
        sink.push("level-equidistribution", {{"n", detail::num(n)}, {"m", detail::num(m)}},
                  "all-levels", equidistributed ? "ok" : "violated", "expected", "ok");
        sink.push_poly("odd-column-equality", {{"n", detail::num(n)}, {"m", detail::num(m)}},
                       "t^{V_C}", brute_gf(cs, cls, wvc), "t^{ubar}", base);

        // shifting into the columns-even subclass one level up
        if (n + m + 1 <= max_levels + 1) {
            CsppClass up{n, m + 1};
            auto cs_up = filtered(enumerate_cspp(up), all_cols_even);
            WeightSpec wu;
            wu.with(StatKind::UbarR, var_t(), 1);
            sink.push_poly("columns-even-shift", {{"n", detail::num(n)}, {"m", detail::num(m)}},
                           "cols-even level up", brute_gf(cs_up, up, wu), "t^{ubar}", base);
        }

        // banded subsets transport; the polynomials exchange by reversal
        auto ts = enumerate_tspp(cls);
        for (int k = 0; k <= levels - 1; ++k) {
            auto ck = cspp_at_most_k_rows(cs, k);
            auto tk = tspp_k(ts, k);
            WeightSpec wc;
            wc.with(StatKind::UbarR, var_t(), 1);
            WeightSpec wt;
            wt.with(StatKind::UR, var_t(), 1);
            Poly cpoly = brute_gf(ck, cls, wc);
            Poly tpoly = brute_gf_tspp(tk, wt);
            sink.push("banded-subset-count",
                      {{"n", detail::num(n)}, {"m", detail::num(m)}, {"k", detail::num(k)}},
                      "plane-partitions", detail::num(static_cast<long>(ck.size())),
                      "shifted-triangles", detail::num(static_cast<long>(tk.size())));
            sink.push_poly("banded-subset-transport",
                           {{"n", detail::num(n)}, {"m", detail::num(m)}, {"k", detail::num(k)}},
                           "shifted t^{U}", tpoly, "reversed plane t^{ubar}",
                           detail::reverse_in(cpoly, var_t(), levels - 1));
        }

        // the literal (k, x, y) refinements: reported, mismatches flagged
        long mismatches = 0, triples = 0;
        for (int k = 0; k <= levels - 1; ++k)
            for (int x = 0; x <= levels; ++x)
                for (int y = 0; y <= levels; ++y) {
                    size_t a = cspp_kxy(cs, cls, k, x, y).size();
                    size_t b = tspp_kxy(ts, k, x, y).size();
                    if (a != b) ++mismatches;
                    if (a || b) ++triples;
                }
        sink.push("kxy-correspondence", {{"n", detail::num(n)}, {"m", detail::num(m)}},
                  "mismatching-triples", detail::num(mismatches),
                  "expected-if-literal-match", "0", /*gating=*/false);
        (void)triples;
    }

    // the odd-row polynomials up to six levels, with the published relations
    std::vector<Poly> vr;
    for (int n = 1; n <= 6; ++n) {
        CsppClass cls{n, 0};
        WeightSpec w;
        w.with(StatKind::OddRows, var_t());
        vr.push_back(brute_gf(enumerate_cspp(cls), cls, w));
    }
    Poly t = Poly::variable(var_t());
    sink.push_poly("odd-row-poly", {{"n", "1"}}, "brute", vr[0], "published", Poly(1));
    sink.push_poly("odd-row-poly", {{"n", "2"}}, "brute", vr[1], "published", parse_poly("1 + t"));
    sink.push_poly("odd-row-poly", {{"n", "3"}}, "brute", vr[2], "published",
                   parse_poly("3 + 3*t + t^2"));
    sink.push_poly("odd-row-poly", {{"n", "4"}}, "brute", vr[3], "published-relation",
                   (Poly(1) + t) * vr[2] * Integer(3));
    sink.push_poly("odd-row-poly", {{"n", "5"}}, "brute", vr[4], "published",
                   parse_poly("26 + 52*t + 44*t^2 + 18*t^3 + 3*t^4") * Integer(3));
    Poly base5 = parse_poly("26 + 52*t + 44*t^2 + 18*t^3 + 3*t^4");
    sink.push_poly("odd-row-poly", {{"n", "6"}}, "brute", vr[5], "corrected-relation",
                   (Poly(1) + t) * base5 * Integer(26));
    sink.push_poly("odd-row-poly-published-p6", {{"n", "6"}}, "brute", vr[5],
                   "published-relation 26(1+t)p5", (Poly(1) + t) * vr[4] * Integer(26),
                   /*gating=*/false);

    return cases;
}

inline std::vector<VerificationCase> verify_pfaffian_core(int random_cases = 200,
                                                          int msf_cases = 50) {
    std::vector<VerificationCase> cases;
    detail::CaseSink sink{cases};
    detail::SmallRng rng(0x5eed);

    // oracle agreement and the determinant square
    long bad_oracle = 0, bad_square = 0;
    for (int i = 0; i < random_cases; ++i) {
        int n = 2 + 2 * rng.uniform(0, 4);  // sizes 2..10
        SkewMatrix a = SkewMatrix::from_upper(
            n, [&](int, int) { return Poly(rng.uniform(-9, 9)); });
        Poly fast = pfaffian(a);
        if (fast != pfaffian_by_matchings(a)) ++bad_oracle;
        if (fast * fast != determinant(a.matrix())) ++bad_square;
    }
    sink.push("pfaffian-oracle-agreement", {{"cases", detail::num(random_cases)}},
              "mismatches", detail::num(bad_oracle), "expected", "0");
    sink.push("pfaffian-squares-determinant", {{"cases", detail::num(random_cases)}},
              "mismatches", detail::num(bad_square), "expected", "0");

    // minor summation on random rectangular data
    long bad_msf = 0, bad_quad = 0;
    for (int i = 0; i < msf_cases; ++i) {
        int n = 2 + rng.uniform(0, 6);
        int parity = n % 2;
        int m = 1 + rng.uniform(0, n - 1);
        if ((n - m) % 2 != 0) m = std::max(1, m - 1);
        if ((n - m) % 2 != 0) continue;
        (void)parity;
        PolyMatrix tmat(m, n);
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < n; ++c) tmat.at(r, c) = Poly(rng.uniform(-5, 5));
        SkewMatrix b = SkewMatrix::from_upper(
            n, [&](int, int) { return Poly(rng.uniform(-5, 5)); });
        auto rep = minor_summation_check(tmat, b);
        if (!rep.block_matches) ++bad_msf;
        if (!rep.quadratic_matches) ++bad_quad;
    }
    sink.push("minor-summation-random", {{"cases", detail::num(msf_cases)}}, "mismatches",
              detail::num(bad_msf), "expected", "0");
    sink.push("minor-summation-quadratic-form", {{"cases", detail::num(msf_cases)}},
              "mismatches", detail::num(bad_quad), "expected", "0");

    // subset identities for the copfaffian matrix
    long bad_plucker = 0;
    for (int i = 0; i < 3; ++i) {
        SkewMatrix a = SkewMatrix::from_upper(
            6, [&](int, int) { return Poly(rng.uniform(-5, 5)); });
        Poly pf = pfaffian(a);
        if (pf.is_zero()) continue;
        SkewMatrix hat = copfaffian_matrix(a);
        for (int r = 1; r <= 3; ++r)
            for (const IndexSet& idx : subsets_of(6, 2 * r)) {
                Poly lhs = sub_pfaffian(hat, idx);
                Poly rhs = pfaffian(a.restrict(idx.complement(6)));
                for (int k = 0; k < r - 1; ++k) rhs *= pf;
                if (shuffle_sign(idx, 6) < 0) rhs = -rhs;
                if (lhs != rhs) ++bad_plucker;
            }
    }
    sink.push("copfaffian-subset-identity", {{"size", "6"}}, "mismatches",
              detail::num(bad_plucker), "expected", "0");

    // the full sub-Pfaffian sweep over the named families
    Poly t = Poly::variable(var_t());
    long bad_sweep = 0, sweep_total = 0;
    for (int n = 2; n <= 8; ++n) {
        for (int m = 1; m <= std::min(4, n); ++m) {
            for (const Partition& lam : partitions_in_box(m, n - m)) {
                IndexSet idx = index_set_of_partition(lam, m, n);
                IndexSet comp = idx.complement(n);
                Integer sgn = sign_pow(lam.weight());

                if (m % 2 == 0) {
                    ++sweep_total;
                    if (sub_pfaffian(build_skew(SkewKind::Ones, n), idx) != Poly(1)) ++bad_sweep;
                    if (sub_pfaffian(build_skew(SkewKind::GapPow, n), idx) !=
                        t.pow(lam.odd_cols()))
                        ++bad_sweep;
                    if (sub_pfaffian(build_skew(SkewKind::ParityPow, n), idx) !=
                        t.pow(lam.odd_rows()))
                        ++bad_sweep;
                    for (int k = 0; k <= n - m; ++k) {
                        Poly pf = sub_pfaffian(
                            build_skew(SkewKind::Banded, n,
                                       SkewParams{.t = std::nullopt, .m = m, .k = k}),
                            idx);
                        Poly limit = pf.coeff_of(var_eps(), 0);
                        Poly want = lam.first() <= k ? Poly(1) : Poly(0);
                        if (limit != want) ++bad_sweep;
                    }
                    // shuffle sign matches the weight parity
                    if (Poly(Integer(shuffle_sign(idx, n))) != Poly(sgn)) ++bad_sweep;
                }
                if ((n - m) % 2 == 0) {
                    ++sweep_total;
                    if (sub_pfaffian(build_skew(SkewKind::Alt, n), comp) != Poly(sgn))
                        ++bad_sweep;
                    if (sub_pfaffian(build_skew(SkewKind::AltGapPow, n), comp) !=
                        t.pow(lam.odd_rows()) * sgn)
                        ++bad_sweep;
                    if (sub_pfaffian(build_skew(SkewKind::AltParityPow, n), comp) !=
                        t.pow(lam.odd_cols()) * sgn)
                        ++bad_sweep;
                    // the unmarked specializations pick out even rows/columns
                    Poly gap0 = sub_pfaffian(
                        build_skew(SkewKind::AltGapPow, n, SkewParams{.t = Poly(0)}), comp);
                    if (gap0 != (lam.all_rows_even() ? Poly(sgn) : Poly(0))) ++bad_sweep;
                    Poly par0 = sub_pfaffian(
                        build_skew(SkewKind::AltParityPow, n, SkewParams{.t = Poly(0)}), comp);
                    if (par0 != (lam.all_cols_even() ? Poly(sgn) : Poly(0))) ++bad_sweep;
                    for (int k = 0; k <= n - m; ++k) {
                        Poly pf = sub_pfaffian(
                            build_skew(SkewKind::AltBanded, n,
                                       SkewParams{.t = std::nullopt, .m = m, .k = k}),
                            comp);
                        bool ok = true;
                        for (int j = 0; j < k / 2; ++j)
                            if (!pf.coeff_of(var_eps(), j).is_zero()) ok = false;
                        Poly limit = pf.coeff_of(var_eps(), k / 2);
                        Poly want = lam.first() <= k ? Poly(sgn) : Poly(0);
                        if (!ok || limit != want) ++bad_sweep;
                    }
                }
            }
        }
    }
    sink.push("sub-pfaffian-sweep",
              {{"max-size", "8"}, {"index-sets", detail::num(sweep_total)}}, "mismatches",
              detail::num(bad_sweep), "expected", "0");

    // copfaffian duality between the named families
    bool duality = copfaffian_matrix(build_skew(SkewKind::Ones, 6)) ==
                       build_skew(SkewKind::Alt, 6) &&
                   copfaffian_matrix(build_skew(SkewKind::ParityPow, 6)) ==
                       build_skew(SkewKind::AltGapPow, 6) &&
                   copfaffian_matrix(build_skew(SkewKind::GapPow, 6)) ==
                       build_skew(SkewKind::AltParityPow, 6);
    sink.push("copfaffian-duality", {{"size", "6"}}, "families", duality ? "ok" : "violated",
              "expected", "ok");

    return cases;
}

inline std::vector<VerificationCase> verify_genfun(int max_levels = 4) {
    std::vector<VerificationCase> cases;
    detail::CaseSink sink{cases};

    const std::vector<WeightKind> kinds = {
        WeightKind::Refined,       WeightKind::Doubly,         WeightKind::ColsEven,
        WeightKind::RowsEven,      WeightKind::ColsEvenDoubly, WeightKind::OddCols,
        WeightKind::OddRows,       WeightKind::RefinedOddCols, WeightKind::Mt,
        WeightKind::MtTruncated,   WeightKind::Neg1,           WeightKind::Neg1First,
        WeightKind::Neg1Top,       WeightKind::Neg1OddCols};

    for (auto [n, m] : classes_up_to(max_levels)) {
        for (WeightKind kind : kinds) {
            if ((kind == WeightKind::Doubly || kind == WeightKind::ColsEvenDoubly) && n + m < 2)
                continue;
            std::vector<int> ks = {0};
            if (kind == WeightKind::Mt || kind == WeightKind::MtTruncated) {
                ks.clear();
                for (int k = 0; k <= n + m - 1; ++k) ks.push_back(k);
            }
            for (int k : ks) {
                GfRequest req{kind, n, m, 0, k};
                std::vector<std::pair<std::string, std::string>> params = {
                    {"weight", weight_kind_name(kind)},
                    {"n", detail::num(n)},
                    {"m", detail::num(m)}};
                if (kind == WeightKind::Mt || kind == WeightKind::MtTruncated)
                    params.emplace_back("k", detail::num(k));
                sink.push_poly("gf-brute-vs-pfaffian", params, "brute", gf_brute(req),
                               "pfaffian", gf_pfaffian(req));

                GfRequest wide = req;
                wide.N = req.width() + 2;
                sink.push_poly("gf-width-stability", params, "default-width", gf_pfaffian(req),
                               "width+2", gf_pfaffian(wide));
            }
        }

        // level-index freedom of the unsigned sums
        int levels = n + m;
        bool free_index = true;
        GfRequest refined{WeightKind::Refined, n, m, 0, 0};
        Poly pf = gf_pfaffian(refined);
        for (int r = 1; r <= levels; ++r)
            if (gf_brute(refined, r) != pf) free_index = false;
        if (levels >= 2) {
            GfRequest doubly{WeightKind::Doubly, n, m, 0, 0};
            Poly pf2 = gf_pfaffian(doubly);
            for (int r = 2; r <= levels; ++r)
                if (gf_brute(doubly, r) != pf2) free_index = false;
        }
        sink.push("gf-level-index-free", {{"n", detail::num(n)}, {"m", detail::num(m)}},
                  "all-indices", free_index ? "ok" : "violated", "expected", "ok");
    }

    // the signed refinements depend on the level index
    Poly first = gf_pfaffian({WeightKind::Neg1First, 3, 0, 0, 0});
    Poly top = gf_pfaffian({WeightKind::Neg1Top, 3, 0, 0, 0});
    sink.push("gf-signed-level-dependence", {{"n", "3"}, {"m", "0"}}, "first-vs-top",
              first == top ? "equal" : "different", "expected", "different");

    // fully weighted identity at two small classes
    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 0}}) {
        int levels = n + m, N = default_block_width(n, m);
        std::vector<Poly> lt, lx;
        for (int i = 1; i <= levels; ++i) lt.push_back(Poly::variable(var_level_t(i)));
        for (int i = 1; i <= levels; ++i) lx.push_back(Poly::variable(var_level_x(i)));
        SkewMatrix alt = build_skew(SkewKind::Alt, n + N);
        sink.push_poly("gf-general-weighted", {{"n", detail::num(n)}, {"m", detail::num(m)}},
                       "block-pfaffian", gf_general(n, m, N, alt, lt, lx), "brute",
                       gf_general_brute(n, m, N, alt, lt, lx));
    }
    return cases;
}

inline std::vector<VerificationCase> verify_constterm(int max_n = 4, int max_m = 2) {
    std::vector<VerificationCase> cases;
    detail::CaseSink sink{cases};

    const std::vector<WeightKind> kinds = {
        WeightKind::Refined,  WeightKind::Doubly,   WeightKind::ColsEven,
        WeightKind::RowsEven, WeightKind::ColsEvenDoubly, WeightKind::OddCols,
        WeightKind::OddRows,  WeightKind::RefinedOddCols, WeightKind::Mt};

    for (int n = 1; n <= max_n; ++n) {
        for (int m = 0; m <= max_m; ++m) {
            for (WeightKind kind : kinds) {
                if ((kind == WeightKind::Doubly || kind == WeightKind::ColsEvenDoubly) &&
                    n + m < 2)
                    continue;
                GfRequest req{kind, n, m, 0, 0};
                if (kind == WeightKind::Mt) req.k = std::min(1, n + m - 1);
                std::vector<std::pair<std::string, std::string>> params = {
                    {"weight", weight_kind_name(kind)},
                    {"n", detail::num(n)},
                    {"m", detail::num(m)}};
                Poly ct = constant_term(req);
                sink.push_poly("constant-term-vs-pfaffian", params, "constant-term", ct,
                               "pfaffian", gf_pfaffian(req));
                sink.push_poly("constant-term-vs-subset-sum", params, "constant-term", ct,
                               "subset-sum", d_sum(req));
            }

            // counting corollary at t = u = 1
            Poly ct = constant_term({WeightKind::Refined, n, m, 0, 0});
            sink.push("constant-term-count", {{"n", detail::num(n)}, {"m", detail::num(m)}},
                      "constant-term", ct.substitute(var_t(), Poly(1)).to_string(),
                      "product-formula", card_cspp(n, m).get_str());
        }
    }

    // truncation: doubling the cap never changes the value
    for (int n = 1; n <= 3; ++n)
        for (int m = 0; m <= 2; ++m) {
            GfRequest req{WeightKind::Refined, n, m, 0, 0};
            sink.push_poly("constant-term-cap-doubling",
                           {{"n", detail::num(n)}, {"m", detail::num(m)}}, "default-cap",
                           constant_term(req), "doubled-cap",
                           constant_term(req, 2 * ct_default_cap(n, m)));
        }

    // the bounded kernel dominates past the row cap
    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 0}, {2, 1}, {3, 0}}) {
        Poly refined = constant_term({WeightKind::Refined, n, m, 0, 0});
        Poly bounded = constant_term_of(n, m, Poly::variable(var_t()), Poly(1),
                                        KernelKind::Bounded, {.mark = Poly(1), .k = n + m});
        sink.push_poly("bounded-kernel-dominates", {{"n", detail::num(n)}, {"m", detail::num(m)}},
                       "bounded-past-cap", bounded, "unbounded", refined);
    }
    return cases;
}

inline std::vector<VerificationCase> verify_conjectures() {
    std::vector<VerificationCase> cases;
    detail::CaseSink sink{cases};
    const bool kConjecture = false;  // report-only cases

    // refined counts against the closed-form polynomial family
    for (int n = 1; n <= 5; ++n) {
        Poly lhs = gf_pfaffian({WeightKind::Refined, n, 0, 0, 0});
        sink.push_poly("conj-refined", {{"n", detail::num(n)}}, "pfaffian", lhs, "closed-form",
                       asm_poly(n), kConjecture);
    }

    // doubly refined, both orientation conventions
    for (int n = 2; n <= 4; ++n) {
        Poly lhs = gf_pfaffian({WeightKind::Doubly, n, 0, 0, 0});
        Poly target = asm_doubly_poly(n);
        Poly swapped = target.substitute({{var_t(), Poly::variable(var_u())},
                                          {var_u(), Poly::variable(var_t())}});
        sink.push_poly("conj-doubly", {{"n", detail::num(n)}, {"orientation", "direct"}},
                       "pfaffian", lhs, "closed-form", target, kConjecture);
        sink.push_poly("conj-doubly", {{"n", detail::num(n)}, {"orientation", "swapped"}},
                       "pfaffian", lhs, "closed-form", swapped, kConjecture);
    }

    // banded subsets against the triangle polynomials
    for (int n = 2; n <= 5; ++n) {
        for (int k = 0; k <= n - 1; ++k) {
            Poly lhs = gf_pfaffian({WeightKind::Mt, n, 0, 0, k});
            sink.push_poly("conj-banded-triangles", {{"n", detail::num(n)}, {"k", detail::num(k)}},
                           "pfaffian", lhs, "triangle-weight", mt_polynomial(n, k), kConjecture);
        }
    }

    // rows-even sums against the vertically symmetric products
    for (int n = 1; n <= 5; ++n) {
        Poly lhs = gf_pfaffian({WeightKind::RowsEven, n, 0, 0, 0});
        Poly target = n % 2 == 0
                          ? avs_poly(n + 1) * avs_number(n + 1)
                          : avs_poly(n + 2) * avs_number(n);
        sink.push_poly("conj-even-rows", {{"n", detail::num(n)}}, "pfaffian", lhs,
                       "vs-products", target, kConjecture);
    }

    // signed counts: the published indexing and the observed one
    for (int n = 1; n <= 5; ++n) {
        Poly lhs = gf_pfaffian({WeightKind::Neg1, n, 0, 0, 0});
        Integer published = n % 2 == 1 ? avs_number(n + 2) : Integer(0);
        sink.push_poly("conj-signed-published-index", {{"n", detail::num(n)}}, "pfaffian", lhs,
                       "published target", Poly(published), kConjecture);
    }
    for (int n = 1; n <= 7; ++n) {
        Poly lhs = gf_pfaffian({WeightKind::Neg1, n, 0, 0, 0});
        Integer observed = n % 2 == 1 ? (n == 1 ? Integer(1) : avs_number(n)) : Integer(0);
        sink.push_poly("conj-signed-observed-index", {{"n", detail::num(n)}}, "pfaffian", lhs,
                       "shifted target", Poly(observed), kConjecture);
    }

    // the rows-even count at six extra levels
    {
        Poly pf = gf_pfaffian({WeightKind::RowsEven, 3, 6, 0, 0});
        sink.push("conj-rows-even-count", {{"n", "3"}, {"m", "6"}}, "pfaffian",
                  pf.substitute(var_t(), Poly(1)).to_string(), "closed-form",
                  conj_row_target(1, 1, 6).get_str(), kConjecture);
    }

    // signed counts at column surplus two: values sit at even sizes
    for (int n = 1; n <= 8; ++n) {
        Poly lhs = gf_pfaffian({WeightKind::Neg1, n, 2, 0, 0});
        sink.push_poly("conj-signed-surplus2", {{"n", detail::num(n)}, {"index-note", "even n"}},
                       "pfaffian", lhs, "closed-form", Poly(conj_neg1_target(n)), kConjecture);
    }

    // surplus four reduces to surplus two, two sizes up
    for (int n = 1; n <= 4; ++n) {
        Poly a = gf_pfaffian({WeightKind::Neg1, n, 4, 0, 0});
        Poly b = gf_pfaffian({WeightKind::Neg1, n + 2, 2, 0, 0});
        sink.push_poly("conj-signed-surplus4", {{"n", detail::num(n)}}, "surplus-4", a,
                       "surplus-2 shifted", b, kConjecture);
    }

    // the (k, x, y) triangle correspondence
    for (int n = 2; n <= 4; ++n) {
        CsppClass cls{n, 0};
        auto cs = enumerate_cspp(cls);
        auto mt = enumerate_mt(n);
        auto ts = enumerate_tspp(cls);
        long mism_cm = 0, mism_tm = 0;
        for (int k = 0; k <= n - 1; ++k)
            for (int x = 0; x <= n; ++x)
                for (int y = 0; y <= n; ++y) {
                    size_t a = cspp_kxy(cs, cls, k, x, y).size();
                    size_t b = mt_subset_kxy(mt, k, x, y).size();
                    size_t c = tspp_kxy(ts, k, x, y).size();
                    if (a != b) ++mism_cm;
                    if (c != b) ++mism_tm;
                }
        sink.push("conj-kxy-triangles", {{"n", detail::num(n)}, {"pair", "plane-vs-triangle"}},
                  "mismatching-triples", detail::num(mism_cm), "expected-if-match", "0",
                  kConjecture);
        sink.push("conj-kxy-triangles", {{"n", detail::num(n)}, {"pair", "shifted-vs-triangle"}},
                  "mismatching-triples", detail::num(mism_tm), "expected-if-match", "0",
                  kConjecture);
    }

    return cases;
}

/// Per-suite size bounds; zeros select the documented defaults.
struct VerifyBounds {
    int max_levels = 0;  // bijections, statistics, genfun
    int max_n = 0;       // constterm
    int max_m = 0;       // constterm
};

inline std::vector<VerificationCase> verify_suite(const std::string& name,
                                                  const VerifyBounds& bounds = {}) {
    int levels = bounds.max_levels;
    if (name == "bijections")
        return verify_bijections(levels ? levels : 5, std::min(levels ? levels : 4, 4));
    if (name == "statistics") return verify_statistics(levels ? levels : 5);
    if (name == "pfaffian-core") return verify_pfaffian_core();
    if (name == "genfun") return verify_genfun(levels ? levels : 4);
    if (name == "constterm")
        return verify_constterm(bounds.max_n ? bounds.max_n : 4,
                                bounds.max_m ? bounds.max_m : 2);
    if (name == "conjectures") return verify_conjectures();
    throw std::invalid_argument("unknown suite: " + name);
}

inline const std::vector<std::string>& all_suites() {
    static const std::vector<std::string> names = {"bijections", "statistics", "pfaffian-core",
                                                   "genfun", "constterm", "conjectures"};
    return names;
}

}  // namespace ppgf
