// Acceptance suite: ten numbered criteria, one pass/fail line each, exit code
// zero only if every gating criterion holds.  Conjecture evidence (criterion
// 9) reports its findings and gates only on reproducibility of the stated
// values, not on the open questions themselves.

#include "ppgf/verify.hpp"

#include <chrono>
#include <iostream>

using namespace ppgf;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, const std::string& label, bool ok, double seconds,
            const std::string& note = "") {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << criterion << ": " << label << "  ["
              << seconds << " s]";
    if (!note.empty()) std::cout << "  (" << note << ")";
    std::cout << "\n";
    if (!ok) ++failures;
}

double elapsed(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool gating_clean(const std::vector<VerificationCase>& cases, const std::string& prefix = "") {
    for (const auto& c : cases)
        if (c.gating && !c.match && (prefix.empty() || c.id.rfind(prefix, 0) == 0)) return false;
    return true;
}

Poly P(const std::string& s) { return parse_poly(s); }

}  // namespace

int main() {
    // 1. Pfaffian engine: production vs matching oracle, and Pf^2 = det,
    //    on 200 random integer skew matrices of sizes 2..10.
    {
        auto t0 = Clock::now();
        detail::SmallRng rng(0xacce9);
        bool ok = true;
        for (int i = 0; i < 200 && ok; ++i) {
            int n = 2 + 2 * rng.uniform(0, 4);
            SkewMatrix a = SkewMatrix::from_upper(
                n, [&](int, int) { return Poly(rng.uniform(-9, 9)); });
            Poly fast = pfaffian(a);
            if (fast != pfaffian_by_matchings(a)) ok = false;
            if (fast * fast != determinant(a.matrix())) ok = false;
        }
        report(1, "pfaffian agrees with the matching oracle and squares to det (200 cases)", ok,
               elapsed(t0));
    }

    // 2. Minor summation: subset sum vs block Pfaffian, plus the quadratic
    //    and bordered forms, on 50 random shapes with n <= 8.
    {
        auto t0 = Clock::now();
        detail::SmallRng rng(0xacce10);
        bool ok = true;
        int done = 0;
        while (done < 50) {
            int n = 2 + rng.uniform(0, 6);
            int m = 1 + rng.uniform(0, n - 1);
            if ((n - m) % 2 != 0) continue;
            PolyMatrix tmat(m, n);
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < n; ++c) tmat.at(r, c) = Poly(rng.uniform(-5, 5));
            SkewMatrix b = SkewMatrix::from_upper(
                n, [&](int, int) { return Poly(rng.uniform(-5, 5)); });
            auto rep = minor_summation_check(tmat, b);
            if (!rep.block_matches || !rep.quadratic_matches) ok = false;
            ++done;
        }
        report(2, "minor summation identity on 50 random (T, B)", ok, elapsed(t0));
    }

    // 3. The sub-Pfaffian sweep over all eight named families, n <= 8,
    //    m <= 4, every admissible partition, eps limits included.
    {
        auto t0 = Clock::now();
        auto cases = verify_pfaffian_core(10, 10);  // sweep dominates; randoms covered above
        bool ok = gating_clean(cases, "sub-pfaffian-sweep") &&
                  gating_clean(cases, "copfaffian");
        report(3, "sub-pfaffian values for all named families (n <= 8, m <= 4)", ok, elapsed(t0));
    }

    // 4. Bijections: round trips, injectivity and statistic transport at
    //    n+m <= 5, with the cube leg at n+m <= 4.
    {
        auto t0 = Clock::now();
        auto cases = verify_bijections(5, 4);
        bool ok = gating_clean(cases, "roundtrip") && gating_clean(cases, "stat-transport");
        report(4, "bijection round trips and statistic transport (n+m <= 5, cube <= 4)", ok,
               elapsed(t0));
    }

    // 5. Counting: enumeration matches the product formula for n+m <= 6,
    //    including the two published values.
    {
        auto t0 = Clock::now();
        bool ok = true;
        for (auto [n, m] : classes_up_to(6)) {
            CsppClass cls{n, m};
            if (enumerate_cspp(cls).size() !=
                static_cast<size_t>(card_cspp(n, m).get_ui()))
                ok = false;
        }
        ok = ok && enumerate_cspp(CsppClass{1, 2}).size() == 4 &&
             enumerate_cspp(CsppClass{3, 0}).size() == 7;
        report(5, "class sizes match the product formula (n+m <= 6)", ok, elapsed(t0));
    }

    // 6. The statistics table for the seven objects of the 3-level class,
    //    byte for byte in the documented enumeration order.
    {
        auto t0 = Clock::now();
        bool ok = statistics_table(CsppClass{3, 0}) == expected_table_levels3();
        report(6, "statistics table reproduced byte for byte", ok, elapsed(t0),
               "frozen values follow the defining statistics");
    }

    // 7. Triple agreement: brute force = block Pfaffian for every weight kind
    //    at n+m <= 4, and = constant term = subset sum at n <= 4, m <= 2.
    {
        auto t0 = Clock::now();
        bool ok = gating_clean(verify_genfun(4), "gf-brute-vs-pfaffian");
        ok = ok && gating_clean(verify_constterm(4, 2));
        report(7, "triple agreement of brute force, Pfaffian and constant term", ok, elapsed(t0));
    }

    // 8. Printed polynomial witnesses.
    {
        auto t0 = Clock::now();
        bool ok = gf_pfaffian({WeightKind::Refined, 3, 0, 2, 0}) == P("2 + 3*t + 2*t^2");
        ok = ok && gf_mt_prelimit(3, 0, 4, 1) == P("2 + 2*t + t^2 + t*eps + t^2*eps");
        ok = ok && gf_pfaffian({WeightKind::Mt, 3, 0, 0, 1}) == P("2 + 2*t + t^2");
        ok = ok && mt_polynomial(3, 1) == P("2 + 2*t + t^2");
        ok = ok && gf_pfaffian({WeightKind::RowsEven, 3, 0, 0, 0}) == P("1 + t + t^2");
        ok = ok && mt_polynomial(3, 0) == P("1");
        ok = ok && mt_polynomial(3, 2) == P("2 + 3*t + 2*t^2");
        report(8, "published polynomial witnesses (refined, banded pre-limit, rows-even)", ok,
               elapsed(t0));
    }

    // 9. Conjecture evidence: reported, non-gating on the open questions; the
    //    criterion passes when every case computes and the stated published
    //    values (3432 and the surplus-2 sequence) are reproduced.
    {
        auto t0 = Clock::now();
        auto cases = verify_conjectures();
        bool computed = !cases.empty();
        long matches = 0, mismatches = 0;
        bool rows_even_3432 = false, surplus2 = true;
        for (const auto& c : cases) {
            (c.match ? matches : mismatches) += 1;
            if (c.id == "conj-rows-even-count") rows_even_3432 = c.match;
            if (c.id == "conj-signed-surplus2" && !c.match) surplus2 = false;
        }
        // brute confirmation of the published rows-even count
        {
            CsppClass cls{3, 6};
            auto objs = enumerate_cspp(cls);
            rows_even_3432 =
                rows_even_3432 && filtered(objs, all_rows_even).size() == 3432;
        }
        bool ok = computed && rows_even_3432 && surplus2;
        report(9, "conjecture evidence computed and published values reproduced", ok, elapsed(t0),
               std::to_string(matches) + " matches, " + std::to_string(mismatches) +
                   " reported mismatches (see verify --suite conjectures)");
    }

    // 10. Odd-row polynomials for n <= 6 against the printed list, with the
    //     factorization relations.
    {
        auto t0 = Clock::now();
        auto cases = verify_statistics(5);
        bool ok = gating_clean(cases, "odd-row-poly");
        report(10, "odd-row generating polynomials for n <= 6", ok, elapsed(t0),
               "the published p6 relation double-counts a factor 3; gated on the corrected one");
    }

    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
