#include "ppgf/bijections.hpp"
#include "ppgf/objects.hpp"
#include "ppgf/statistics.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>

using namespace ppgf;

namespace {
Poly P(const std::string& s) { return parse_poly(s); }
PlanePartition pp(std::vector<std::vector<int>> rows) { return PlanePartition(std::move(rows)); }
}

TEST_CASE("plane partition validation") {
    CHECK_NOTHROW(pp({{3, 2, 1}, {2, 1}}));
    CHECK_THROWS(pp({{1, 2}}));          // row increases
    CHECK_THROWS(pp({{2}, {3}}));        // column increases
    CHECK_THROWS(pp({{2, 2}, {0}}));     // zero part
    CHECK_THROWS(pp({{2}, {1, 1}}));     // ragged shape

    CsppClass c31{3, 0};
    CHECK(is_cspp(pp({{2, 1}}), c31));
    CHECK_FALSE(is_cspp(pp({{3}}), c31));        // exceeds column cap
    CHECK_FALSE(is_cspp(pp({{1}, {1}}), c31));   // column not strict
}

TEST_CASE("class enumeration counts and order") {
    CsppClass c12{1, 2};
    auto list12 = enumerate_cspp(c12);
    REQUIRE(list12.size() == 4);
    CHECK(list12[0] == PlanePartition());
    CHECK(list12[1] == pp({{1}}));
    CHECK(list12[2] == pp({{2}}));
    CHECK(list12[3] == pp({{2}, {1}}));

    CsppClass c30{3, 0};
    auto list30 = enumerate_cspp(c30);
    REQUIRE(list30.size() == 7);
    CHECK(list30[0] == PlanePartition());
    CHECK(list30[1] == pp({{1}}));
    CHECK(list30[2] == pp({{1, 1}}));
    CHECK(list30[3] == pp({{2}}));
    CHECK(list30[4] == pp({{2, 1}}));
    CHECK(list30[5] == pp({{2}, {1}}));
    CHECK(list30[6] == pp({{2, 1}, {1}}));

    CHECK(enumerate_cspp(CsppClass{1, 0}).size() == 1);
    CHECK_THROWS(enumerate_cspp(CsppClass{5, 5}));
}

TEST_CASE("shifted triangle enumeration") {
    auto t30 = enumerate_tspp(CsppClass{3, 0});
    REQUIRE(t30.size() == 7);
    // descending reading-word order starting from the all-3 triangle
    CHECK(t30[0].rows() == std::vector<std::vector<int>>{{3, 3}, {3}});
    CHECK(t30[6].rows() == std::vector<std::vector<int>>{{2, 2}, {1}});

    CHECK(enumerate_tspp(CsppClass{1, 2}).size() == 4);
    CHECK(enumerate_tspp(CsppClass{1, 0}).size() == 1);  // empty shape
}

TEST_CASE("statistics tables on the seven smallest objects") {
    CsppClass cls{3, 0};
    auto objs = enumerate_cspp(cls);
    auto row = [&](auto f) {
        std::vector<int> out;
        for (const auto& c : objs) out.push_back(f(c));
        return out;
    };

    CHECK(row([&](const PlanePartition& c) { return ubar_stat(c, cls, 1); }) ==
          std::vector<int>{0, 1, 2, 0, 1, 1, 2});
    CHECK(row([&](const PlanePartition& c) { return ubar_stat(c, cls, 2); }) ==
          std::vector<int>{0, 0, 1, 1, 2, 1, 2});
    CHECK(row([&](const PlanePartition& c) { return ubar_stat(c, cls, 3); }) ==
          std::vector<int>{0, 0, 1, 1, 2, 1, 2});
    CHECK(row(odd_rows) == std::vector<int>{0, 1, 0, 1, 0, 2, 1});
    CHECK(row(odd_cols) == std::vector<int>{0, 1, 2, 1, 2, 0, 1});

    // saturated-part counts behind the last-level statistic
    CHECK(row([&](const PlanePartition& c) { return saturated_parts(c, cls); }) ==
          std::vector<int>{0, 0, 1, 1, 2, 1, 2});
}

TEST_CASE("bijection to the shifted side and statistic transport") {
    CsppClass cls{3, 0};
    CHECK(cspp_to_tspp(PlanePartition(), cls).rows() ==
          std::vector<std::vector<int>>{{3, 3}, {3}});

    auto all3 = cspp_to_tspp(PlanePartition(), cls);
    CHECK(level_stat(all3, 1) == 2);

    for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 0}, {2, 1}, {3, 0}, {2, 2}, {1, 3}, {4, 1}}) {
        CsppClass c{n, m};
        auto cs = enumerate_cspp(c);
        auto ts = enumerate_tspp(c);
        REQUIRE(cs.size() == ts.size());

        std::map<std::vector<int>, int> hits;  // injectivity via reading words
        for (const auto& obj : cs) {
            ShiftedPP b = cspp_to_tspp(obj, c);
            CHECK(tspp_to_cspp(b) == obj);
            ++hits[b.reading_word()];
            for (int r = 1; r <= c.levels(); ++r)
                CHECK(ubar_stat(obj, c, r) == c.levels() - 1 - level_stat(b, r));
            // the two top statistics agree
            CHECK(ubar_stat(obj, c, c.levels() - 1 == 0 ? 1 : c.levels() - 1) ==
                  ubar_stat(obj, c, std::max(1, c.levels() - 1)));
            if (c.levels() >= 2)
                CHECK(ubar_stat(obj, c, c.levels() - 1) == ubar_stat(obj, c, c.levels()));
        }
        CHECK(hits.size() == cs.size());

        // surjectivity: triangles round-trip too
        for (const auto& b : ts) CHECK(cspp_to_tspp(tspp_to_cspp(b), c) == b);
    }
}

TEST_CASE("subset filters") {
    CsppClass cls{3, 0};
    auto objs = enumerate_cspp(cls);

    CHECK(cspp_at_most_k_rows(objs, 0).size() == 1);
    CHECK(cspp_at_most_k_rows(objs, 1).size() == 5);
    CHECK(cspp_at_most_k_rows(objs, 2).size() == 7);

    auto ccspp = filtered(objs, all_cols_even);
    REQUIRE(ccspp.size() == 2);
    CHECK(ccspp[0] == PlanePartition());
    CHECK(ccspp[1] == pp({{2}, {1}}));

    auto rcspp = filtered(objs, all_rows_even);
    CHECK(rcspp.size() == 3);

    auto kxy211 = cspp_kxy(objs, cls, 2, 1, 1);
    REQUIRE(kxy211.size() == 2);
    CHECK(kxy211[0] == pp({{1, 1}}));
    CHECK(kxy211[1] == pp({{2}}));
}

TEST_CASE("monotone triangles") {
    auto mt3 = enumerate_mt(3);
    REQUIRE(mt3.size() == 7);

    CHECK(mt_subset(mt3, 0).size() == 1);
    CHECK(mt_subset(mt3, 1).size() == 5);
    CHECK(mt_subset(mt3, 2).size() == 7);

    CHECK(mt_polynomial(3, 0) == P("1"));
    CHECK(mt_polynomial(3, 1) == P("t^2 + 2*t + 2"));
    CHECK(mt_polynomial(3, 2) == P("2*t^2 + 3*t + 2"));

    // the published cardinality table for the (k, x, y) refinements at n = 3
    std::map<std::tuple<int, int, int>, size_t> expected = {
        {{0, 0, 0}, 1}, {{1, 1, 1}, 1}, {{1, 2, 0}, 1}, {{1, 0, 1}, 1},
        {{1, 1, 0}, 1}, {{1, 0, 2}, 1}, {{2, 0, 1}, 1}, {{2, 0, 2}, 1},
        {{2, 1, 2}, 1}, {{2, 1, 0}, 2}, {{2, 1, 1}, 2}};
    for (int k = 0; k <= 2; ++k)
        for (int x = 0; x <= 2; ++x)
            for (int y = 0; y <= 2; ++y) {
                auto it = expected.find({k, x, y});
                size_t want = it == expected.end() ? 0 : it->second;
                CHECK(mt_subset_kxy(mt3, k, x, y).size() == want);
            }
}

TEST_CASE("the three-way (k, x, y) correspondence at small sizes") {
    // The banded-subset counts |CSPP^k| = |TSPP^k| transport through the
    // bijection at every size.  The finer (k, x, y) refinements, with both
    // definitions taken literally, agree on some classes and not on others;
    // the verification harness reports the full table, and here we pin the
    // classes where the literal match holds.
    for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 0}, {2, 1}, {2, 2}, {4, 0}, {3, 1}}) {
        CsppClass cls{n, m};
        auto cs = enumerate_cspp(cls);
        auto ts = enumerate_tspp(cls);
        for (int k = 0; k <= cls.levels() - 1; ++k)
            CHECK(cspp_at_most_k_rows(cs, k).size() == tspp_k(ts, k).size());
    }
    for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 0}, {2, 1}}) {
        CsppClass cls{n, m};
        auto cs = enumerate_cspp(cls);
        auto ts = enumerate_tspp(cls);
        for (int k = 0; k <= cls.levels() - 1; ++k)
            for (int x = 0; x <= cls.levels(); ++x)
                for (int y = 0; y <= cls.levels(); ++y)
                    CHECK(cspp_kxy(cs, cls, k, x, y).size() == tspp_kxy(ts, k, x, y).size());
    }
    // against the triangles (conjectural, but exact at these sizes)
    CsppClass c30{3, 0};
    auto cs = enumerate_cspp(c30);
    auto mt = enumerate_mt(3);
    for (int k = 0; k <= 2; ++k) {
        CHECK(cspp_at_most_k_rows(cs, k).size() == mt_subset(mt, k).size());
        for (int x = 0; x <= 3; ++x)
            for (int y = 0; y <= 3; ++y)
                CHECK(cspp_kxy(cs, c30, k, x, y).size() == mt_subset_kxy(mt, k, x, y).size());
    }
}

TEST_CASE("brute-force generating functions") {
    CsppClass cls{3, 0};
    auto objs = enumerate_cspp(cls);

    WeightSpec refined;
    refined.with(StatKind::UbarR, var_t(), 1);
    CHECK(brute_gf(objs, cls, refined) == P("2 + 3*t + 2*t^2"));

    CHECK(brute_gf(filtered(objs, all_rows_even), cls, refined) == P("1 + t + t^2"));
    CHECK(brute_gf(filtered(objs, all_cols_even), cls, refined) == P("1 + t"));

    CsppClass c10{1, 0};
    CHECK(brute_gf(enumerate_cspp(c10), c10, refined) == Poly(1));

    // doubly refined against the hand-expanded table
    WeightSpec doubly;
    doubly.with(StatKind::UbarR, var_t(), 1).with(StatKind::UbarR, var_u(), 2);
    CHECK(brute_gf(objs, cls, doubly) ==
          P("1 + t + u + t*u + t^2*u + t*u^2 + t^2*u^2"));

    // signs: weights over the seven objects are 0,1,2,2,3,3,4
    WeightSpec neg1;
    neg1.sign_by_weight = true;
    CHECK(brute_gf(objs, cls, neg1) == Poly(1));

    CHECK_THROWS(WeightSpec().with(StatKind::UbarR, var_t(), 1).with(StatKind::OddRows, var_t()));
}

TEST_CASE("cube witness") {
    CsppClass c12{1, 2};
    auto objs = enumerate_cspp(c12);
    std::vector<Tsscpp3D> cubes;
    for (const auto& c : objs) {
        Tsscpp3D cube = cspp_to_tsscpp(c, c12);
        CHECK(validate_tsscpp(cube));
        long side = cube.side();
        CHECK(cube.filled_count() == side * side * side / 2);
        CHECK(tsscpp_to_cspp(cube) == c);
        for (const auto& other : cubes) CHECK_FALSE(cube == other);
        cubes.push_back(cube);
    }
    CHECK(cubes.size() == 4);

    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 0}, {2, 2}, {4, 0}, {1, 3}}) {
        CsppClass cls{n, m};
        for (const auto& c : enumerate_cspp(cls)) {
            Tsscpp3D cube = cspp_to_tsscpp(c, cls);
            CHECK(validate_tsscpp(cube));
            CHECK(tsscpp_to_cspp(cube) == c);

            // move counts against the orbit oracle: no diagonal orbit ever
            // differs, and the total move count is the weight of c; the
            // per-family split of the total is not an orbit invariant (see
            // the verification report), so only these two are asserted.
            auto oracle = orbit_moves(cube);
            auto fast = move_counts(c);
            CHECK(oracle[0] == 0);
            CHECK(fast[0] == 0);
            CHECK(oracle[0] + oracle[1] + oracle[2] == c.weight());
            CHECK(fast[0] + fast[1] + fast[2] == c.weight());
        }
    }
}
