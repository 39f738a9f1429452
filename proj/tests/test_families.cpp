#include "ppgf/families.hpp"
#include "ppgf/pfaffian.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace ppgf;

namespace {
Poly P(const std::string& s) { return parse_poly(s); }
}

TEST_CASE("skew families reproduce the pinned 4x4 and 6x6 layouts") {
    SkewMatrix r4 = build_skew(SkewKind::ParityPow, 4);
    // rows of the parity-power family at size 4
    CHECK(r4.at(0, 1) == P("1"));
    CHECK(r4.at(0, 2) == P("t"));
    CHECK(r4.at(0, 3) == P("1"));
    CHECK(r4.at(1, 2) == P("t^2"));
    CHECK(r4.at(1, 3) == P("t"));
    CHECK(r4.at(2, 3) == P("1"));

    SkewMatrix c4 = build_skew(SkewKind::GapPow, 4);
    CHECK(c4.at(0, 1) == P("1"));
    CHECK(c4.at(0, 2) == P("t"));
    CHECK(c4.at(0, 3) == P("t^2"));
    CHECK(c4.at(1, 2) == P("1"));
    CHECK(c4.at(1, 3) == P("t"));
    CHECK(c4.at(2, 3) == P("1"));

    SkewMatrix sbar = build_skew(SkewKind::Alt, 5);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            CHECK(sbar.at(i, j) == Poly(sign_pow(j - i - 1)));

    // banded signed family, odd band parameter
    SkewParams p21{.t = std::nullopt, .m = 2, .k = 1};
    SkewMatrix l21 = build_skew(SkewKind::AltBanded, 6, p21);
    Poly eps = Poly::variable(var_eps());
    CHECK(l21.at(0, 1) == eps);
    CHECK(l21.at(0, 2) == -eps);
    CHECK(l21.at(1, 2) == eps);
    CHECK(l21.at(0, 3) == Poly(1));
    CHECK(l21.at(2, 3) == Poly(1));
    CHECK(l21.at(3, 4) == Poly(1));
    CHECK(l21.at(4, 5) == Poly(1));
    CHECK(l21.at(3, 5) == Poly(-1));

    // even band parameter: the eps block is keyed on the row index
    SkewParams p22{.t = std::nullopt, .m = 2, .k = 2};
    SkewMatrix l22 = build_skew(SkewKind::AltBanded, 6, p22);
    CHECK(l22.at(0, 4) == -eps);
    CHECK(l22.at(0, 5) == eps);
    CHECK(l22.at(3, 4) == eps);
    CHECK(l22.at(3, 5) == -eps);
    CHECK(l22.at(4, 5) == Poly(1));
}

TEST_CASE("copfaffian duality between the plain and signed families") {
    CHECK(copfaffian_matrix(build_skew(SkewKind::Ones, 4)) == build_skew(SkewKind::Alt, 4));
    CHECK(copfaffian_matrix(build_skew(SkewKind::Alt, 4)) == build_skew(SkewKind::Ones, 4));
    CHECK(copfaffian_matrix(build_skew(SkewKind::ParityPow, 6)) ==
          build_skew(SkewKind::AltGapPow, 6));
    CHECK(copfaffian_matrix(build_skew(SkewKind::GapPow, 6)) ==
          build_skew(SkewKind::AltParityPow, 6));
    CHECK(pfaffian(build_skew(SkewKind::Alt, 4)) == Poly(1));
}

TEST_CASE("pinned sub-pfaffian values") {
    // alternating family on the complement of the index set of (2,1)
    SkewMatrix sbar6 = build_skew(SkewKind::Alt, 6);
    IndexSet i21 = index_set_of_partition(Partition({2, 1}), 2, 6);
    CHECK(sub_pfaffian(sbar6, i21.complement(6)) == Poly(-1));

    // gap-power family on the index set of (1): a single t
    SkewMatrix c4t = build_skew(SkewKind::GapPow, 4);
    IndexSet i10 = index_set_of_partition(Partition({1}), 2, 4);
    CHECK(i10.members() == std::vector<int>{1, 3});
    CHECK(sub_pfaffian(c4t, i10) == Poly::variable(var_t()));

    // parity-power family at t = 0 on an even-row partition: 1
    SkewMatrix r6 = build_skew(SkewKind::ParityPow, 6, SkewParams{.t = Poly(0)});
    IndexSet i22 = index_set_of_partition(Partition({2, 2}), 2, 6);
    CHECK(sub_pfaffian(r6, i22) == Poly(1));
}

TEST_CASE("index sets of partitions") {
    CHECK(index_set_of_partition(Partition({4, 3, 1}), 4, 8).members() ==
          std::vector<int>{1, 3, 6, 8});
    CHECK(index_set_of_partition(Partition(), 3, 8).members() == std::vector<int>{1, 2, 3});
    CHECK(index_set_of_partition(Partition({1}), 2, 6).members() == std::vector<int>{1, 3});
    CHECK_THROWS(index_set_of_partition(Partition({1, 1, 1}), 2, 6));

    // round trip
    Partition lam({3, 2});
    CHECK(partition_of_index_set(index_set_of_partition(lam, 4, 9)) == lam);
}

TEST_CASE("partition helpers") {
    Partition lam({4, 3, 1});
    CHECK(lam.weight() == 8);
    CHECK(lam.conjugate() == Partition({3, 2, 2, 1}));
    CHECK(lam.odd_rows() == 2);
    CHECK(lam.odd_cols() == 2);
    CHECK(Partition({2, 2}).all_rows_even());
    CHECK(Partition({2, 2}).all_cols_even());
    CHECK(partitions_in_box(2, 2).size() == 6);  // {}, 1, 11, 2, 21, 22
}

TEST_CASE("binomial transfer matrices match the pinned small case") {
    // doubly refined, n = 3, m = 0, N = 2
    PolyMatrix b = binomial_matrix(3, 0, 2, BinomialMode::DoublyRefined);
    PolyMatrix expect(3, 5);
    expect.at(0, 0) = P("1");
    expect.at(1, 1) = P("1");
    expect.at(1, 2) = P("t*u");
    expect.at(2, 2) = P("1");
    expect.at(2, 3) = P("t + u");
    expect.at(2, 4) = P("t*u");
    CHECK(b == expect);

    // plain mode is binom(i+m, j-i)
    PolyMatrix plain = binomial_matrix(3, 2, 4, BinomialMode::Plain);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 7; ++j)
            CHECK(plain.at(i, j) == Poly(binomial(i + 2, j - i)));

    // specialization consistency: doubly refined at t = u = 1 is plain
    std::map<Var, Poly> ones = {{var_t(), Poly(1)}, {var_u(), Poly(1)}};
    for (int n = 1; n <= 4; ++n)
        for (int m = 0; m <= 2; ++m) {
            PolyMatrix tu = binomial_matrix(n, m, 4, BinomialMode::DoublyRefined);
            PolyMatrix pl = binomial_matrix(n, m, 4, BinomialMode::Plain);
            CHECK(tu.map([&](const Poly& p) { return p.substitute(ones); }) == pl);
        }

    // refined mode is the u = 1 specialization
    for (int n = 1; n <= 4; ++n)
        for (int m = 0; m <= 2; ++m) {
            PolyMatrix tu = binomial_matrix(n, m, 4, BinomialMode::DoublyRefined);
            PolyMatrix rf = binomial_matrix(n, m, 4, BinomialMode::Refined);
            CHECK(tu.map([](const Poly& p) { return p.substitute(var_u(), Poly(1)); }) == rf);
        }
}

TEST_CASE("general mode reproduces the scalar specializations") {
    for (int n = 1; n <= 3; ++n) {
        for (int m = 0; m <= 3 && n + m <= 6; ++m) {
            int levels = n + m, N = 4;
            BinomialParams gp;
            gp.level_t.assign(static_cast<size_t>(levels), Poly(1));
            gp.level_x.assign(static_cast<size_t>(levels), Poly(1));
            gp.level_t[0] = Poly::variable(var_t());
            PolyMatrix gen = binomial_matrix(n, m, N, BinomialMode::General, gp);
            PolyMatrix rf = binomial_matrix(n, m, N, BinomialMode::Refined);
            CHECK(gen == rf);

            // doubly refined via any second marked level
            for (int r = 2; r <= levels; ++r) {
                BinomialParams gp2 = gp;
                gp2.level_t[static_cast<size_t>(r - 1)] = Poly::variable(var_u());
                PolyMatrix gen2 = binomial_matrix(n, m, N, BinomialMode::General, gp2);
                PolyMatrix du = binomial_matrix(n, m, N, BinomialMode::DoublyRefined);
                CHECK(gen2 == du);
            }
        }
    }
}

TEST_CASE("truncated transfer matrix") {
    PolyMatrix full = binomial_matrix(3, 0, 4, BinomialMode::Refined);
    PolyMatrix trunc = binomial_matrix_truncated(3, 0, 4, 1);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 7; ++j) {
            if (j < 4)
                CHECK(trunc.at(i, j) == full.at(i, j));
            else
                CHECK(trunc.at(i, j).is_zero());
        }
    // maximal band keeps the whole support
    PolyMatrix trunc_max = binomial_matrix_truncated(3, 0, 4, 2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 5; ++j) CHECK(trunc_max.at(i, j) == full.at(i, j));
}

TEST_CASE("q = -1 binomials") {
    CHECK(qbinomial_neg1(4, 2) == 2);
    CHECK(qbinomial_neg1(4, 1) == 0);
    CHECK(qbinomial_neg1(4, 4) == 1);
    CHECK(qbinomial_neg1(5, 1) == 1);
    CHECK(qbinomial_neg1(5, 3) == 2);
    CHECK(qbinomial_neg1(3, 5) == 0);
    CHECK(qbinomial_neg1(3, -1) == 0);

    // first-level mode at t = 1 against the plain signed matrix: the signed
    // Pascal recurrence collapses term by term
    PolyMatrix m1 = signed_binomial_matrix(3, 1, 4, SignedMode::FirstLevel)
                        .map([](const Poly& p) { return p.substitute(var_t(), Poly(1)); });
    PolyMatrix m0 = signed_binomial_matrix(3, 1, 4, SignedMode::Plain);
    CHECK(m1 == m0);
}

TEST_CASE("column operations carry the level-(m) block matrix to level (m+1)") {
    // E adds u-multiples of each column to its right neighbour, from the right
    // edge down to column n+2, with the coefficient at column n+2 being tu
    // when m = 0; conjugating the block matrix by E raises m by one and
    // removes the parameter from the skew block.
    Poly t = Poly::variable(var_t());
    Poly u = Poly::variable(var_u());
    auto mul = [](const PolyMatrix& x, const PolyMatrix& y) {
        PolyMatrix out(x.rows(), y.cols());
        for (int i = 0; i < x.rows(); ++i)
            for (int j = 0; j < y.cols(); ++j) {
                Poly s;
                for (int k = 0; k < x.cols(); ++k)
                    if (!x.at(i, k).is_zero() && !y.at(k, j).is_zero())
                        s += x.at(i, k) * y.at(k, j);
                out.at(i, j) = s;
            }
        return out;
    };
    for (int n = 2; n <= 4; ++n) {
        for (int m = 0; m <= 1; ++m) {
            int N = default_block_width(n, m) + 4;  // room for the shifted support
            int size = 2 * n + N;
            PolyMatrix b = binomial_matrix(n, m, N, BinomialMode::Refined);
            SkewMatrix a = build_skew(SkewKind::AltGapPow, n + N, SkewParams{.t = Poly(u)});
            PolyMatrix blk = minor_summation_block(b, a).matrix();

            PolyMatrix e(size, size);
            for (int i = 0; i < size; ++i) e.at(i, i) = Poly(1);
            auto add_col = [&](int src, int dst, const Poly& coef) {
                PolyMatrix step(size, size);
                for (int i = 0; i < size; ++i) step.at(i, i) = Poly(1);
                step.at(src - 1, dst - 1) = coef;  // 1-based column operation
                e = mul(e, step);
            };
            for (int c = size; c >= n + 3; --c) add_col(c - 1, c, u);
            add_col(n + 1, n + 2, m == 0 ? t * u : u);

            PolyMatrix conj = mul(mul(e.transpose(), blk), e);

            PolyMatrix b2 = binomial_matrix(n, m + 1, N, BinomialMode::DoublyRefined);
            SkewMatrix a2 = build_skew(SkewKind::AltGapPow, n + N, SkewParams{.t = Poly(0)});
            PolyMatrix expect = minor_summation_block(b2, a2).matrix();
            CHECK(conj == expect);
        }
    }
}
