#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "skewcell/adjust.hpp"
#include "skewcell/instances.hpp"

using namespace skewcell;

TEST_CASE("toy adjustment is the identity") {
    auto toy = gen_toy(3, cyclotomics(2));
    auto adj = adjustment(toy.algebra, toy.datum, toy.shift, 3);
    INFO(adj.checks.summary());
    CHECK(adj.checks.ok());
    for (size_t i = 0; i < adj.labels.size(); ++i)
        for (size_t j = 0; j < adj.labels.size(); ++j)
            CHECK(adj.af[i][j] == (i == j ? Laurent::one() : Laurent()));
}

TEST_CASE("matrix adjustment is (1)") {
    auto m4 = gen_matrix(4, {1, 1, -1, -1}, {2, 1, 4, 3}, cyclotomics(2));
    auto adj = adjustment(m4.algebra, m4.datum, m4.shift, 3);
    INFO(adj.checks.summary());
    CHECK(adj.checks.ok());
    REQUIRE(adj.labels.size() == 2); // two simple families: k = 0, 1
    CHECK(adj.af[0][0].is_one());
    CHECK(adj.af[1][1].is_one());
    CHECK(adj.af[0][1].is_zero());
    CHECK(adj.af[1][0].is_zero());
}

TEST_CASE("fixture adjustment with c = 3") {
    auto inst = klr_instance("klr-2-2-2");
    auto adj = adjustment(inst.algebra, inst.datum, inst.shift, 3);
    INFO(adj.checks.summary());
    CHECK(adj.checks.ok());
    // decomposition matrices are characteristic-free here, so A_F = 1
    REQUIRE(adj.labels.size() == 1);
    CHECK(adj.af[0][0].is_one());
    CHECK(adj.dq.d == adj.df.d);
}

TEST_CASE("fixture decomposition over both characteristics vs the oracle") {
    auto inst = klr_instance("klr-2-2-2");
    for (auto& f : {cyclotomics(2), cyclotomic_prime_field(2, 3)}) {
        GradedAlgebra A = base_change(inst.algebra, f);
        CellEngine eng(A, inst.datum);
        auto dm = graded_decomp(A, eng);
        for (size_t r = 0; r < dm.rows.size(); ++r) {
            auto expect = oracles::decomp_row_oracle(A, eng, dm.rows[r], dm.cols);
            CHECK(dm.d[r] == expect);
        }
        // the known values: columns are the two column shapes
        REQUIRE(dm.cols.size() == 2);
        for (size_t r = 0; r < dm.rows.size(); ++r) {
            std::string id = dm.row_labels[r];
            long expect_shift = id == "(2|0)" || id == "(0|2)" ? 2 : id == "(1|1)" ? 1 : 0;
            long long total = 0;
            for (auto& e : dm.d[r]) total += e.eval_one();
            CHECK(total == (id == "(1|1)" ? 2 : 1));
            for (size_t c = 0; c < dm.cols.size(); ++c)
                if (!dm.d[r][c].is_zero())
                    CHECK(dm.d[r][c].terms().begin()->first == expect_shift);
        }
    }
}

TEST_CASE("adjustment of the genuinely skew order-3 instance") {
    auto m6 = gen_matrix(6, {1, 1, 1, -1, -1, -1}, {2, 3, 1, 6, 4, 5}, cyclotomics(3));
    auto adj = adjustment(m6.algebra, m6.datum, m6.shift, 7);
    INFO(adj.checks.summary());
    CHECK(adj.checks.ok());
    REQUIRE(adj.labels.size() == 3); // k = 0, 1, 2, with iota swapping 1 and 2
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j)
            CHECK(adj.af[i][j] == (i == j ? Laurent::one() : Laurent()));
}

TEST_CASE("non-integral input is rejected") {
    auto toy = gen_toy(2, cyclotomics(2));
    toy.algebra.mult[0][0] = {{0, Scalar::of(toy.algebra.field, Rat(1, 2))}};
    // the corrupted table no longer verifies, but integrality is checked first
    CHECK_THROWS_AS(adjustment(toy.algebra, toy.datum, toy.shift, 3), error);
}

namespace {
// Five-dimensional cellular algebra whose top cell has Gram form diag(1, 3):
// the decomposition changes at c = 3 while both characteristics keep the same
// nonzero simples, so the adjustment matrix is genuinely non-trivial.
Instance gram3_instance() {
    auto f = cyclotomics(2);
    Instance inst;
    GradedAlgebra& A = inst.algebra;
    A.field = f;
    A.dim = 5;
    A.labels = {"1", "c_ss", "c_st", "c_ts", "c_tt"};
    A.deg = {0, 0, 0, 0, 0};
    A.star = {0, 1, 3, 2, 4};
    A.unit = {Scalar::one(f), Scalar::zero(f), Scalar::zero(f), Scalar::zero(f),
              Scalar::zero(f)};
    A.mult.assign(5, std::vector<SparseVec>(5));
    for (size_t i = 0; i < 5; ++i) {
        A.mult[0][i] = {{i, Scalar::one(f)}};
        A.mult[i][0] = {{i, Scalar::one(f)}};
    }
    // c_{xy} c_{zw} = phi(y, z) c_{xw} with phi = diag(1, 3)
    auto cell = [](size_t x, size_t y) { return 1 + 2 * x + y; }; // (x,y) in {s,t}^2
    for (size_t x = 0; x < 2; ++x)
        for (size_t y = 0; y < 2; ++y)
            for (size_t z = 0; z < 2; ++z)
                for (size_t w = 0; w < 2; ++w) {
                    long phi = y == z ? (y == 0 ? 1 : 3) : 0;
                    if (phi)
                        A.mult[cell(x, y)][cell(z, w)] = {
                            {cell(x, w), Scalar::of_int(f, phi)}};
                }
    SkewCellDatum& D = inst.datum;
    D.elements = {"hi", "lo"};
    D.gt = {{false, true}, {false, false}};
    D.iota = {0, 1};
    D.tab_deg = {{0, 0}, {0}};
    D.iota_tab = {{0, 1}, {0}};
    D.basis_of = {{{1, 2}, {3, 4}}, {{0}}};
    ShiftAutomorphism& S = inst.shift;
    S.sigmaA = {0, 1, 2, 3, 4};
    S.sigmaP = {0, 1};
    S.sigmaT = {{0, 1}, {0}};
    return inst;
}
} // namespace

TEST_CASE("a genuinely nontrivial adjustment matrix") {
    auto inst = gram3_instance();
    inst.algebra.check_structure();
    REQUIRE(verify_skew_datum(inst.algebra, inst.datum).ok());
    auto adj = adjustment(inst.algebra, inst.datum, inst.shift, 3);
    INFO(adj.checks.summary());
    CHECK(adj.checks.ok());
    REQUIRE(adj.labels.size() == 2);
    // rows/columns ordered hi, lo: E_hi picks up one extra D_lo factor mod 3
    CHECK(adj.labels[0] == "hi");
    CHECK(adj.af[0][0].is_one());
    CHECK(adj.af[0][1] == Laurent::one());
    CHECK(adj.af[1][0].is_zero());
    CHECK(adj.af[1][1].is_one());
    // and D_F itself shows the extra factor
    auto hi_row = adj.df.d[0];
    CHECK(hi_row[0].is_one());
    CHECK(hi_row[1].is_one());
    // while c = 5 changes nothing
    auto adj5 = adjustment(inst.algebra, inst.datum, inst.shift, 5);
    CHECK(adj5.checks.ok());
    CHECK(adj5.af[0][1].is_zero());
}
