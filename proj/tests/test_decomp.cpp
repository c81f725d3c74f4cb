#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "skewcell/fixedpoint.hpp"
#include "skewcell/instances.hpp"

using namespace skewcell;

TEST_CASE("jacobson radical of the toy algebra") {
    auto inst = gen_toy(3, rationals());
    CellEngine eng(inst.algebra, inst.datum);
    auto J = jacobson_radical(inst.algebra, eng);
    CHECK(J.basis.size() == 4); // x, x^2, y, y^2
    CHECK(J.nilpotency <= 3);
    // J is an ideal: a*j and j*a stay in the span
    for (auto& j : J.basis)
        for (size_t ai = 0; ai < inst.algebra.dim; ++ai) {
            auto l = inst.algebra.mul_vec(inst.algebra.basis_vec(ai), j);
            auto r = inst.algebra.mul_vec(j, inst.algebra.basis_vec(ai));
            auto both = J.basis;
            both.push_back(l);
            both.push_back(r);
            CHECK(span_rank(inst.algebra.field, both) == J.basis.size());
        }
}

TEST_CASE("matrix algebra has zero radical") {
    auto inst = gen_matrix(4, {1, 2, -2, -1}, {2, 1, 4, 3}, rationals());
    CellEngine eng(inst.algebra, inst.datum);
    auto J = jacobson_radical(inst.algebra, eng);
    CHECK(J.basis.empty());
    auto dm = graded_decomp(inst.algebra, eng);
    REQUIRE(dm.rows.size() == 1);
    REQUIRE(dm.cols.size() == 1);
    CHECK(dm.d[0][0].is_one());
}

TEST_CASE("toy graded decomposition matches the oracle") {
    for (auto& f : {rationals(), prime_field(3)}) {
        auto inst = gen_toy(3, f);
        CellEngine eng(inst.algebra, inst.datum);
        auto dm = graded_decomp(inst.algebra, eng);
        for (size_t r = 0; r < dm.rows.size(); ++r) {
            auto expect = oracles::decomp_row_oracle(inst.algebra, eng, dm.rows[r], dm.cols);
            CHECK(dm.d[r] == expect);
        }
        // explicit values: d_{(i,k),(i,0)} = t^k, zero across components
        for (size_t r = 0; r < dm.rows.size(); ++r) {
            size_t lam = dm.rows[r];
            long side = lam < 3 ? 0 : 1; // toy cell ids ordered (0,k), (1,k)
            long k = (long)(lam % 3);
            for (size_t c = 0; c < dm.cols.size(); ++c) {
                size_t mu = dm.cols[c];
                long mside = mu < 3 ? 0 : 1;
                Laurent want = (side == mside) ? Laurent::t(k) : Laurent();
                CHECK(dm.d[r][c] == want);
            }
        }
    }
}

TEST_CASE("decomposition at t=1 is consistent") {
    auto inst = gen_toy(4, rationals());
    CellEngine eng(inst.algebra, inst.datum);
    auto dm = graded_decomp(inst.algebra, eng);
    for (size_t r = 0; r < dm.rows.size(); ++r) {
        long long total = 0;
        for (size_t c = 0; c < dm.cols.size(); ++c)
            total += dm.d[r][c].eval_one() * (long long)eng.simple(dm.cols[c]).dim();
        CHECK(total == (long long)eng.cell_module(dm.rows[r]).mod.dim());
    }
}

TEST_CASE("dominance oracle agreement on a spot grid") {
    auto P = derive_params(3, 2, 2, minimal_strict_rho(1, 3, 2));
    auto parts = enumerate_partitions(2, P);
    for (auto& lam : parts)
        for (auto& mu : parts)
            CHECK(dominates(lam, mu, P) == oracles::dominates_bruteforce(lam, mu, P));
}

TEST_CASE("graded decomposition of the skew fixed-point algebra") {
    auto F = cyclotomics(3);
    auto m6 = gen_matrix(6, {1, 1, 1, -1, -1, -1}, {2, 3, 1, 6, 4, 5}, F);
    auto R = fixed_point_datum(m6.algebra, m6.datum, m6.shift, root_of_order(F, 3));
    CellEngine eng(R.sub, R.datum, false);
    auto dm = graded_decomp(R.sub, eng);
    // semisimple: three simple families, identity matrix
    REQUIRE(dm.rows.size() == 3);
    REQUIRE(dm.cols.size() == 3);
    for (size_t r = 0; r < 3; ++r)
        for (size_t c = 0; c < 3; ++c)
            CHECK(dm.d[r][c] == (dm.rows[r] == dm.cols[c] ? Laurent::one() : Laurent()));
    auto J = jacobson_radical(R.sub, eng);
    CHECK(J.basis.empty());
}
