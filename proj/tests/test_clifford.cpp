#include <catch2/catch_amalgamated.hpp>

#include "skewcell/clifford.hpp"
#include "skewcell/instances.hpp"

using namespace skewcell;

TEST_CASE("clifford suite on the toy instance") {
    auto toy = gen_toy(3, rationals());
    Scalar eps = Scalar::of_int(toy.algebra.field, -1);
    auto R = fixed_point_datum(toy.algebra, toy.datum, toy.shift, eps);
    Report rep = clifford_suite(toy.algebra, toy.datum, toy.shift, eps, R);
    INFO(rep.summary());
    CHECK(rep.ok());
    REQUIRE(rep.items.size() == 6);
    for (auto& it : rep.items) CHECK(it.name.find("skipped") == std::string::npos);
}

TEST_CASE("clifford suite on the matrix instance") {
    auto m4 = gen_matrix(4, {1, 1, -1, -1}, {2, 1, 4, 3}, rationals());
    Scalar eps = Scalar::of_int(m4.algebra.field, -1);
    auto R = fixed_point_datum(m4.algebra, m4.datum, m4.shift, eps);
    Report rep = clifford_suite(m4.algebra, m4.datum, m4.shift, eps, R);
    INFO(rep.summary());
    CHECK(rep.ok());
    for (auto& it : rep.items) CHECK(it.name.find("skipped") == std::string::npos);
}

TEST_CASE("clifford suite on the crossing involution") {
    // w = (1 3)(2 4) with weights alternating in sign
    auto m4 = gen_matrix(4, {1, -1, 1, -1}, {3, 4, 1, 2}, rationals());
    Scalar eps = Scalar::of_int(m4.algebra.field, -1);
    auto R = fixed_point_datum(m4.algebra, m4.datum, m4.shift, eps);
    CHECK(R.sub.dim == 8);
    Report rep = clifford_suite(m4.algebra, m4.datum, m4.shift, eps, R);
    INFO(rep.summary());
    CHECK(rep.ok());
}

TEST_CASE("clifford suite on the order-3 matrix instance") {
    auto F = cyclotomics(3);
    auto m6 = gen_matrix(6, {1, 1, 1, -1, -1, -1}, {2, 3, 1, 6, 4, 5}, F);
    Scalar eps = root_of_order(F, 3);
    auto R = fixed_point_datum(m6.algebra, m6.datum, m6.shift, eps);
    Report rep = clifford_suite(m6.algebra, m6.datum, m6.shift, eps, R);
    INFO(rep.summary());
    CHECK(rep.ok());
}

TEST_CASE("clifford suite on the KLR fixture") {
    auto inst = klr_instance("klr-2-2-2");
    Scalar eps = Scalar::of_int(inst.algebra.field, -1);
    auto R = fixed_point_datum(inst.algebra, inst.datum, inst.shift, eps);
    Report rep = clifford_suite(inst.algebra, inst.datum, inst.shift, eps, R);
    INFO(rep.summary());
    CHECK(rep.ok());
    for (auto& it : rep.items) CHECK(it.name.find("skipped") == std::string::npos);

    // the z element of the sweep behaves like sum_i i_1^{-1} e(i)
    auto z = find_z(inst.algebra, inst.shift, eps);
    REQUIRE(z.has_value());
    // z is supported on the degree-0 idempotents
    for (size_t i = 0; i < inst.algebra.dim; ++i)
        if (!(*z)[i].is_zero()) CHECK(inst.algebra.deg[i] == 0);
}

TEST_CASE("dual simples of the genuinely skew fixed-point algebra") {
    auto F = cyclotomics(3);
    auto m6 = gen_matrix(6, {1, 1, 1, -1, -1, -1}, {2, 3, 1, 6, 4, 5}, F);
    Scalar eps = root_of_order(F, 3);
    auto R = fixed_point_datum(m6.algebra, m6.datum, m6.shift, eps);
    CellEngine sub(R.sub, R.datum, false);
    for (size_t e = 0; e < R.datum.poset_size(); ++e) {
        CHECK(dual_simple_check(R.sub, sub, e));
        CHECK(sub.simple_nonzero(e) == sub.simple_nonzero(R.datum.iota[e]));
    }
    // phi properties hold on the skew datum too
    Report rep = phi_property_suite(R.sub, sub);
    INFO(rep.summary());
    CHECK(rep.ok());
}

TEST_CASE("form formula holds entrywise on the fixture") {
    // direct expansion of item (3) for the only two-tableau cell
    auto inst = klr_instance("klr-2-2-2");
    Scalar eps = Scalar::of_int(inst.algebra.field, -1);
    auto R = fixed_point_datum(inst.algebra, inst.datum, inst.shift, eps);
    CellEngine amb(inst.algebra, inst.datum, false);
    CellEngine sub(R.sub, R.datum, false);
    for (size_t ri = 0; ri < R.reps.size(); ++ri) {
        size_t lam = R.reps[ri];
        for (long k = 0; k < R.otilde[ri]; ++k) {
            const Matrix& Gk = sub.gram(R.element_of(ri, k));
            Scalar plam = Scalar::of_int(inst.algebra.field, R.plam[ri]);
            for (size_t si = 0; si < R.tsig[ri].size(); ++si)
                for (size_t ti = 0; ti < R.tsig[ri].size(); ++ti) {
                    Scalar rhs = Scalar::zero(inst.algebra.field);
                    size_t row = R.tsig[ri][si];
                    for (long l = 0; l < R.otilde[ri]; ++l) {
                        rhs = rhs +
                              R.eps_lam[ri].pow(k * l) * amb.gram(lam).at(row, R.tsig[ri][ti]);
                        row = R.sigma_lam[ri][row];
                    }
                    CHECK(Gk.at(si, ti) == plam * rhs);
                }
        }
    }
}
