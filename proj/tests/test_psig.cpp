#include <catch2/catch_amalgamated.hpp>

#include "skewcell/psig.hpp"

using namespace skewcell;

namespace {
Multipartition mp(const HeckeParams& P, std::vector<std::vector<long>> comps) {
    return Multipartition(P.ell, std::move(comps));
}
} // namespace

TEST_CASE("orbit data for ell = p = 2") {
    auto P = derive_params(2, 2, 2, {0});
    CHECK(orbit_data(mp(P, {{1}, {1}}), P).o == 1);
    CHECK(orbit_data(mp(P, {{1}, {1}}), P).plam == 2);
    CHECK(orbit_data(mp(P, {{2}, {}}), P).o == 2);
    CHECK(orbit_data(mp(P, {{2}, {}}), P).plam == 1);
}

TEST_CASE("orbit counting: sum of orbit sizes is |Parts|") {
    for (auto [e, p, d] : {std::tuple<long, long, long>{2, 2, 1}, {3, 3, 1}, {2, 2, 2}}) {
        for (long n = 0; n <= 4; ++n) {
            auto P = derive_params(e, p, n, minimal_strict_rho(d, e, n));
            long total = 0;
            for (auto& rep : parts_reps(n, P)) total += orbit_data(rep, P).o;
            CHECK(total == (long)enumerate_partitions(n, P).size());
        }
    }
}

TEST_CASE("skeleton for n = 0") {
    auto P = derive_params(2, 2, 0, {0});
    auto sk = psig_skeleton(0, P);
    REQUIRE(sk.reps.size() == 1);
    CHECK(sk.elements.size() == 1);
    CHECK(sk.otilde[0] == 1);
    CHECK(sk.degrees[0] == std::vector<long>{0});
}

TEST_CASE("fixture skeleton") {
    auto P = derive_params(2, 2, 2, {0});
    auto sk = psig_skeleton(2, P);
    REQUIRE(sk.reps.size() == 3);
    // reps sorted lexicographically
    CHECK(sk.reps[0] == mp(P, {{}, {1, 1}}));
    CHECK(sk.reps[1] == mp(P, {{}, {2}}));
    CHECK(sk.reps[2] == mp(P, {{1}, {1}}));
    CHECK(sk.otilde == std::vector<long>{1, 1, 2});
    CHECK(sk.elements.size() == 4);
    // degrees of the tableau representatives
    CHECK(sk.degrees[0] == std::vector<long>{0});
    CHECK(sk.degrees[1] == std::vector<long>{2});
    CHECK(sk.degrees[2] == std::vector<long>{1});
    // dimension bookkeeping: sum |Std_sigma|^2 * #k = l^n n!/p for n = 1, 2
    for (long n : {1L, 2L}) {
        auto Pn = derive_params(2, 2, n, {0});
        auto skn = psig_skeleton(n, Pn);
        long dim = 0;
        for (size_t i = 0; i < skn.reps.size(); ++i)
            dim += (long)(skn.stdreps[i].size() * skn.stdreps[i].size()) * skn.otilde[i];
        long fact = 1;
        for (long k = 2; k <= n; ++k) fact *= k;
        long full = fact;
        for (long k = 0; k < n; ++k) full *= Pn.ell;
        CHECK(dim == full / Pn.p);
    }
    // iota
    CHECK(sk.iota(2, 1) == std::pair<long, long>{2, 1});
    CHECK(sk.iota(2, 0) == std::pair<long, long>{2, 0});
}

TEST_CASE("P_sigma order axioms and orbit incomparability") {
    for (auto [e, p, d] : {std::tuple<long, long, long>{2, 2, 1}, {3, 3, 1}}) {
        for (long n = 1; n <= 4; ++n) {
            auto P = derive_params(e, p, n, minimal_strict_rho(d, e, n));
            auto sk = psig_skeleton(n, P);
            size_t m = sk.reps.size();
            for (size_t i = 0; i < m; ++i) CHECK_FALSE(sk.gt[i][i]);
            for (size_t i = 0; i < m; ++i)
                for (size_t j = 0; j < m; ++j) {
                    if (sk.gt[i][j]) CHECK_FALSE(sk.gt[j][i]);
                    for (size_t k = 0; k < m; ++k)
                        if (sk.gt[i][j] && sk.gt[j][k]) CHECK(sk.gt[i][k]);
                }
            // orbit members are incomparable
            for (auto& lam : enumerate_partitions(n, P)) {
                auto orbit = sigma_orbit(lam, P);
                for (size_t k = 1; k < orbit.size(); ++k) {
                    CHECK_FALSE(strictly_dominates(lam, orbit[k], P));
                    CHECK_FALSE(strictly_dominates(orbit[k], lam, P));
                }
            }
        }
    }
}
