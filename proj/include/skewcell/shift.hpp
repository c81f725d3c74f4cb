#pragma once

#include "skewcell/datum.hpp"

namespace skewcell {

// Triple of compatible permutations: algebra basis, poset, tableaux.
struct ShiftAutomorphism {
    std::vector<size_t> sigmaA; // basis permutation
    std::vector<size_t> sigmaP; // poset permutation
    std::vector<std::vector<size_t>> sigmaT; // per lambda: T(lambda) -> T(sigmaP(lambda))
};

inline size_t perm_order(const std::vector<size_t>& perm) {
    size_t ord = 1;
    std::vector<size_t> cur(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) cur[i] = perm[i];
    auto is_id = [&]() {
        for (size_t i = 0; i < cur.size(); ++i)
            if (cur[i] != i) return false;
        return true;
    };
    while (!is_id()) {
        for (size_t i = 0; i < cur.size(); ++i) cur[i] = perm[cur[i]];
        ++ord;
        require(ord <= perm.size() * perm.size() + 1, "InternalError", "order runaway");
    }
    return ord;
}

struct ShiftOrders {
    size_t sp = 1; // order of sigmaA (= order of sigmaT)
    size_t sP = 1; // order of sigmaP
};

// All shift-automorphism invariants with witnesses; orders come back in the
// report trailer when everything passes.
inline Report verify_shift(const GradedAlgebra& A, const SkewCellDatum& D,
                           const ShiftAutomorphism& S, ShiftOrders* orders = nullptr) {
    Report rep;
    size_t np = D.poset_size();
    bool shapes = S.sigmaA.size() == A.dim && S.sigmaP.size() == np && S.sigmaT.size() == np;
    rep.add("permutation shapes", shapes,
            shapes ? "" : "sigmaA/sigmaP/sigmaT sizes do not match the datum");
    if (!shapes) return rep;

    // sigmaP poset automorphism
    bool pok = true;
    std::string pw;
    for (size_t i = 0; i < np && pok; ++i)
        for (size_t j = 0; j < np; ++j)
            if (D.gt[i][j] != D.gt[S.sigmaP[i]][S.sigmaP[j]]) {
                pok = false;
                pw = "order not preserved at (" + D.elements[i] + "," + D.elements[j] + ")";
                break;
            }
    rep.add("sigmaP poset automorphism", pok, pw);

    // (a) sigmaT maps T(lambda) to T(sigmaP lambda), degree-preserving
    bool aok = true;
    std::string aw;
    for (size_t lam = 0; lam < np && aok; ++lam) {
        if (S.sigmaT[lam].size() != D.tab_count(lam) ||
            D.tab_count(S.sigmaP[lam]) != D.tab_count(lam)) {
            aok = false;
            aw = "tableau counts differ at " + D.elements[lam];
            break;
        }
        for (size_t s = 0; s < D.tab_count(lam); ++s)
            if (D.tab_deg[S.sigmaP[lam]][S.sigmaT[lam][s]] != D.tab_deg[lam][s]) {
                aok = false;
                aw = "degree not preserved at " + D.elements[lam];
                break;
            }
    }
    rep.add("sigmaT degree-preserving", aok, aw);
    if (!aok) return rep;

    // (b) sigmaA(c_{s,t}) = c_{sigma s, sigma t}
    bool bok = true;
    std::string bw;
    for (size_t lam = 0; lam < np && bok; ++lam)
        for (size_t s = 0; s < D.tab_count(lam) && bok; ++s)
            for (size_t t = 0; t < D.tab_count(lam); ++t) {
                size_t lhs = S.sigmaA[D.basis_of[lam][s][t]];
                size_t rhs = D.basis_of[S.sigmaP[lam]][S.sigmaT[lam][s]][S.sigmaT[lam][t]];
                if (lhs != rhs) {
                    bok = false;
                    bw = "basis permutation mismatch at " + D.elements[lam];
                    break;
                }
            }
    rep.add("sigmaA matches sigmaT on cells", bok, bw);

    // (c) within each T(lambda): sigma_T^k fixes one tableau iff it fixes all
    bool cok = true;
    std::string cw;
    {
        // sigmaT as one permutation of the disjoint union of the T(lambda)
        std::vector<std::pair<size_t, size_t>> tabs;
        std::vector<std::vector<size_t>> tab_index(np);
        for (size_t lam = 0; lam < np; ++lam) {
            tab_index[lam].resize(D.tab_count(lam));
            for (size_t s = 0; s < D.tab_count(lam); ++s) {
                tab_index[lam][s] = tabs.size();
                tabs.push_back({lam, s});
            }
        }
        std::vector<size_t> tperm(tabs.size());
        for (size_t i = 0; i < tabs.size(); ++i) {
            auto [lam, s] = tabs[i];
            tperm[i] = tab_index[S.sigmaP[lam]][S.sigmaT[lam][s]];
        }
        size_t ord = perm_order(tperm);
        std::vector<size_t> power(tabs.size());
        for (size_t i = 0; i < tabs.size(); ++i) power[i] = i;
        for (size_t k = 1; k <= ord && cok; ++k) {
            for (size_t i = 0; i < tabs.size(); ++i) power[i] = tperm[power[i]];
            for (size_t lam = 0; lam < np && cok; ++lam) {
                if (D.tab_count(lam) == 0) continue;
                size_t fixed = 0;
                for (size_t s = 0; s < D.tab_count(lam); ++s)
                    if (power[tab_index[lam][s]] == tab_index[lam][s]) ++fixed;
                if (fixed != 0 && fixed != D.tab_count(lam)) {
                    cok = false;
                    cw = "sigma_T^" + std::to_string(k) + " fixes part of T(" +
                         D.elements[lam] + ")";
                }
            }
        }
    }
    rep.add("uniform orbit sizes per cell", cok, cw);

    // algebra automorphism: structure constants, unit, star, degrees
    bool mok = true;
    std::string mw;
    for (size_t i = 0; i < A.dim && mok; ++i) {
        if (A.deg[S.sigmaA[i]] != A.deg[i]) {
            mok = false;
            mw = "degree not preserved at " + A.labels[i];
            break;
        }
        if (S.sigmaA[A.star[i]] != A.star[S.sigmaA[i]]) {
            mok = false;
            mw = "sigmaA does not commute with star at " + A.labels[i];
            break;
        }
        for (size_t j = 0; j < A.dim; ++j) {
            std::vector<Scalar> lhs(A.dim, Scalar::zero(A.field));
            for (auto& [k, s] : A.prod(i, j)) lhs[S.sigmaA[k]] = s;
            auto rhs = densify(A.field, A.dim, A.prod(S.sigmaA[i], S.sigmaA[j]));
            if (!(lhs == rhs)) {
                mok = false;
                mw = "structure constants move at (" + A.labels[i] + "," + A.labels[j] + ")";
                break;
            }
        }
    }
    if (mok) {
        std::vector<Scalar> u(A.dim, Scalar::zero(A.field));
        for (size_t i = 0; i < A.dim; ++i) u[S.sigmaA[i]] = A.unit[i];
        if (!(u == A.unit)) {
            mok = false;
            mw = "unit not fixed";
        }
    }
    rep.add("sigmaA algebra automorphism", mok, mw);

    if (rep.ok() && orders) {
        orders->sp = perm_order(S.sigmaA);
        orders->sP = perm_order(S.sigmaP);
        rep.add("s_P divides s_p", orders->sp % orders->sP == 0,
                "s_P does not divide s_p");
    }
    return rep;
}

} // namespace skewcell
