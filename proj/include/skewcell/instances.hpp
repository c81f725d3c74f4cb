#pragma once

#include "skewcell/algfile.hpp"
#include "skewcell/klr_fixture_data.hpp"
#include "skewcell/shift.hpp"

namespace skewcell {

struct Instance {
    GradedAlgebra algebra;
    SkewCellDatum datum;
    ShiftAutomorphism shift;
};

// A = F[x]/(x^m) + F[y]/(y^m), cells (i,k) with c_(i,k) = x^k resp. y^k in
// algebra degree 2k and tableau degree k; iota and sigma swap the summands.
inline Instance gen_toy(long m, const FieldPtr& field) {
    require(m >= 1, "BadParams", "toy instance needs m >= 1");
    Instance inst;
    GradedAlgebra& A = inst.algebra;
    A.field = field;
    A.dim = 2 * m;
    auto idx = [&](long side, long k) { return (size_t)(side * m + k); };
    for (long side = 0; side < 2; ++side)
        for (long k = 0; k < m; ++k) {
            A.labels.push_back((side ? "y^" : "x^") + std::to_string(k));
            A.deg.push_back(2 * k);
        }
    A.mult.assign(A.dim, std::vector<SparseVec>(A.dim));
    for (long s1 = 0; s1 < 2; ++s1)
        for (long k1 = 0; k1 < m; ++k1)
            for (long s2 = 0; s2 < 2; ++s2)
                for (long k2 = 0; k2 < m; ++k2)
                    if (s1 == s2 && k1 + k2 < m)
                        A.mult[idx(s1, k1)][idx(s2, k2)] = {
                            {idx(s1, k1 + k2), Scalar::one(field)}};
    A.star.resize(A.dim);
    for (long side = 0; side < 2; ++side)
        for (long k = 0; k < m; ++k) A.star[idx(side, k)] = idx(1 - side, k);
    A.unit.assign(A.dim, Scalar::zero(field));
    A.unit[idx(0, 0)] = Scalar::one(field);
    A.unit[idx(1, 0)] = Scalar::one(field);

    SkewCellDatum& D = inst.datum;
    auto cell = [&](long side, long k) { return (size_t)(side * m + k); };
    for (long side = 0; side < 2; ++side)
        for (long k = 0; k < m; ++k)
            D.elements.push_back("(" + std::to_string(side) + "," + std::to_string(k) + ")");
    size_t np = 2 * m;
    D.gt.assign(np, std::vector<bool>(np, false));
    for (long side = 0; side < 2; ++side)
        for (long k1 = 0; k1 < m; ++k1)
            for (long k2 = 0; k2 < m; ++k2)
                if (k1 > k2) D.gt[cell(side, k1)][cell(side, k2)] = true;
    D.iota.resize(np);
    for (long side = 0; side < 2; ++side)
        for (long k = 0; k < m; ++k) D.iota[cell(side, k)] = cell(1 - side, k);
    D.tab_deg.assign(np, {});
    D.iota_tab.assign(np, {0});
    D.basis_of.assign(np, {});
    for (long side = 0; side < 2; ++side)
        for (long k = 0; k < m; ++k) {
            D.tab_deg[cell(side, k)] = {k};
            D.basis_of[cell(side, k)] = {{idx(side, k)}};
        }

    ShiftAutomorphism& S = inst.shift;
    S.sigmaA = A.star; // the swap is also an algebra automorphism here
    S.sigmaP = D.iota;
    S.sigmaT.assign(np, {0});
    return inst;
}

// Graded matrix algebra with cellular basis F_ij = E_{i,n+1-j}, one poset
// element, deg(i) = d_i; sigma comes from a permutation w made of p disjoint
// (n/p)-cycles with w(n+1-i) = n+1-w(i).
inline Instance gen_matrix(long n, const std::vector<long>& dvec, const std::vector<long>& w,
                           const FieldPtr& field) {
    require(n >= 1 && (long)dvec.size() == n, "BadWeights", "need n weights");
    for (long i = 1; i <= n; ++i)
        require(dvec[i - 1] + dvec[n - i] == 0, "BadWeights", "d_i + d_{n+1-i} != 0");
    require((long)w.size() == n, "BadPermutation", "w must permute {1..n}");
    {
        std::vector<bool> seen(n, false);
        for (long v : w) {
            require(v >= 1 && v <= n && !seen[v - 1], "BadPermutation", "w is not a permutation");
            seen[v - 1] = true;
        }
        for (long i = 1; i <= n; ++i)
            require(w[n - i] == n + 1 - w[i - 1], "BadPermutation", "w(n+1-i) != n+1-w(i)");
        // uniform cycle type: p disjoint (n/p)-cycles
        std::vector<long> cyclen;
        std::vector<bool> used(n, false);
        for (long i = 0; i < n; ++i) {
            if (used[i]) continue;
            long len = 0, j = i;
            do {
                used[j] = true;
                ++len;
                j = w[j] - 1;
            } while (j != i);
            cyclen.push_back(len);
        }
        for (long len : cyclen)
            require(len == cyclen[0], "BadPermutation",
                    "w must be a product of disjoint cycles of equal length");
    }

    Instance inst;
    GradedAlgebra& A = inst.algebra;
    A.field = field;
    A.dim = (size_t)(n * n);
    auto idx = [&](long i, long j) { return (size_t)((i - 1) * n + (j - 1)); }; // F_ij
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= n; ++j) {
            A.labels.push_back("F" + std::to_string(i) + std::to_string(j));
            A.deg.push_back(dvec[i - 1] + dvec[j - 1]);
        }
    A.mult.assign(A.dim, std::vector<SparseVec>(A.dim));
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= n; ++j)
            for (long k = 1; k <= n; ++k)
                // F_ij F_{(n+1-j)k} = F_ik
                A.mult[idx(i, j)][idx(n + 1 - j, k)] = {{idx(i, k), Scalar::one(field)}};
    A.star.resize(A.dim);
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= n; ++j) A.star[idx(i, j)] = idx(j, i);
    A.unit.assign(A.dim, Scalar::zero(field));
    for (long i = 1; i <= n; ++i) A.unit[idx(i, n + 1 - i)] = Scalar::one(field); // sum E_ii

    SkewCellDatum& D = inst.datum;
    D.elements = {"n=" + std::to_string(n)};
    D.gt = {{false}};
    D.iota = {0};
    D.tab_deg = {std::vector<long>(dvec.begin(), dvec.end())};
    D.iota_tab = {{}};
    D.iota_tab[0].resize(n);
    for (long i = 0; i < n; ++i) D.iota_tab[0][i] = i;
    D.basis_of = {{}};
    D.basis_of[0].assign(n, std::vector<size_t>(n));
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= n; ++j) D.basis_of[0][i - 1][j - 1] = idx(i, j);

    ShiftAutomorphism& S = inst.shift;
    S.sigmaP = {0};
    S.sigmaT = {{}};
    S.sigmaT[0].resize(n);
    for (long i = 1; i <= n; ++i) S.sigmaT[0][i - 1] = (size_t)(w[i - 1] - 1);
    S.sigmaA.resize(A.dim);
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= n; ++j) S.sigmaA[idx(i, j)] = idx(w[i - 1], w[j - 1]);
    return inst;
}

// frozen fixture catalog; the files are generated by tools/klr_fixture_oracle.py
inline AlgebraFile klr_fixture(const std::string& id) {
    require(id == "klr-2-2-2", "UnknownFixture", "no fixture named '" + id + "'");
    return load_algebra(klr_2_2_2_json);
}

inline Instance klr_instance(const std::string& id) {
    AlgebraFile file = klr_fixture(id);
    require(file.datum.has_value() && file.shift.has_value(), "UnknownFixture",
            "fixture is missing its datum or shift block");
    return {std::move(file.algebra), std::move(*file.datum), std::move(*file.shift)};
}

} // namespace skewcell
