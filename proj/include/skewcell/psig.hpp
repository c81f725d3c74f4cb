#pragma once

#include "skewcell/gcomb.hpp"

namespace skewcell {

struct OrbitData {
    long o = 1;    // size of the sigma_P-orbit of lambda
    long plam = 1; // p / o
};

inline std::vector<Multipartition> sigma_orbit(const Multipartition& lam, const HeckeParams& P) {
    std::vector<Multipartition> orbit{lam};
    Multipartition cur = sigma_partition(lam, P);
    while (!(cur == lam)) {
        orbit.push_back(cur);
        cur = sigma_partition(cur, P);
    }
    return orbit;
}

inline OrbitData orbit_data(const Multipartition& lam, const HeckeParams& P) {
    long o = (long)sigma_orbit(lam, P).size();
    require(P.p % o == 0, "InternalError", "orbit size must divide p");
    return {o, P.p / o};
}

// lexicographically least member of each sigma_P-orbit, sorted
inline std::vector<Multipartition> parts_reps(long n, const HeckeParams& P) {
    std::vector<Multipartition> reps;
    for (const auto& lam : enumerate_partitions(n, P)) {
        auto orbit = sigma_orbit(lam, P);
        if (*std::min_element(orbit.begin(), orbit.end()) == lam) reps.push_back(lam);
    }
    return reps;
}

// representatives of the <sigma^{o_lambda}>-orbits on Std(lambda); the common
// orbit size (the number of k-values of the fixed-point cells) comes with them
struct StdOrbitData {
    std::vector<Tableau> reps;
    long otilde = 1;
};

inline StdOrbitData std_reps(const Multipartition& lam, const HeckeParams& P) {
    long o = orbit_data(lam, P).o;
    auto all = enumerate_std(lam);
    auto step = [&](const Tableau& t) {
        Tableau s = t;
        for (long j = 0; j < o; ++j) s = sigma_tableau(s, P);
        return s;
    };
    std::vector<bool> seen(all.size(), false);
    auto index_of = [&](const Tableau& t) -> size_t {
        for (size_t i = 0; i < all.size(); ++i)
            if (all[i] == t) return i;
        fail("InternalError", "sigma left the standard tableaux");
    };
    StdOrbitData out;
    long size = -1;
    for (size_t i = 0; i < all.size(); ++i) {
        if (seen[i]) continue;
        std::vector<size_t> orbit;
        size_t j = i;
        do {
            orbit.push_back(j);
            seen[j] = true;
            j = index_of(step(all[j]));
        } while (j != i);
        if (size < 0) size = (long)orbit.size();
        require(size == (long)orbit.size(), "InternalError",
                "tableau orbits of unequal size under sigma^o");
        out.reps.push_back(all[*std::min_element(orbit.begin(), orbit.end())]);
    }
    if (all.empty()) size = 1; // empty shape: single empty tableau handled above
    out.otilde = size < 0 ? 1 : size;
    return out;
}

// Combinatorial skeleton of the fixed-point poset P_sigma: orbit
// representatives with (lambda, k mod otilde) labels, degrees and the order
// lambda >_sigma mu  iff  sigma^k(lambda) > mu for some k.
struct PsigSkeleton {
    HeckeParams params;
    std::vector<Multipartition> reps;
    std::vector<OrbitData> orbits;          // per rep
    std::vector<long> otilde;               // per rep
    std::vector<std::vector<Tableau>> stdreps; // per rep
    std::vector<std::vector<long>> degrees; // per rep, aligned with stdreps
    std::vector<std::vector<bool>> gt;      // gt[i][j]: rep_i >_sigma rep_j strictly
    std::vector<std::pair<long, long>> elements; // (rep index, k)

    long element_index(long rep, long k) const {
        for (size_t i = 0; i < elements.size(); ++i)
            if (elements[i].first == rep && elements[i].second == k) return (long)i;
        fail("InternalError", "missing P_sigma element");
    }
    std::pair<long, long> iota(long rep, long k) const {
        long ot = otilde[rep];
        return {rep, ((-k) % ot + ot) % ot};
    }
};

inline PsigSkeleton psig_skeleton(long n, const HeckeParams& P) {
    PsigSkeleton sk;
    sk.params = P;
    sk.reps = parts_reps(n, P);
    size_t m = sk.reps.size();
    sk.orbits.resize(m);
    sk.otilde.resize(m);
    sk.stdreps.resize(m);
    sk.degrees.resize(m);
    for (size_t i = 0; i < m; ++i) {
        sk.orbits[i] = orbit_data(sk.reps[i], P);
        auto sd = std_reps(sk.reps[i], P);
        sk.otilde[i] = sd.otilde;
        sk.stdreps[i] = std::move(sd.reps);
        for (const auto& t : sk.stdreps[i]) sk.degrees[i].push_back(tableau_degree(t, P));
    }
    sk.gt.assign(m, std::vector<bool>(m, false));
    for (size_t i = 0; i < m; ++i) {
        auto orbit = sigma_orbit(sk.reps[i], P);
        for (size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            for (const auto& shifted : orbit)
                if (strictly_dominates(shifted, sk.reps[j], P)) {
                    sk.gt[i][j] = true;
                    break;
                }
        }
    }
    for (size_t i = 0; i < m; ++i)
        for (long k = 0; k < sk.otilde[i]; ++k) sk.elements.push_back({(long)i, k});
    return sk;
}

} // namespace skewcell
