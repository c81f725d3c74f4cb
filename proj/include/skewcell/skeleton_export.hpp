#pragma once

#include <json.hpp>

#include "skewcell/goodnodes.hpp"
#include "skewcell/psig.hpp"

namespace skewcell {

inline nlohmann::ordered_json multipartition_json(const Multipartition& lam) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (auto& comp : lam.components()) out.push_back(comp);
    return out;
}

inline nlohmann::ordered_json tableau_json(const Tableau& t) {
    nlohmann::ordered_json out;
    out["shape"] = multipartition_json(t.shape());
    out["entries"] = t.entries();
    return out;
}

inline nlohmann::ordered_json params_json(const HeckeParams& P) {
    nlohmann::ordered_json out;
    out["e"] = P.e;
    out["p"] = P.p;
    out["n"] = P.n;
    out["d"] = P.d;
    out["ell"] = P.ell;
    out["m"] = P.m;
    out["p_prime"] = P.pprime;
    out["e_prime"] = P.eprime;
    out["rho"] = P.rho;
    out["N"] = P.N;
    out["strict"] = P.strict;
    std::vector<std::string> kap;
    for (auto& k : P.kappa) kap.push_back(rat_str(k));
    out["kappa"] = kap;
    return out;
}

// Combinatorial skeleton of the fixed-point cell structure: the labels a
// full datum would carry, with no basis values.
inline nlohmann::ordered_json skeleton_json(const PsigSkeleton& sk) {
    nlohmann::ordered_json out;
    out["params"] = params_json(sk.params);
    nlohmann::ordered_json reps = nlohmann::ordered_json::array();
    for (size_t i = 0; i < sk.reps.size(); ++i) {
        nlohmann::ordered_json r;
        r["shape"] = multipartition_json(sk.reps[i]);
        r["id"] = sk.reps[i].str();
        r["orbit_size"] = sk.orbits[i].o;
        r["p_lambda"] = sk.orbits[i].plam;
        r["o_tilde"] = sk.otilde[i];
        nlohmann::ordered_json tabs = nlohmann::ordered_json::array();
        for (size_t s = 0; s < sk.stdreps[i].size(); ++s) {
            nlohmann::ordered_json t = tableau_json(sk.stdreps[i][s]);
            t["degree"] = sk.degrees[i][s];
            tabs.push_back(t);
        }
        r["tableau_reps"] = tabs;
        reps.push_back(r);
    }
    out["reps"] = reps;
    nlohmann::ordered_json rel = nlohmann::ordered_json::array();
    for (size_t i = 0; i < sk.reps.size(); ++i)
        for (size_t j = 0; j < sk.reps.size(); ++j)
            if (sk.gt[i][j]) rel.push_back({i, j});
    out["relations"] = rel;
    nlohmann::ordered_json elems = nlohmann::ordered_json::array();
    for (auto& [rep, k] : sk.elements) elems.push_back({rep, k});
    out["elements"] = elems;
    return out;
}

} // namespace skewcell
