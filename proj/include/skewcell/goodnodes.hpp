#pragma once

#include "skewcell/gcomb.hpp"

namespace skewcell {

// Good i-node of lambda: among the removable i-nodes A with
//   d_A = #{addable i-nodes below A} - #{removable i-nodes below A} <= 0
// and with every window down to a lower removable i-node C strictly negative,
// take the x-greatest. Loading ties among the relevant nodes are refused
// (they cannot occur for strict parameters).
inline std::optional<Node> good_node(const Multipartition& lam, const Residue& i,
                                     const HeckeParams& P) {
    struct Entry {
        Rat x;
        bool addable;
        Node node;
    };
    std::vector<Entry> line;
    for (const Node& g : lam.addable_nodes())
        if (residue(g, P) == i) line.push_back({loading(g, P), true, g});
    for (const Node& g : lam.removable_nodes())
        if (residue(g, P) == i) line.push_back({loading(g, P), false, g});
    std::sort(line.begin(), line.end(), [](const Entry& a, const Entry& b) { return a.x < b.x; });
    for (size_t k = 0; k + 1 < line.size(); ++k)
        require(line[k].x != line[k + 1].x, "TiedLoadings",
                "tied loadings among addable/removable i-nodes");

    std::optional<Node> best;
    for (size_t a = 0; a < line.size(); ++a) {
        if (line[a].addable) continue;
        long d = 0;
        for (size_t b = 0; b < a; ++b) d += line[b].addable ? 1 : -1;
        if (d > 0) continue;
        bool windows_ok = true;
        for (size_t c = 0; c < a && windows_ok; ++c) {
            if (line[c].addable) continue;
            long w = 0;
            for (size_t b = c + 1; b < a; ++b) w += line[b].addable ? 1 : -1;
            if (w >= 0) windows_ok = false;
        }
        if (windows_ok) best = line[a].node; // entries scan in increasing x
    }
    return best;
}

// rho-Uglov l-partitions of n: recursive closure under stripping good nodes
inline std::vector<Multipartition> uglov(long n, const HeckeParams& P) {
    std::vector<Multipartition> prev{Multipartition::empty(P.ell)};
    for (long k = 1; k <= n; ++k) {
        std::vector<Multipartition> next;
        for (const auto& lam : enumerate_partitions(k, P)) {
            bool good = false;
            for (long a = 0; a < P.e && !good; ++a)
                for (long b = 0; b < P.pprime && !good; ++b) {
                    auto A = good_node(lam, Residue{a, b}, P);
                    if (!A) continue;
                    Multipartition mu = lam.without_node(*A);
                    if (std::binary_search(prev.begin(), prev.end(), mu)) good = true;
                }
            if (good) next.push_back(lam);
        }
        prev = std::move(next);
    }
    return prev;
}

} // namespace skewcell
