#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skewcell/field.hpp"

namespace skewcell {

// ---------------------------------------------------------------------------
// Parameters
// ---------------------------------------------------------------------------

// Combinatorial parameters for G(l,p,n): l = p*d components, quantum
// characteristic e, d-charge rho, derived multicharge kappa and the
// tie-breaking denominator N.
struct HeckeParams {
    long e = 2, p = 2, n = 0, d = 1;
    long ell = 0, m = 1, pprime = 0, eprime = 0, N = 0;
    std::vector<long> rho;
    std::vector<Rat> kappa; // kappa[l-1], 1-based l
    bool strict = true;

    bool case1() const { return m > 1; }
};

inline long gcd_long(long a, long b) {
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

inline HeckeParams derive_params(long e, long p, long n, std::vector<long> rho,
                                 bool strict = true) {
    require(e >= 2 && p >= 2 && n >= 0, "BadParams", "need e >= 2, p >= 2, n >= 0");
    require(!rho.empty(), "BadParams", "empty d-charge");
    HeckeParams P;
    P.e = e;
    P.p = p;
    P.n = n;
    P.d = (long)rho.size();
    P.ell = p * P.d;
    P.m = gcd_long(e, p);
    P.pprime = p / P.m;
    P.eprime = e / P.m;
    P.rho = std::move(rho);
    P.strict = strict;
    if (strict) {
        require(P.rho[0] == 0, "BadDCharge", "strict d-charge must start at 0");
        for (long a = 1; a < P.d; ++a)
            require(P.rho[a] - P.rho[a - 1] >= (2 * n + 3) * e, "BadDCharge",
                    "d-charge gap below (2n+3)e");
    }
    P.N = 2 * n * e * P.pprime * (P.ell + 1) + 1;
    P.kappa.resize(P.ell);
    for (long l = 1; l <= P.ell; ++l) {
        long a = (l - 1) / p, b = (l - 1) % p;
        P.kappa[l - 1] = Rat(P.rho[a]) + Rat(b * P.eprime, P.pprime);
        P.kappa[l - 1].canonicalize();
    }
    return P;
}

// smallest strict d-charge for a given block count
inline std::vector<long> minimal_strict_rho(long d, long e, long n) {
    std::vector<long> rho(d);
    for (long a = 0; a < d; ++a) rho[a] = a * (2 * n + 3) * e;
    return rho;
}

// ---------------------------------------------------------------------------
// Nodes, residues, loadings
// ---------------------------------------------------------------------------

struct Node {
    long r = 0, c = 0, l = 1;
    auto operator<=>(const Node&) const = default;
    std::string str() const {
        return "(" + std::to_string(r) + "," + std::to_string(c) + "," + std::to_string(l) + ")";
    }
};

// Canonical form of eps^b q^a in the residue set I x J'.
struct Residue {
    long a = 0, b = 0;
    auto operator<=>(const Residue&) const = default;
    std::string str() const { return "[" + std::to_string(a) + "," + std::to_string(b) + "]"; }
};

// canonical pair for the value eps^j q^i, folding eps^{p'} = q^{e'}
inline Residue canonical_residue(long i, long j, const HeckeParams& P) {
    long jm = ((j % P.p) + P.p) % P.p;
    long b = jm % P.pprime;
    long kf = jm / P.pprime;
    long a = (((i + kf * P.eprime) % P.e) + P.e) % P.e;
    return {a, b};
}

inline Residue residue(const Node& g, const HeckeParams& P) {
    long a = (g.l - 1) / P.p, b = (g.l - 1) % P.p;
    return canonical_residue(P.rho[a] + g.c - g.r, b, P);
}

inline Residue res_mul_q(const Residue& r, long k, const HeckeParams& P) {
    return canonical_residue(r.a + k, r.b, P);
}

inline Residue res_mul_eps(const Residue& r, const HeckeParams& P) {
    return canonical_residue(r.a, r.b + 1, P);
}

inline Rat loading(const Node& g, const HeckeParams& P) {
    Rat x = Rat(g.c - g.r) +
            (P.kappa[g.l - 1] - Rat(g.l - 1, P.ell + 1)) / P.e - Rat(g.r + g.c, P.N);
    x.canonicalize();
    return x;
}

inline Node sigma_node(const Node& g, const HeckeParams& P) {
    return {g.r, g.c, g.l % P.p == 0 ? g.l + 1 - P.p : g.l + 1};
}

inline Node sigma_inv_node(const Node& g, const HeckeParams& P) {
    return {g.r, g.c, g.l % P.p == 1 ? g.l - 1 + P.p : g.l - 1};
}

// ---------------------------------------------------------------------------
// Multipartitions
// ---------------------------------------------------------------------------

// l-tuple of partitions; the diagram of component l has node (r,c,l)
// whenever 1 <= c <= comps[l-1][r-1].
class Multipartition {
public:
    Multipartition() = default;
    Multipartition(long ell, std::vector<std::vector<long>> comps) : comps_(std::move(comps)) {
        comps_.resize(ell);
        for (auto& c : comps_) {
            while (!c.empty() && c.back() == 0) c.pop_back();
            for (size_t i = 0; i + 1 < c.size(); ++i)
                require(c[i] >= c[i + 1], "BadPartition", "parts not weakly decreasing");
        }
    }
    static Multipartition empty(long ell) { return Multipartition(ell, {}); }

    long ell() const { return (long)comps_.size(); }
    const std::vector<std::vector<long>>& components() const { return comps_; }
    long size() const {
        long s = 0;
        for (auto& c : comps_)
            for (long x : c) s += x;
        return s;
    }
    long row_len(long l, long r) const { // 1-based
        const auto& c = comps_[l - 1];
        return r >= 1 && r <= (long)c.size() ? c[r - 1] : 0;
    }
    bool contains(const Node& g) const {
        return g.l >= 1 && g.l <= ell() && g.r >= 1 && g.c >= 1 && g.c <= row_len(g.l, g.r);
    }

    // fixed traversal: components left to right, then by (c, r)
    std::vector<Node> nodes() const {
        std::vector<Node> out;
        for (long l = 1; l <= ell(); ++l) {
            std::vector<Node> comp;
            for (long r = 1; r <= (long)comps_[l - 1].size(); ++r)
                for (long c = 1; c <= comps_[l - 1][r - 1]; ++c) comp.push_back({r, c, l});
            std::sort(comp.begin(), comp.end(), [](const Node& x, const Node& y) {
                return std::pair(x.c, x.r) < std::pair(y.c, y.r);
            });
            out.insert(out.end(), comp.begin(), comp.end());
        }
        return out;
    }

    std::vector<Node> addable_nodes() const {
        std::vector<Node> out;
        for (long l = 1; l <= ell(); ++l) {
            const auto& c = comps_[l - 1];
            for (long r = 1; r <= (long)c.size() + 1; ++r) {
                long len = row_len(l, r);
                long above = r == 1 ? -1 : row_len(l, r - 1);
                if (r == 1 || len < above) out.push_back({r, len + 1, l});
            }
        }
        return out;
    }
    std::vector<Node> removable_nodes() const {
        std::vector<Node> out;
        for (long l = 1; l <= ell(); ++l) {
            const auto& c = comps_[l - 1];
            for (long r = 1; r <= (long)c.size(); ++r) {
                long len = c[r - 1];
                long below = row_len(l, r + 1);
                if (len > below) out.push_back({r, len, l});
            }
        }
        return out;
    }

    Multipartition with_node(const Node& g) const {
        auto comps = comps_;
        auto& c = comps[g.l - 1];
        if ((long)c.size() < g.r) c.resize(g.r, 0);
        require(c[g.r - 1] + 1 == g.c, "BadNode", "node not addable");
        ++c[g.r - 1];
        return Multipartition(ell(), std::move(comps));
    }
    Multipartition without_node(const Node& g) const {
        auto comps = comps_;
        auto& c = comps[g.l - 1];
        require(g.r <= (long)c.size() && c[g.r - 1] == g.c, "BadNode", "node not removable");
        --c[g.r - 1];
        return Multipartition(ell(), std::move(comps));
    }

    bool operator==(const Multipartition& o) const { return comps_ == o.comps_; }
    bool operator<(const Multipartition& o) const { return comps_ < o.comps_; }

    std::string str() const {
        std::string s = "(";
        for (long l = 0; l < ell(); ++l) {
            if (l) s += "|";
            if (comps_[l].empty()) s += "0";
            for (size_t i = 0; i < comps_[l].size(); ++i)
                s += (i ? "," : "") + std::to_string(comps_[l][i]);
        }
        return s + ")";
    }

private:
    std::vector<std::vector<long>> comps_;
};

inline Multipartition sigma_partition(const Multipartition& lam, const HeckeParams& P) {
    std::vector<std::vector<long>> comps(lam.ell());
    for (long l = 1; l <= lam.ell(); ++l) {
        Node img = sigma_node({1, 1, l}, P);
        comps[img.l - 1] = lam.components()[l - 1];
    }
    return Multipartition(lam.ell(), std::move(comps));
}

inline std::vector<std::vector<long>> partitions_of(long n) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    auto rec = [&](auto&& self, long rest, long maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (long k = std::min(rest, maxpart); k >= 1; --k) {
            cur.push_back(k);
            self(self, rest - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// all l-partitions of n, sorted in the canonical lexicographic order
inline std::vector<Multipartition> enumerate_partitions(long n, const HeckeParams& P) {
    std::vector<Multipartition> out;
    std::vector<std::vector<long>> cur(P.ell);
    auto rec = [&](auto&& self, long l, long rest) -> void {
        if (l == P.ell) {
            if (rest == 0) out.push_back(Multipartition(P.ell, cur));
            return;
        }
        for (long k = 0; k <= rest; ++k)
            for (auto& part : partitions_of(k)) {
                cur[l] = part;
                self(self, l + 1, rest - k);
            }
        cur[l].clear();
    };
    rec(rec, 0, n);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Standard tableaux
// ---------------------------------------------------------------------------

class Tableau {
public:
    Tableau() = default;
    Tableau(Multipartition shape, std::vector<long> entries)
        : shape_(std::move(shape)), nodes_(shape_.nodes()), entries_(std::move(entries)) {
        require(nodes_.size() == entries_.size(), "BadTableau", "entry count mismatch");
    }

    const Multipartition& shape() const { return shape_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<long>& entries() const { return entries_; }

    long entry_at(const Node& g) const {
        for (size_t i = 0; i < nodes_.size(); ++i)
            if (nodes_[i] == g) return entries_[i];
        fail("BadNode", "node not in tableau shape");
    }
    Node node_of(long k) const {
        for (size_t i = 0; i < entries_.size(); ++i)
            if (entries_[i] == k) return nodes_[i];
        fail("BadTableau", "entry not present");
    }

    bool standard() const {
        for (size_t i = 0; i < nodes_.size(); ++i) {
            Node g = nodes_[i];
            if (g.r > 1 && shape_.contains({g.r - 1, g.c, g.l}) &&
                entry_at({g.r - 1, g.c, g.l}) >= entries_[i])
                return false;
            if (g.c > 1 && entry_at({g.r, g.c - 1, g.l}) >= entries_[i]) return false;
        }
        return true;
    }

    // shape of the restriction to entries 1..k
    Multipartition shape_at(long k) const {
        std::vector<std::vector<long>> comps(shape_.ell());
        for (size_t i = 0; i < nodes_.size(); ++i)
            if (entries_[i] <= k) {
                auto& c = comps[nodes_[i].l - 1];
                if ((long)c.size() < nodes_[i].r) c.resize(nodes_[i].r, 0);
                c[nodes_[i].r - 1] = std::max(c[nodes_[i].r - 1], nodes_[i].c);
            }
        return Multipartition(shape_.ell(), std::move(comps));
    }

    bool operator==(const Tableau& o) const {
        return shape_ == o.shape_ && entries_ == o.entries_;
    }
    // entry-sequence order in the fixed node traversal
    bool operator<(const Tableau& o) const {
        if (!(shape_ == o.shape_)) return shape_ < o.shape_;
        return entries_ < o.entries_;
    }

    std::string str() const {
        std::string s = shape_.str() + "[";
        for (size_t i = 0; i < entries_.size(); ++i) s += (i ? "," : "") + std::to_string(entries_[i]);
        return s + "]";
    }

private:
    Multipartition shape_;
    std::vector<Node> nodes_;
    std::vector<long> entries_;
};

inline std::vector<Tableau> enumerate_std(const Multipartition& lam) {
    std::vector<Tableau> out;
    long n = lam.size();
    auto nodes = lam.nodes();
    std::vector<long> entries(nodes.size(), 0);
    // place 1..n one at a time; a placement is legal when the row/column
    // predecessors are already filled
    auto idx_of = [&](const Node& g) -> long {
        for (size_t i = 0; i < nodes.size(); ++i)
            if (nodes[i] == g) return (long)i;
        return -1;
    };
    auto rec = [&](auto&& self, long k) -> void {
        if (k > n) {
            out.emplace_back(lam, entries);
            return;
        }
        for (size_t i = 0; i < nodes.size(); ++i) {
            if (entries[i] != 0) continue;
            Node g = nodes[i];
            // predecessors in row and column must be filled already
            if (g.r > 1 && lam.contains({g.r - 1, g.c, g.l}) &&
                entries[idx_of({g.r - 1, g.c, g.l})] == 0)
                continue;
            if (g.c > 1 && entries[idx_of({g.r, g.c - 1, g.l})] == 0) continue;
            entries[i] = k;
            self(self, k + 1);
            entries[i] = 0;
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
}

inline Tableau sigma_tableau(const Tableau& t, const HeckeParams& P) {
    Multipartition shp = sigma_partition(t.shape(), P);
    auto nodes = shp.nodes();
    std::vector<long> entries(nodes.size());
    for (size_t i = 0; i < nodes.size(); ++i)
        entries[i] = t.entry_at(sigma_inv_node(nodes[i], P));
    return Tableau(std::move(shp), std::move(entries));
}

inline std::vector<Residue> residue_sequence(const Tableau& t, const HeckeParams& P) {
    std::vector<Residue> out((size_t)t.shape().size());
    for (size_t i = 0; i < t.nodes().size(); ++i)
        out[t.entries()[i] - 1] = residue(t.nodes()[i], P);
    return out;
}

// deg t = sum_k (#Add_k(t) - #Rem_k(t)) with the strict loading condition
inline long tableau_degree(const Tableau& t, const HeckeParams& P) {
    require(t.standard(), "BadTableau", "degree of a non-standard tableau");
    long deg = 0;
    long n = t.shape().size();
    for (long k = 1; k <= n; ++k) {
        Multipartition lamk = t.shape_at(k);
        Node gk = t.node_of(k);
        Residue resk = residue(gk, P);
        Rat xk = loading(gk, P);
        for (const Node& g : lamk.addable_nodes())
            if (residue(g, P) == resk && xk > loading(g, P)) ++deg;
        for (const Node& g : lamk.removable_nodes())
            if (residue(g, P) == resk && xk > loading(g, P)) --deg;
    }
    return deg;
}

// ---------------------------------------------------------------------------
// Dominance
// ---------------------------------------------------------------------------

// lam dominates mu when a residue-preserving bijection theta: lam -> mu with
// x(theta(g)) <= x(g) exists; per residue class the sorted loadings decide.
inline bool dominates(const Multipartition& lam, const Multipartition& mu,
                      const HeckeParams& P) {
    require(lam.size() == mu.size(), "SizeMismatch", "dominance needs equal sizes");
    std::map<Residue, std::pair<std::vector<Rat>, std::vector<Rat>>> classes;
    for (const Node& g : lam.nodes()) classes[residue(g, P)].first.push_back(loading(g, P));
    for (const Node& g : mu.nodes()) classes[residue(g, P)].second.push_back(loading(g, P));
    for (auto& [res, pair] : classes) {
        auto& [a, b] = pair;
        if (a.size() != b.size()) return false;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        for (size_t k = 0; k < a.size(); ++k)
            if (b[k] > a[k]) return false;
    }
    return true;
}

inline bool strictly_dominates(const Multipartition& lam, const Multipartition& mu,
                               const HeckeParams& P) {
    return !(lam == mu) && dominates(lam, mu, P);
}

inline bool dominates_tab(const Tableau& s, const Tableau& t, const HeckeParams& P) {
    long n = s.shape().size();
    require(n == t.shape().size(), "SizeMismatch", "tableau dominance needs equal sizes");
    for (long k = 1; k <= n; ++k)
        if (!dominates(s.shape_at(k), t.shape_at(k), P)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Regions
// ---------------------------------------------------------------------------

struct RegionId {
    long a = 0, delta = 0;
    auto operator<=>(const RegionId&) const = default;
};

inline std::pair<Rat, Rat> region_interval(long a, long delta, const HeckeParams& P) {
    Rat lo = Rat(delta) + (Rat(P.rho[a]) - Rat(a * P.p, P.ell + 1)) / P.e - Rat(2 * P.n, P.N);
    Rat hi = Rat(delta + 1) + (Rat(P.rho[a]) - Rat((a + 1) * P.p, P.ell + 1)) / P.e;
    lo.canonicalize();
    hi.canonicalize();
    return {lo, hi};
}

inline RegionId region_of(const Node& g, const HeckeParams& P) {
    return {(g.l - 1) / P.p, g.c - g.r};
}

} // namespace skewcell
