#pragma once

#include "skewcell/algebra.hpp"
#include "skewcell/parallel.hpp"

namespace skewcell {

// Check report: one line per verified property, with a witness on failure.
struct CheckItem {
    std::string name;
    bool pass = true;
    std::string witness;
};
struct Report {
    std::vector<CheckItem> items;
    bool ok() const {
        for (auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    void add(const std::string& name, bool pass, const std::string& witness = "") {
        items.push_back({name, pass, pass ? "" : witness});
    }
    std::string summary() const {
        std::string s;
        for (auto& it : items)
            s += (it.pass ? "pass  " : "FAIL  ") + it.name +
                 (it.pass || it.witness.empty() ? "" : "  [" + it.witness + "]") + "\n";
        return s;
    }
};

// Skew cell datum over a fixed GradedAlgebra basis: a poset with involution,
// tableau sets with degrees and involution bijections, and the bijection
// (lambda, s, t) -> basis index.
struct SkewCellDatum {
    std::vector<std::string> elements;       // poset element ids
    std::vector<std::vector<bool>> gt;       // gt[i][j]: i > j strictly
    std::vector<size_t> iota;                // poset involution
    std::vector<std::vector<long>> tab_deg;  // degrees of T(lambda)
    std::vector<std::vector<size_t>> iota_tab; // T(lambda) -> T(iota(lambda))
    std::vector<std::vector<std::vector<size_t>>> basis_of; // [lam][s][t] -> basis index

    size_t poset_size() const { return elements.size(); }
    size_t tab_count(size_t lam) const { return tab_deg[lam].size(); }

    bool is_cellular() const {
        for (size_t i = 0; i < iota.size(); ++i)
            if (iota[i] != i) return false;
        for (auto& it : iota_tab)
            for (size_t k = 0; k < it.size(); ++k)
                if (it[k] != k) return false;
        return true;
    }

    // cell membership of each basis index: (lambda, s, t), or npos if unused
    struct CellOf {
        size_t lam = SIZE_MAX, s = 0, t = 0;
    };
    std::vector<CellOf> cell_index(size_t dim) const {
        std::vector<CellOf> out(dim);
        for (size_t lam = 0; lam < basis_of.size(); ++lam)
            for (size_t s = 0; s < basis_of[lam].size(); ++s)
                for (size_t t = 0; t < basis_of[lam][s].size(); ++t) {
                    size_t b = basis_of[lam][s][t];
                    require(b < dim, "VerifyError", "basis index out of range");
                    require(out[b].lam == SIZE_MAX, "VerifyError", "basis map not injective");
                    out[b] = {lam, s, t};
                }
        return out;
    }
};

namespace detail {

inline bool poset_ok(const std::vector<std::vector<bool>>& gt, std::string& witness) {
    size_t n = gt.size();
    for (size_t i = 0; i < n; ++i)
        if (gt[i][i]) {
            witness = "reflexive strict relation at " + std::to_string(i);
            return false;
        }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (gt[i][j] && gt[j][i]) {
                witness = "antisymmetry fails at (" + std::to_string(i) + "," +
                          std::to_string(j) + ")";
                return false;
            }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                if (gt[i][j] && gt[j][k] && !gt[i][k]) {
                    witness = "transitivity fails at (" + std::to_string(i) + "," +
                              std::to_string(j) + "," + std::to_string(k) + ")";
                    return false;
                }
    return true;
}

} // namespace detail

// The axioms (poset/involution structure, C1 homogeneity, C2 basis bijection,
// C3 triangular action with column-independent coefficients, C4 star) checked
// one by one; failures become report entries with witnesses.
inline Report verify_skew_datum(const GradedAlgebra& A, const SkewCellDatum& D) {
    Report rep;
    size_t np = D.poset_size();

    std::string w;
    bool pos = detail::poset_ok(D.gt, w);
    rep.add("poset axioms", pos, w);

    bool inv = D.iota.size() == np;
    std::string invw;
    if (inv)
        for (size_t i = 0; i < np && inv; ++i) {
            if (D.iota[i] >= np || D.iota[D.iota[i]] != i) {
                inv = false;
                invw = "iota not an involution at " + std::to_string(i);
            }
        }
    if (inv)
        for (size_t i = 0; i < np && inv; ++i)
            for (size_t j = 0; j < np && inv; ++j)
                if (D.gt[i][j] != D.gt[D.iota[i]][D.iota[j]]) {
                    inv = false;
                    invw = "iota not a poset involution at (" + D.elements[i] + "," +
                           D.elements[j] + ")";
                }
    rep.add("iota poset involution", inv, invw);

    bool tb = D.iota_tab.size() == np && D.tab_deg.size() == np;
    std::string tbw;
    if (tb)
        for (size_t lam = 0; lam < np && tb; ++lam) {
            if (D.iota_tab[lam].size() != D.tab_count(lam) ||
                D.tab_count(D.iota[lam]) != D.tab_count(lam)) {
                tb = false;
                tbw = "tableau sets mismatched at " + D.elements[lam];
                break;
            }
            for (size_t s = 0; s < D.tab_count(lam); ++s) {
                size_t img = D.iota_tab[lam][s];
                if (img >= D.tab_count(D.iota[lam]) || D.iota_tab[D.iota[lam]][img] != s) {
                    tb = false;
                    tbw = "iota_lambda not inverse at " + D.elements[lam];
                    break;
                }
            }
        }
    rep.add("tableau involutions", tb, tbw);

    // C2: basis bijection
    bool c2 = true;
    std::string c2w;
    std::vector<SkewCellDatum::CellOf> cells;
    try {
        cells = D.cell_index(A.dim);
        size_t total = 0;
        for (size_t lam = 0; lam < np; ++lam) total += D.tab_count(lam) * D.tab_count(lam);
        if (total != A.dim) {
            c2 = false;
            c2w = "cell count " + std::to_string(total) + " != dim " + std::to_string(A.dim);
        } else
            for (size_t b = 0; b < A.dim && c2; ++b)
                if (cells[b].lam == SIZE_MAX) {
                    c2 = false;
                    c2w = "basis index " + std::to_string(b) + " not covered";
                }
    } catch (const error& e) {
        c2 = false;
        c2w = e.what();
    }
    rep.add("C2 basis bijection", c2, c2w);
    if (!c2 || !pos || !inv || !tb) return rep;

    // C1: homogeneity
    bool c1 = true;
    std::string c1w;
    for (size_t lam = 0; lam < np && c1; ++lam)
        for (size_t s = 0; s < D.tab_count(lam) && c1; ++s)
            for (size_t t = 0; t < D.tab_count(lam); ++t) {
                size_t b = D.basis_of[lam][s][t];
                if (A.deg[b] != D.tab_deg[lam][s] + D.tab_deg[lam][t]) {
                    c1 = false;
                    c1w = "deg c_(" + std::to_string(s) + "," + std::to_string(t) + ") at " +
                          D.elements[lam];
                    break;
                }
            }
    rep.add("C1 homogeneous degrees", c1, c1w);

    // C3: for each algebra basis element a and cell lambda, the product
    // a*c_{s,t}, reduced past the span of higher cells, must be supported on
    // column t with coefficients independent of t.
    bool c3 = true;
    std::string c3w;
    std::vector<std::vector<bool>> higher(np, std::vector<bool>(A.dim, false));
    for (size_t lam = 0; lam < np; ++lam)
        for (size_t b = 0; b < A.dim; ++b)
            if (D.gt[cells[b].lam][lam]) higher[lam][b] = true;
    for (size_t ai = 0; ai < A.dim && c3; ++ai) {
        for (size_t lam = 0; lam < np && c3; ++lam) {
            size_t nt = D.tab_count(lam);
            for (size_t s = 0; s < nt && c3; ++s) {
                std::vector<std::vector<Scalar>> rs; // per column t: coefficients r_{v,s}
                for (size_t t = 0; t < nt; ++t) {
                    std::vector<Scalar> r(nt, Scalar::zero(A.field));
                    bool bad = false;
                    for (auto& [k, coef] : A.prod(ai, D.basis_of[lam][s][t])) {
                        if (higher[lam][k]) continue;
                        auto& cell = cells[k];
                        if (cell.lam == lam && cell.t == t)
                            r[cell.s] = coef;
                        else {
                            bad = true;
                            c3w = "a=" + A.labels[ai] + " on cell " + D.elements[lam] +
                                  " leaks to " + A.labels[k];
                            break;
                        }
                    }
                    if (bad) {
                        c3 = false;
                        break;
                    }
                    rs.push_back(std::move(r));
                }
                for (size_t t = 1; t < rs.size() && c3; ++t)
                    if (rs[t] != rs[0]) {
                        c3 = false;
                        c3w = "r-coefficients depend on the column: a=" + A.labels[ai] +
                              ", cell " + D.elements[lam];
                    }
            }
        }
    }
    rep.add("C3 triangular action", c3, c3w);

    // C4: star(c_{s,t}) = c_{iota(t), iota(s)} in the iota(lambda) cell
    bool c4 = true;
    std::string c4w;
    for (size_t lam = 0; lam < np && c4; ++lam)
        for (size_t s = 0; s < D.tab_count(lam) && c4; ++s)
            for (size_t t = 0; t < D.tab_count(lam); ++t) {
                size_t lhs = A.star[D.basis_of[lam][s][t]];
                size_t rhs = D.basis_of[D.iota[lam]][D.iota_tab[lam][t]][D.iota_tab[lam][s]];
                if (lhs != rhs) {
                    c4 = false;
                    c4w = "star mismatch at cell " + D.elements[lam] + " (" + std::to_string(s) +
                          "," + std::to_string(t) + ")";
                    break;
                }
            }
    rep.add("C4 star anti-involution", c4, c4w);
    return rep;
}

} // namespace skewcell
