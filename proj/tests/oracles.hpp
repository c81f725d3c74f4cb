#pragma once

// Test-only oracles, independent of the radical-filtration path used by the
// engine: composition series of small modules by exhaustive invariant-line
// search, and dominance by exhaustive bijection search.

#include <map>
#include <optional>
#include <vector>

#include "skewcell/decomp.hpp"
#include "skewcell/gcomb.hpp"

namespace oracles {

using namespace skewcell;

// --- exact square roots / quadratic roots -------------------------------

inline std::optional<Rat> rat_sqrt(const Rat& x) {
    if (x < 0) return std::nullopt;
    Int nr, dr;
    if (!mpz_perfect_square_p(x.get_num().get_mpz_t())) return std::nullopt;
    if (!mpz_perfect_square_p(x.get_den().get_mpz_t())) return std::nullopt;
    mpz_sqrt(nr.get_mpz_t(), x.get_num().get_mpz_t());
    mpz_sqrt(dr.get_mpz_t(), x.get_den().get_mpz_t());
    return Rat(nr, dr);
}

inline std::vector<Scalar> all_field_elements(const FieldPtr& f) {
    require(f->modular(), "OracleUnsupported", "cannot enumerate an infinite field");
    long c = f->desc.c;
    std::vector<Scalar> out;
    std::vector<Rat> co(f->deg, Rat(0));
    while (true) {
        out.push_back(Scalar(f, co));
        long i = 0;
        while (i < f->deg && co[i] == c - 1) co[i++] = 0;
        if (i == f->deg) break;
        co[i] = co[i].get_num().get_si() + 1;
    }
    return out;
}

// roots in F of a*y^2 + b*y + c (a possibly zero)
inline std::vector<Scalar> quadratic_roots(const Scalar& a, const Scalar& b, const Scalar& c) {
    const FieldPtr& f = a.field();
    std::vector<Scalar> roots;
    if (f->modular()) {
        for (const Scalar& y : all_field_elements(f))
            if ((a * y * y + b * y + c).is_zero()) roots.push_back(y);
        return roots;
    }
    require(f->deg == 1, "OracleUnsupported", "quadratic roots over a proper extension of Q");
    Rat av = a.coeffs()[0], bv = b.coeffs()[0], cv = c.coeffs()[0];
    if (av == 0) {
        if (bv != 0) roots.push_back(Scalar::of(f, -cv / bv));
        return roots;
    }
    Rat disc = bv * bv - 4 * av * cv;
    auto s = rat_sqrt(disc);
    if (!s) return roots;
    roots.push_back(Scalar::of(f, (-bv + *s) / (2 * av)));
    if (*s != 0) roots.push_back(Scalar::of(f, (-bv - *s) / (2 * av)));
    std::sort(roots.begin(), roots.end(),
              [](const Scalar& x, const Scalar& y) { return x.coeffs()[0] < y.coeffs()[0]; });
    return roots;
}

// --- invariant lines and composition series (dim <= 2) -------------------

inline bool line_invariant(const GradedAlgebra& A, const GradedModule& M,
                           const std::vector<Scalar>& v) {
    for (size_t ai = 0; ai < A.dim; ++ai) {
        auto w = M.action[ai].apply(v);
        // w must be parallel to v
        for (size_t i = 0; i < v.size(); ++i)
            for (size_t j = i + 1; j < v.size(); ++j)
                if (!(w[i] * v[j] - w[j] * v[i]).is_zero()) return false;
    }
    return true;
}

inline std::optional<std::vector<Scalar>> find_invariant_line(const GradedAlgebra& A,
                                                              const GradedModule& M) {
    const FieldPtr& f = A.field;
    require(M.dim() == 2, "OracleUnsupported", "invariant lines only for dim 2");
    auto e0 = std::vector<Scalar>{Scalar::one(f), Scalar::zero(f)};
    auto e1 = std::vector<Scalar>{Scalar::zero(f), Scalar::one(f)};
    if (M.deg[0] != M.deg[1]) {
        if (line_invariant(A, M, e0)) return e0;
        if (line_invariant(A, M, e1)) return e1;
        return std::nullopt;
    }
    // lines span(1, y): each action matrix constrains y by
    // a01 y^2 + (a00 - a11) y - a10 = 0
    std::optional<std::vector<Scalar>> candidates;
    for (size_t ai = 0; ai < A.dim; ++ai) {
        const Matrix& m = M.action[ai];
        Scalar qa = m.at(0, 1), qb = m.at(0, 0) - m.at(1, 1), qc = -m.at(1, 0);
        if (qa.is_zero() && qb.is_zero() && qc.is_zero()) continue;
        auto roots = quadratic_roots(qa, qb, qc);
        std::vector<std::vector<Scalar>> lines;
        for (auto& y : roots) lines.push_back({Scalar::one(f), y});
        for (auto& v : lines)
            if (line_invariant(A, M, v)) return v;
        if (line_invariant(A, M, e1)) return e1;
        return std::nullopt; // constrained and nothing passed
    }
    // every action is scalar: every line is invariant
    return e0;
}

inline GradedModule line_module(const GradedAlgebra& A, const GradedModule& M,
                                const std::vector<Scalar>& v) {
    const FieldPtr& f = A.field;
    GradedModule L;
    L.field = f;
    long d = 0;
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) d = M.deg[i];
    L.deg = {d};
    size_t piv = 0;
    while (v[piv].is_zero()) ++piv;
    for (size_t ai = 0; ai < A.dim; ++ai) {
        auto w = M.action[ai].apply(v);
        Matrix m(f, 1, 1);
        m.at(0, 0) = w[piv] / v[piv];
        L.action.push_back(std::move(m));
    }
    return L;
}

inline GradedModule quotient_by_line(const GradedAlgebra& A, const GradedModule& M,
                                     const std::vector<Scalar>& v) {
    const FieldPtr& f = A.field;
    Quotient q = Quotient::of(f, {v}, M.deg);
    GradedModule N;
    N.field = f;
    for (size_t j : q.keep) N.deg.push_back(M.deg[j]);
    for (size_t ai = 0; ai < A.dim; ++ai) {
        Matrix m(f, q.keep.size(), q.keep.size());
        for (size_t j = 0; j < q.keep.size(); ++j) {
            std::vector<Scalar> e(M.dim(), Scalar::zero(f));
            e[q.keep[j]] = Scalar::one(f);
            auto img = q.project(f, M.action[ai].apply(e));
            for (size_t i = 0; i < q.keep.size(); ++i) m.at(i, j) = img[i];
        }
        N.action.push_back(std::move(m));
    }
    return N;
}

// identify a simple graded module as (column index, shift) against the engine
inline std::pair<size_t, long> identify_simple(const GradedAlgebra& A, const CellEngine& eng,
                                               const GradedModule& S) {
    for (size_t lam = 0; lam < eng.datum().poset_size(); ++lam) {
        if (!eng.simple_nonzero(lam)) continue;
        const GradedModule& D = eng.simple(lam);
        if (D.dim() != S.dim()) continue;
        if (hom_dim(A, S, D) == 0) continue;
        // graded dims fix the shift: dim_t S = t^k dim_t D
        Laurent ds = S.graded_dim(), dd = D.graded_dim();
        for (long k = -64; k <= 64; ++k)
            if (ds == Laurent::t(k) * dd) return {lam, k};
        fail("OracleError", "ungraded match without a graded shift");
    }
    fail("OracleError", "simple module matches no D");
}

// multiset of graded composition factors (lam, shift) -> multiplicity
inline void composition_factors(const GradedAlgebra& A, const CellEngine& eng,
                                const GradedModule& M,
                                std::map<std::pair<size_t, long>, long>& out) {
    if (M.dim() == 0) return;
    if (M.dim() == 1) {
        ++out[identify_simple(A, eng, M)];
        return;
    }
    require(M.dim() == 2, "OracleUnsupported", "composition series only up to dim 2");
    auto line = find_invariant_line(A, M);
    if (!line) {
        ++out[identify_simple(A, eng, M)];
        return;
    }
    composition_factors(A, eng, line_module(A, M, *line), out);
    composition_factors(A, eng, quotient_by_line(A, M, *line), out);
}

// full decomposition row of a cell module, as Laurent polynomials per column
inline std::vector<Laurent> decomp_row_oracle(const GradedAlgebra& A, const CellEngine& eng,
                                              size_t lam, const std::vector<size_t>& cols) {
    std::map<std::pair<size_t, long>, long> factors;
    composition_factors(A, eng, eng.cell_module(lam).mod, factors);
    std::vector<Laurent> row(cols.size());
    for (auto& [key, mult] : factors) {
        auto [mu, k] = key;
        for (size_t c = 0; c < cols.size(); ++c)
            if (cols[c] == mu) row[c] = row[c] + Laurent::t(k, mult);
    }
    return row;
}

// --- dominance by exhaustive bijection search ----------------------------

inline bool dominates_bruteforce(const Multipartition& lam, const Multipartition& mu,
                                 const HeckeParams& P) {
    if (lam.size() != mu.size()) return false;
    std::map<Residue, std::pair<std::vector<Rat>, std::vector<Rat>>> classes;
    for (const Node& g : lam.nodes()) classes[residue(g, P)].first.push_back(loading(g, P));
    for (const Node& g : mu.nodes()) classes[residue(g, P)].second.push_back(loading(g, P));
    for (auto& [res, pr] : classes) {
        auto& [a, b] = pr;
        if (a.size() != b.size()) return false;
        std::vector<size_t> perm(b.size());
        for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::sort(perm.begin(), perm.end());
        bool found = false;
        do {
            bool ok = true;
            for (size_t i = 0; i < perm.size() && ok; ++i)
                if (b[perm[i]] > a[i]) ok = false;
            if (ok) {
                found = true;
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!found && !a.empty()) return false;
    }
    return true;
}

} // namespace oracles
