#pragma once

#include "skewcell/datum.hpp"
#include "skewcell/laurent.hpp"

namespace skewcell {

struct GradedModule {
    FieldPtr field;
    std::vector<long> deg;      // per module basis vector
    std::vector<Matrix> action; // per algebra basis index

    size_t dim() const { return deg.size(); }
    Laurent graded_dim() const {
        Laurent f;
        for (long d : deg) f.add_term(d, 1);
        return f;
    }
    std::vector<Scalar> act(const GradedAlgebra&, const std::vector<Scalar>& a,
                            const std::vector<Scalar>& v) const {
        std::vector<Scalar> out(dim(), Scalar::zero(field));
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i].is_zero()) continue;
            auto w = action[i].apply(v);
            for (size_t k = 0; k < out.size(); ++k) out[k] = out[k] + a[i] * w[k];
        }
        return out;
    }
};

struct CellModule {
    size_t lam = 0;
    GradedModule mod; // action matrices are the r-coefficients, rows v, cols s
};

// split a spanning set of a graded subspace into a homogeneous rref basis
inline std::vector<std::vector<Scalar>> homogeneous_basis(
    const FieldPtr& f, const std::vector<std::vector<Scalar>>& span_set,
    const std::vector<long>& coord_deg) {
    size_t dim = coord_deg.size();
    size_t expected = span_rank(f, span_set);
    std::map<long, std::vector<std::vector<Scalar>>> by_deg;
    for (const auto& v : span_set) {
        std::map<long, std::vector<Scalar>> parts;
        for (size_t i = 0; i < dim; ++i)
            if (!v[i].is_zero()) {
                auto& slot = parts[coord_deg[i]];
                if (slot.empty()) slot.assign(dim, Scalar::zero(f));
                slot[i] = v[i];
            }
        for (auto& [d, part] : parts) by_deg[d].push_back(std::move(part));
    }
    std::vector<std::vector<Scalar>> out;
    for (auto& [d, vecs] : by_deg) {
        Matrix m(f, vecs.size(), dim);
        for (size_t i = 0; i < vecs.size(); ++i)
            for (size_t j = 0; j < dim; ++j) m.at(i, j) = vecs[i][j];
        auto pivots = m.rref();
        for (size_t k = 0; k < pivots.size(); ++k) out.push_back(m.row(k));
    }
    require(out.size() == expected, "VerifyError",
            "subspace is not graded: homogeneous components leave the span");
    return out;
}

// quotient of a graded coordinate space by a graded subspace, with a
// deterministic complement (non-pivot coordinates)
struct Quotient {
    std::vector<size_t> keep;             // surviving coordinates
    std::vector<std::vector<Scalar>> wb;  // rref'd homogeneous basis of the subspace
    std::vector<size_t> pivots;

    static Quotient of(const FieldPtr& f, const std::vector<std::vector<Scalar>>& sub,
                       const std::vector<long>& coord_deg) {
        Quotient q;
        auto hb = homogeneous_basis(f, sub, coord_deg);
        size_t dim = coord_deg.size();
        Matrix m(f, hb.size(), dim);
        for (size_t i = 0; i < hb.size(); ++i)
            for (size_t j = 0; j < dim; ++j) m.at(i, j) = hb[i][j];
        q.pivots = m.rref();
        for (size_t i = 0; i < q.pivots.size(); ++i) q.wb.push_back(m.row(i));
        std::vector<bool> isp(dim, false);
        for (size_t p : q.pivots) isp[p] = true;
        for (size_t j = 0; j < dim; ++j)
            if (!isp[j]) q.keep.push_back(j);
        return q;
    }
    // rref rows stay homogeneous only if pivot elimination mixes equal
    // degrees; with hb homogeneous and rref acting within the row space this
    // holds degreewise, and project() does not rely on it anyway.
    std::vector<Scalar> project(const FieldPtr&, std::vector<Scalar> v) const {
        for (size_t i = 0; i < wb.size(); ++i) {
            const Scalar& c = v[pivots[i]];
            if (c.is_zero()) continue;
            Scalar factor = c; // wb rows have unit pivots
            for (size_t j = 0; j < v.size(); ++j) v[j] = v[j] - factor * wb[i][j];
        }
        std::vector<Scalar> out;
        out.reserve(keep.size());
        for (size_t j : keep) out.push_back(v[j]);
        return out;
    }
};

// Cached per-datum machinery: cell modules, Gram forms, simples.
class CellEngine {
public:
    CellEngine(const GradedAlgebra& A, const SkewCellDatum& D, bool run_verify = true)
        : A_(A), D_(D) {
        if (run_verify) {
            Report rep = verify_skew_datum(A, D);
            require(rep.ok(), "DatumNotVerified", "skew cell datum fails verification:\n" +
                                                      rep.summary());
        }
        cells_ = D.cell_index(A.dim);
        size_t np = D.poset_size();
        higher_.assign(np, std::vector<bool>(A.dim, false));
        for (size_t lam = 0; lam < np; ++lam)
            for (size_t b = 0; b < A.dim; ++b)
                if (D.gt[cells_[b].lam][lam]) higher_[lam][b] = true;
        build();
    }

    const GradedAlgebra& algebra() const { return A_; }
    const SkewCellDatum& datum() const { return D_; }

    const CellModule& cell_module(size_t lam) const { return cell_[lam]; }
    const Matrix& gram(size_t lam) const { return gram_[lam]; }
    size_t gram_rank(size_t lam) const { return rank_[lam]; }
    size_t left_radical_dim(size_t lam) const { return left_rad_dim_[lam]; }
    bool simple_nonzero(size_t lam) const { return rank_[lam] > 0; }
    // quotient by the right radical of the Gram form; empty module when rank 0
    const GradedModule& simple(size_t lam) const {
        require(simple_nonzero(lam), "ZeroSimple",
                "simple module vanishes at " + D_.elements[lam]);
        return simple_[lam];
    }
    std::vector<size_t> p0() const {
        std::vector<size_t> out;
        for (size_t lam = 0; lam < D_.poset_size(); ++lam)
            if (simple_nonzero(lam)) out.push_back(lam);
        return out;
    }

private:
    const GradedAlgebra& A_;
    const SkewCellDatum& D_;
    std::vector<SkewCellDatum::CellOf> cells_;
    std::vector<std::vector<bool>> higher_;
    std::vector<CellModule> cell_;
    std::vector<Matrix> gram_;
    std::vector<size_t> rank_, left_rad_dim_;
    std::vector<GradedModule> simple_;

    void build() {
        size_t np = D_.poset_size();
        cell_.resize(np);
        gram_.resize(np);
        rank_.assign(np, 0);
        left_rad_dim_.assign(np, 0);
        simple_.resize(np);
        parallel_for(np, [&](size_t lam) { build_one(lam); });
    }

    void build_one(size_t lam) {
        size_t nt = D_.tab_count(lam);
        const FieldPtr& f = A_.field;
        CellModule cm;
        cm.lam = lam;
        cm.mod.field = f;
        cm.mod.deg = D_.tab_deg[lam];
        cm.mod.action.reserve(A_.dim);
        // r-coefficients from the reference column t0 = 0
        for (size_t ai = 0; ai < A_.dim; ++ai) {
            Matrix r(f, nt, nt);
            for (size_t s = 0; s < nt; ++s) {
                for (auto& [k, coef] : A_.prod(ai, D_.basis_of[lam][s][0])) {
                    if (higher_[lam][k]) continue;
                    auto& cell = cells_[k];
                    require(cell.lam == lam && cell.t == 0, "DatumNotVerified",
                            "C3 leak while building a cell module");
                    r.at(cell.s, s) = coef;
                }
            }
            cm.mod.action.push_back(std::move(r));
        }
        cell_[lam] = std::move(cm);

        // phi(c_s, c_t) = r_{u,t}(c_{u,s}) for the reference row u = 0;
        // independence of u is asserted over all rows
        Matrix G(f, nt, nt);
        for (size_t s = 0; s < nt && nt > 0; ++s)
            for (size_t t = 0; t < nt; ++t) {
                size_t a_us = D_.basis_of[lam][0][s];
                G.at(s, t) = cell_[lam].mod.action[a_us].at(0, t);
                for (size_t u = 1; u < nt; ++u) {
                    size_t a = D_.basis_of[lam][u][s];
                    require(cell_[lam].mod.action[a].at(u, t) == G.at(s, t), "VerifyError",
                            "Gram entry depends on the reference row at " + D_.elements[lam]);
                }
            }
        gram_[lam] = G;
        rank_[lam] = G.rank();
        left_rad_dim_[lam] = G.transpose().kernel_basis().size();

        if (rank_[lam] == 0) return;
        auto rad = G.kernel_basis(); // right radical
        Quotient q = Quotient::of(f, rad, cm_deg(lam));
        GradedModule s;
        s.field = f;
        for (size_t j : q.keep) s.deg.push_back(D_.tab_deg[lam][j]);
        for (size_t ai = 0; ai < A_.dim; ++ai) {
            Matrix m(f, q.keep.size(), q.keep.size());
            for (size_t j = 0; j < q.keep.size(); ++j) {
                std::vector<Scalar> e(nt, Scalar::zero(f));
                e[q.keep[j]] = Scalar::one(f);
                auto img = q.project(f, cell_[lam].mod.action[ai].apply(e));
                for (size_t i = 0; i < q.keep.size(); ++i) m.at(i, j) = img[i];
            }
            s.action.push_back(std::move(m));
        }
        simple_[lam] = std::move(s);
    }

    std::vector<long> cm_deg(size_t lam) const { return D_.tab_deg[lam]; }
};

} // namespace skewcell
