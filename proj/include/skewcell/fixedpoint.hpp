#pragma once

#include "skewcell/cellmod.hpp"
#include "skewcell/shift.hpp"

namespace skewcell {

// A^sigma with its skew cell datum, plus everything needed to move between
// the subalgebra and ambient coordinates.
struct FixedPointResult {
    GradedAlgebra sub;
    SkewCellDatum datum;
    Matrix embedding; // dim_A x dim_sub; column j = sub basis vector j in A

    struct SubLabel {
        size_t rep = 0; // position in reps
        long k = 0;
        size_t s = 0, t = 0; // indices into tsig[rep]
    };
    std::vector<SubLabel> sub_label;

    std::vector<size_t> reps;                 // ambient poset indices
    std::vector<std::vector<size_t>> orbits;  // sigmaP orbits, starting at the rep
    std::vector<long> o, plam, otilde;
    std::vector<Scalar> eps_lam;
    std::vector<std::vector<size_t>> tsig;    // per rep: orbit-least tableau indices
    std::vector<std::vector<size_t>> sigma_lam; // per rep: sigma_T^o as a permutation of T
    std::vector<std::pair<size_t, long>> elements; // datum element -> (rep pos, k)
    size_t sp = 1, sP = 1;
    Scalar eps;
    bool cellular = false;

    size_t element_of(size_t rep, long k) const {
        long ot = otilde[rep];
        long kk = ((k % ot) + ot) % ot;
        for (size_t i = 0; i < elements.size(); ++i)
            if (elements[i].first == rep && elements[i].second == kk) return i;
        fail("InternalError", "missing P_sigma element");
    }
    size_t sub_index(size_t rep, long k, size_t s, size_t t) const {
        return datum.basis_of[element_of(rep, k)][s][t];
    }
    std::vector<Scalar> embed(const std::vector<Scalar>& subvec) const {
        return embedding.apply(subvec);
    }
    // exact coordinates of an ambient vector inside A^sigma
    std::vector<Scalar> coords(const std::vector<Scalar>& ambient) const {
        Matrix rhs(sub.field, embedding.rows(), 1);
        for (size_t i = 0; i < ambient.size(); ++i) rhs.at(i, 0) = ambient[i];
        auto sol = embedding.solve(rhs);
        require(sol.has_value(), "SolveFailed", "vector not in the fixed subalgebra");
        return sol->column(0);
    }
};

// sigma-average of an ambient basis vector: sum of its sigmaA orbit images
inline std::vector<Scalar> sigma_average(const GradedAlgebra& A,
                                         const std::vector<size_t>& sigmaA, size_t sp,
                                         size_t b) {
    std::vector<Scalar> v(A.dim, Scalar::zero(A.field));
    size_t cur = b;
    for (size_t l = 0; l < sp; ++l) {
        v[cur] = v[cur] + Scalar::one(A.field);
        cur = sigmaA[cur];
    }
    return v;
}

// Construct the fixed-point algebra A^sigma with basis
//   c^{(k)}_{s,t} = sum_j eps_lam^{kj} avg(c_{s, sigma_lam^j(t)})
// and the skew cell datum over P_sigma, re-verifying every claim.
inline FixedPointResult fixed_point_datum(const GradedAlgebra& A, const SkewCellDatum& D,
                                          const ShiftAutomorphism& S, const Scalar& eps) {
    ShiftOrders ord;
    Report shift_rep = verify_shift(A, D, S, &ord);
    require(shift_rep.ok(), "DatumNotVerified",
            "shift automorphism fails verification:\n" + shift_rep.summary());
    const FieldPtr& f = A.field;
    require(eps.field()->desc == f->desc, "DescriptorMismatch", "eps lives elsewhere");
    require((size_t)eps.order((long)ord.sp) == ord.sp, "BadRootOrder",
            "eps must have order exactly s_p");
    long ch = f->characteristic();
    require(ch == 0 || (long)ord.sp % ch != 0, "CharDividesOrder",
            "s_p is not invertible in the field");

    FixedPointResult R;
    R.sp = ord.sp;
    R.sP = ord.sP;
    R.eps = eps;

    // identity shift: A^sigma is A itself with its own datum (which may be
    // genuinely skew); the orbit construction below would rebuild iota as the
    // identity, so short-circuit instead
    if (ord.sp == 1) {
        R.sub = A;
        R.datum = D;
        R.embedding = Matrix::identity(f, A.dim);
        auto cells = D.cell_index(A.dim);
        R.sub_label.resize(A.dim);
        for (size_t b = 0; b < A.dim; ++b)
            R.sub_label[b] = {cells[b].lam, 0, cells[b].s, cells[b].t};
        for (size_t lam = 0; lam < D.poset_size(); ++lam) {
            R.reps.push_back(lam);
            R.orbits.push_back({lam});
            R.o.push_back(1);
            R.plam.push_back(1);
            R.otilde.push_back(1);
            R.eps_lam.push_back(Scalar::one(f));
            std::vector<size_t> all(D.tab_count(lam));
            for (size_t s = 0; s < all.size(); ++s) all[s] = s;
            R.tsig.push_back(all);
            R.sigma_lam.push_back(all);
            R.elements.push_back({lam, 0});
        }
        R.cellular = D.is_cellular();
        return R;
    }

    // sigmaP orbit representatives, by least element id
    size_t np = D.poset_size();
    std::vector<bool> seen(np, false);
    std::vector<std::pair<std::string, size_t>> rep_order;
    std::vector<std::vector<size_t>> orbit_of(np);
    for (size_t i = 0; i < np; ++i) {
        if (seen[i]) continue;
        std::vector<size_t> orbit;
        size_t cur = i;
        do {
            orbit.push_back(cur);
            seen[cur] = true;
            cur = S.sigmaP[cur];
        } while (cur != i);
        size_t rep = orbit[0];
        for (size_t x : orbit)
            if (D.elements[x] < D.elements[rep]) rep = x;
        // rotate so the orbit starts at the representative
        std::vector<size_t> rot;
        size_t pos = 0;
        while (orbit[pos] != rep) ++pos;
        for (size_t k = 0; k < orbit.size(); ++k) rot.push_back(orbit[(pos + k) % orbit.size()]);
        rep_order.push_back({D.elements[rep], rep});
        orbit_of[rep] = rot;
    }
    std::sort(rep_order.begin(), rep_order.end());
    for (auto& [id, rep] : rep_order) {
        R.reps.push_back(rep);
        R.orbits.push_back(orbit_of[rep]);
    }

    // per-rep orbit quantities and tableau data
    size_t nreps = R.reps.size();
    R.o.resize(nreps);
    R.plam.resize(nreps);
    R.otilde.resize(nreps);
    R.eps_lam.assign(nreps, Scalar::one(f));
    R.tsig.resize(nreps);
    R.sigma_lam.resize(nreps);
    for (size_t ri = 0; ri < nreps; ++ri) {
        size_t lam = R.reps[ri];
        long o = (long)R.orbits[ri].size();
        R.o[ri] = o;
        require((long)R.sp % o == 0, "InternalError", "orbit size does not divide s_p");
        R.plam[ri] = (long)R.sp / o;
        // sigma_lam = sigma_T^o restricted to T(lambda)
        size_t nt = D.tab_count(lam);
        std::vector<size_t> sl(nt);
        for (size_t s = 0; s < nt; ++s) {
            size_t cl = lam, cs = s;
            for (long j = 0; j < o; ++j) {
                cs = S.sigmaT[cl][cs];
                cl = S.sigmaP[cl];
            }
            require(cl == lam, "InternalError", "sigma_T^o left the cell");
            sl[s] = cs;
        }
        R.sigma_lam[ri] = sl;
        // orbits on T(lambda): uniform size, least-index representatives
        std::vector<bool> tseen(nt, false);
        long ot = -1;
        for (size_t s = 0; s < nt; ++s) {
            if (tseen[s]) continue;
            std::vector<size_t> torb;
            size_t cur = s;
            do {
                torb.push_back(cur);
                tseen[cur] = true;
                cur = sl[cur];
            } while (cur != s);
            if (ot < 0) ot = (long)torb.size();
            require(ot == (long)torb.size(), "InternalError", "non-uniform tableau orbits");
            R.tsig[ri].push_back(*std::min_element(torb.begin(), torb.end()));
        }
        if (ot < 0) ot = 1;
        R.otilde[ri] = ot;
        require((long)R.sp % ot == 0, "InternalError", "otilde does not divide s_p");
        R.eps_lam[ri] = eps.pow((long)R.sp / ot);
    }

    // the c^(k) basis of the fixed subalgebra
    std::vector<std::vector<Scalar>> basis_vecs;
    std::vector<FixedPointResult::SubLabel> labels;
    std::vector<std::string> label_text;
    std::vector<long> degs;
    for (size_t ri = 0; ri < nreps; ++ri) {
        size_t lam = R.reps[ri];
        for (long k = 0; k < R.otilde[ri]; ++k) {
            R.elements.push_back({ri, k});
            for (size_t si = 0; si < R.tsig[ri].size(); ++si)
                for (size_t ti = 0; ti < R.tsig[ri].size(); ++ti) {
                    size_t s = R.tsig[ri][si];
                    std::vector<Scalar> v(A.dim, Scalar::zero(f));
                    size_t tcur = R.tsig[ri][ti];
                    for (long j = 0; j < R.otilde[ri]; ++j) {
                        Scalar coef = R.eps_lam[ri].pow(k * j);
                        auto avg = sigma_average(A, S.sigmaA, R.sp, D.basis_of[lam][s][tcur]);
                        for (size_t x = 0; x < A.dim; ++x) v[x] = v[x] + coef * avg[x];
                        tcur = R.sigma_lam[ri][tcur];
                    }
                    basis_vecs.push_back(v);
                    labels.push_back({ri, k, si, ti});
                    label_text.push_back("c(" + std::to_string(k) + ")[" + D.elements[lam] +
                                         ";" + std::to_string(s) + "," +
                                         std::to_string(R.tsig[ri][ti]) + "]");
                    degs.push_back(D.tab_deg[lam][s] + D.tab_deg[lam][R.tsig[ri][ti]]);
                }
        }
    }
    size_t dim_sub = basis_vecs.size();

    // fixed-subspace dimension = number of sigmaA orbits on the basis
    size_t fixed_dim = 0;
    {
        std::vector<bool> bseen(A.dim, false);
        for (size_t b = 0; b < A.dim; ++b) {
            if (bseen[b]) continue;
            ++fixed_dim;
            size_t cur = b;
            do {
                bseen[cur] = true;
                cur = S.sigmaA[cur];
            } while (cur != b);
        }
    }
    require(fixed_dim == dim_sub, "FixedBasisMismatch",
            "fixed subspace dimension " + std::to_string(fixed_dim) + " != " +
                std::to_string(dim_sub) + " basis elements");

    R.embedding = Matrix::from_columns(f, basis_vecs);
    require(R.embedding.rank() == dim_sub, "FixedBasisMismatch",
            "c^(k) vectors are linearly dependent");
    R.sub_label = labels;

    // every basis vector is sigmaA-fixed
    for (auto& v : basis_vecs) {
        std::vector<Scalar> w(A.dim, Scalar::zero(f));
        for (size_t x = 0; x < A.dim; ++x) w[S.sigmaA[x]] = v[x];
        require(w == v, "FixedBasisMismatch", "c^(k) vector is not sigma-fixed");
    }

    // subalgebra structure constants by one batched exact solve
    GradedAlgebra& B = R.sub;
    B.field = f;
    B.dim = dim_sub;
    B.labels = label_text;
    B.deg = degs;
    {
        Matrix rhs(f, A.dim, dim_sub * dim_sub + 1);
        for (size_t i = 0; i < dim_sub; ++i)
            for (size_t j = 0; j < dim_sub; ++j) {
                auto prod = A.mul_vec(basis_vecs[i], basis_vecs[j]);
                for (size_t x = 0; x < A.dim; ++x) rhs.at(x, i * dim_sub + j) = prod[x];
            }
        for (size_t x = 0; x < A.dim; ++x) rhs.at(x, dim_sub * dim_sub) = A.unit[x];
        auto sol = R.embedding.solve(rhs);
        require(sol.has_value(), "SolveFailed", "products leave the fixed subalgebra");
        B.mult.assign(dim_sub, std::vector<SparseVec>(dim_sub));
        for (size_t i = 0; i < dim_sub; ++i)
            for (size_t j = 0; j < dim_sub; ++j) {
                SparseVec v;
                for (size_t x = 0; x < dim_sub; ++x) {
                    Scalar s = sol->at(x, i * dim_sub + j);
                    if (!s.is_zero()) v.push_back({x, s});
                }
                B.mult[i][j] = std::move(v);
            }
        B.unit.clear();
        for (size_t x = 0; x < dim_sub; ++x) B.unit.push_back(sol->at(x, dim_sub * dim_sub));
    }

    // star: (c^(k)_{s,t})* = c^(-k)_{t,s}, verified in ambient coordinates
    B.star.resize(dim_sub);
    {
        std::map<std::tuple<size_t, long, size_t, size_t>, size_t> index;
        for (size_t i = 0; i < dim_sub; ++i)
            index[{labels[i].rep, labels[i].k, labels[i].s, labels[i].t}] = i;
        for (size_t i = 0; i < dim_sub; ++i) {
            auto& L = labels[i];
            long ot = R.otilde[L.rep];
            long mk = ((-L.k) % ot + ot) % ot;
            size_t j = index.at({L.rep, mk, L.t, L.s});
            B.star[i] = j;
            auto starred = A.star_vec(basis_vecs[i]);
            require(starred == basis_vecs[j], "VerifyError",
                    "star(c^(k)) != c^(-k) transposed at " + label_text[i]);
        }
    }
    B.check_structure();

    // the P_sigma datum
    SkewCellDatum& PD = R.datum;
    size_t ne = R.elements.size();
    for (auto& [ri, k] : R.elements)
        PD.elements.push_back("(" + D.elements[R.reps[ri]] + ";" + std::to_string(k) + ")");
    PD.gt.assign(ne, std::vector<bool>(ne, false));
    for (size_t a = 0; a < ne; ++a)
        for (size_t b = 0; b < ne; ++b) {
            auto [ra, ka] = R.elements[a];
            auto [rb, kb] = R.elements[b];
            if (ra == rb) continue;
            bool gt = false;
            for (size_t member : R.orbits[ra])
                if (D.gt[member][R.reps[rb]]) gt = true;
            PD.gt[a][b] = gt;
        }
    auto elem_index = [&](size_t ri, long k) -> size_t {
        for (size_t i = 0; i < R.elements.size(); ++i)
            if (R.elements[i].first == ri && R.elements[i].second == k) return i;
        fail("InternalError", "missing P_sigma element");
    };
    PD.iota.resize(ne);
    for (size_t a = 0; a < ne; ++a) {
        auto [ri, k] = R.elements[a];
        long ot = R.otilde[ri];
        PD.iota[a] = elem_index(ri, ((-k) % ot + ot) % ot);
    }
    PD.tab_deg.assign(ne, {});
    PD.iota_tab.assign(ne, {});
    PD.basis_of.assign(ne, {});
    for (size_t a = 0; a < ne; ++a) {
        auto [ri, k] = R.elements[a];
        size_t lam = R.reps[ri];
        size_t m = R.tsig[ri].size();
        for (size_t si = 0; si < m; ++si) {
            PD.tab_deg[a].push_back(D.tab_deg[lam][R.tsig[ri][si]]);
            PD.iota_tab[a].push_back(si);
        }
        PD.basis_of[a].assign(m, std::vector<size_t>(m));
    }
    {
        std::map<std::tuple<size_t, long, size_t, size_t>, size_t> index;
        for (size_t i = 0; i < dim_sub; ++i)
            index[{labels[i].rep, labels[i].k, labels[i].s, labels[i].t}] = i;
        for (size_t a = 0; a < ne; ++a) {
            auto [ri, k] = R.elements[a];
            size_t m = R.tsig[ri].size();
            for (size_t si = 0; si < m; ++si)
                for (size_t ti = 0; ti < m; ++ti)
                    PD.basis_of[a][si][ti] = index.at({ri, k, si, ti});
        }
    }

    Report datum_rep = verify_skew_datum(B, PD);
    require(datum_rep.ok(), "DatumNotVerified",
            "fixed-point datum fails verification:\n" + datum_rep.summary());

    R.cellular = true;
    for (long ot : R.otilde)
        if (ot > 2) R.cellular = false;
    return R;
}

// deterministic sweep for an invertible degree-0 element with sigma(z) = eps z
inline std::optional<std::vector<Scalar>> find_z(const GradedAlgebra& A,
                                                 const ShiftAutomorphism& S,
                                                 const Scalar& eps) {
    const FieldPtr& f = A.field;
    std::vector<size_t> deg0;
    for (size_t i = 0; i < A.dim; ++i)
        if (A.deg[i] == 0) deg0.push_back(i);
    // (sigmaA - eps) v = 0 restricted to the degree-0 block
    Matrix sys(f, A.dim, deg0.size());
    for (size_t j = 0; j < deg0.size(); ++j) {
        sys.at(S.sigmaA[deg0[j]], j) = sys.at(S.sigmaA[deg0[j]], j) + Scalar::one(f);
        sys.at(deg0[j], j) = sys.at(deg0[j], j) - eps;
    }
    auto ker = sys.kernel_basis();
    auto expand = [&](const std::vector<Scalar>& small) {
        std::vector<Scalar> v(A.dim, Scalar::zero(f));
        for (size_t j = 0; j < deg0.size(); ++j) v[deg0[j]] = small[j];
        return v;
    };
    std::vector<std::vector<Scalar>> candidates;
    for (auto& kv : ker) candidates.push_back(expand(kv));
    size_t base = candidates.size();
    for (size_t i = 0; i < base; ++i)
        for (size_t j = i + 1; j < base; ++j) {
            std::vector<Scalar> v(A.dim, Scalar::zero(f));
            for (size_t x = 0; x < A.dim; ++x) v[x] = candidates[i][x] + candidates[j][x];
            candidates.push_back(std::move(v));
        }
    for (auto& v : candidates)
        if (A.left_mult(v).invertible()) return v;
    return std::nullopt;
}

// eigenspace decomposition A = (+) z^i A^sigma: dimensions and directness
inline bool verify_eigensplitting(const GradedAlgebra& A, const ShiftAutomorphism&,
                                  const std::vector<Scalar>& z, size_t sp,
                                  const Matrix& embedding) {
    const FieldPtr& f = A.field;
    std::vector<std::vector<Scalar>> all;
    std::vector<Scalar> zpow(A.dim, Scalar::zero(f));
    // z^0 = 1
    for (size_t x = 0; x < A.dim; ++x) zpow[x] = A.unit[x];
    for (size_t i = 0; i < sp; ++i) {
        for (size_t j = 0; j < embedding.cols(); ++j)
            all.push_back(A.mul_vec(zpow, embedding.column(j)));
        zpow = A.mul_vec(zpow, z);
    }
    return all.size() == A.dim && span_rank(f, all) == A.dim;
}

} // namespace skewcell
