#pragma once

#include "skewcell/decomp.hpp"
#include "skewcell/fixedpoint.hpp"

namespace skewcell {

// The six Clifford-theory checks relating the cell structure of A and A^sigma:
//   (1) the twist c_s -> c_{sigma s} intertwines a with sigma(a)
//   (2) gamma' : (+)_k C^(k) -> Res C_lambda is an A^sigma-isomorphism
//       carrying (+)_k rad C^(k) onto rad C_lambda
//   (3) phi^(k)(c_s, c_t) = p_lam sum_l eps_lam^{kl} phi(c_{sigma_lam^l s}, c_t)
//   (4) with an invertible degree-0 z, sigma(z) = eps z: otilde = p_lam and
//       x -> gamma'^{-1}(z gamma'(x)) gives C^(k) ~ tau-twisted C^(k+1)
//   (5) Ind C^(k) ~ (+)_{j < o_lam} C_{sigma^j lambda} via gamma''
//   (6) the simple census of A^sigma against the ambient simples
inline Report clifford_suite(const GradedAlgebra& A, const SkewCellDatum& D,
                             const ShiftAutomorphism& S, const Scalar& eps,
                             const FixedPointResult& R) {
    const FieldPtr& f = A.field;
    Report rep;
    CellEngine amb(A, D, false);
    CellEngine sub(R.sub, R.datum, false);

    // (1) twist: r_{sigma v, sigma s}(sigma(a)) = r_{v s}(a), and Gram
    // equivariance phi_lam(v,s) = phi_{sigma lam}(sigma v, sigma s)
    {
        bool ok = true;
        std::string w;
        for (size_t lam = 0; lam < D.poset_size() && ok; ++lam) {
            size_t slam = S.sigmaP[lam];
            size_t nt = D.tab_count(lam);
            for (size_t ai = 0; ai < A.dim && ok; ++ai) {
                const Matrix& m1 = amb.cell_module(lam).mod.action[ai];
                const Matrix& m2 = amb.cell_module(slam).mod.action[S.sigmaA[ai]];
                for (size_t v = 0; v < nt && ok; ++v)
                    for (size_t s = 0; s < nt; ++s)
                        if (!(m2.at(S.sigmaT[lam][v], S.sigmaT[lam][s]) == m1.at(v, s))) {
                            ok = false;
                            w = "cell " + D.elements[lam] + ", a = " + A.labels[ai];
                            break;
                        }
            }
            for (size_t v = 0; v < nt && ok; ++v)
                for (size_t s = 0; s < nt; ++s)
                    if (!(amb.gram(lam).at(v, s) ==
                          amb.gram(slam).at(S.sigmaT[lam][v], S.sigmaT[lam][s]))) {
                        ok = false;
                        w = "Gram equivariance at " + D.elements[lam];
                        break;
                    }
        }
        rep.add("1 twist isomorphism", ok, w);
    }

    // per-rep gamma' matrices, reused by items 2, 4 and 5
    std::vector<Matrix> gammap(R.reps.size(), Matrix(f, 0, 0));
    for (size_t ri = 0; ri < R.reps.size(); ++ri) {
        size_t lam = R.reps[ri];
        size_t nt = D.tab_count(lam);
        size_t m = R.tsig[ri].size();
        long ot = R.otilde[ri];
        Matrix G(f, nt, (size_t)ot * m);
        for (long k = 0; k < ot; ++k)
            for (size_t si = 0; si < m; ++si) {
                size_t row = R.tsig[ri][si];
                for (long j = 0; j < ot; ++j) {
                    G.at(row, (size_t)k * m + si) =
                        G.at(row, (size_t)k * m + si) + R.eps_lam[ri].pow(-k * j);
                    row = R.sigma_lam[ri][row];
                }
            }
        gammap[ri] = std::move(G);
    }

    // (2) restriction isomorphism and radical correspondence
    {
        bool ok = true;
        std::string w;
        for (size_t ri = 0; ri < R.reps.size() && ok; ++ri) {
            size_t lam = R.reps[ri];
            size_t m = R.tsig[ri].size();
            long ot = R.otilde[ri];
            const Matrix& G = gammap[ri];
            if (!G.invertible()) {
                ok = false;
                w = "gamma' not bijective at " + D.elements[lam];
                break;
            }
            for (size_t b = 0; b < R.sub.dim && ok; ++b) {
                // block-diagonal action on (+)_k C^(k)
                Matrix blk(f, (size_t)ot * m, (size_t)ot * m);
                for (long k = 0; k < ot; ++k) {
                    const Matrix& mk =
                        sub.cell_module(R.element_of(ri, k)).mod.action[b];
                    for (size_t i = 0; i < m; ++i)
                        for (size_t j = 0; j < m; ++j)
                            blk.at((size_t)k * m + i, (size_t)k * m + j) = mk.at(i, j);
                }
                // ambient action of the embedded element on C_lambda
                auto emb = R.embedding.column(b);
                Matrix rho(f, D.tab_count(lam), D.tab_count(lam));
                for (size_t ai = 0; ai < A.dim; ++ai)
                    if (!emb[ai].is_zero())
                        rho = rho + amb.cell_module(lam).mod.action[ai].scaled(emb[ai]);
                if (!(rho * G == G * blk)) {
                    ok = false;
                    w = "gamma' not A^sigma-linear at " + D.elements[lam] + ", b = " +
                        R.sub.labels[b];
                }
            }
            if (!ok) break;
            // radical correspondence
            std::vector<std::vector<Scalar>> img;
            for (long k = 0; k < ot; ++k) {
                auto rad = sub.gram(R.element_of(ri, k)).kernel_basis();
                for (auto& v : rad) {
                    std::vector<Scalar> big((size_t)ot * m, Scalar::zero(f));
                    for (size_t i = 0; i < m; ++i) big[(size_t)k * m + i] = v[i];
                    img.push_back(G.apply(big));
                }
            }
            auto amb_rad = amb.gram(lam).kernel_basis();
            if (!same_span(f, img, amb_rad)) {
                ok = false;
                w = "gamma' misses the radical at " + D.elements[lam];
            }
        }
        rep.add("2 restriction isomorphism", ok, w);
    }

    // (3) the form formula, coefficient by coefficient
    {
        bool ok = true;
        std::string w;
        for (size_t ri = 0; ri < R.reps.size() && ok; ++ri) {
            size_t lam = R.reps[ri];
            size_t m = R.tsig[ri].size();
            long ot = R.otilde[ri];
            Scalar plam = Scalar::of_int(f, R.plam[ri]);
            for (long k = 0; k < ot && ok; ++k) {
                const Matrix& Gk = sub.gram(R.element_of(ri, k));
                for (size_t si = 0; si < m && ok; ++si)
                    for (size_t ti = 0; ti < m; ++ti) {
                        Scalar rhs = Scalar::zero(f);
                        size_t srow = R.tsig[ri][si];
                        for (long l = 0; l < ot; ++l) {
                            rhs = rhs + R.eps_lam[ri].pow(k * l) *
                                            amb.gram(lam).at(srow, R.tsig[ri][ti]);
                            srow = R.sigma_lam[ri][srow];
                        }
                        rhs = plam * rhs;
                        if (!(Gk.at(si, ti) == rhs)) {
                            ok = false;
                            w = "cell (" + D.elements[lam] + ";" + std::to_string(k) + ") at (" +
                                std::to_string(si) + "," + std::to_string(ti) + ")";
                            break;
                        }
                    }
            }
        }
        rep.add("3 form formula", ok, w);
    }

    // z-dependent items
    auto z = find_z(A, S, eps);
    if (!z) {
        rep.add("4 tau twist [skipped: MissingZ]", true, "");
        rep.add("5 induction isomorphism [skipped: MissingZ]", true, "");
    } else {
        std::vector<Scalar> zinv;
        {
            Matrix rhs(f, A.dim, 1);
            for (size_t x = 0; x < A.dim; ++x) rhs.at(x, 0) = A.unit[x];
            auto sol = A.left_mult(*z).solve(rhs);
            require(sol.has_value(), "InternalError", "z lost its inverse");
            zinv = sol->column(0);
        }
        // powers of z and of z^{-1}
        std::vector<std::vector<Scalar>> zpow{A.unit}, zneg{A.unit};
        for (size_t i = 1; i < R.sp; ++i) {
            zpow.push_back(A.mul_vec(zpow.back(), *z));
            zneg.push_back(A.mul_vec(zneg.back(), zinv));
        }

        // (4) otilde = plam; tau(b) = z b z^{-1} in A^sigma; gamma^(k) is a
        // tau-twisted isomorphism C^(k) -> C^(k+1)
        {
            bool ok = true;
            std::string w;
            for (size_t ri = 0; ri < R.reps.size() && ok; ++ri)
                if (R.otilde[ri] != R.plam[ri]) {
                    ok = false;
                    w = "otilde != plam at " + D.elements[R.reps[ri]];
                }
            // tau on the subalgebra basis
            std::vector<std::vector<Scalar>> tau_coords(R.sub.dim);
            for (size_t b = 0; b < R.sub.dim && ok; ++b) {
                auto t = A.mul_vec(A.mul_vec(*z, R.embedding.column(b)), zinv);
                try {
                    tau_coords[b] = R.coords(t);
                } catch (const error&) {
                    ok = false;
                    w = "tau(b) leaves A^sigma at b = " + R.sub.labels[b];
                }
            }
            for (size_t ri = 0; ri < R.reps.size() && ok; ++ri) {
                size_t lam = R.reps[ri];
                size_t m = R.tsig[ri].size();
                long ot = R.otilde[ri];
                const Matrix& G = gammap[ri];
                // z action on C_lambda
                Matrix rho_z(f, D.tab_count(lam), D.tab_count(lam));
                for (size_t ai = 0; ai < A.dim; ++ai)
                    if (!(*z)[ai].is_zero())
                        rho_z = rho_z + amb.cell_module(lam).mod.action[ai].scaled((*z)[ai]);
                // gamma^(k): solve G x = rho_z * G restricted to the k block
                auto sol = G.solve(rho_z * G);
                if (!sol) {
                    ok = false;
                    w = "z gamma' leaves the image at " + D.elements[lam];
                    break;
                }
                for (long k = 0; k < ot && ok; ++k) {
                    long k1 = (k + 1) % ot;
                    Matrix gk(f, m, m);
                    for (size_t col = 0; col < m; ++col)
                        for (size_t row = 0; row < (size_t)ot * m; ++row) {
                            Scalar v = sol->at(row, (size_t)k * m + col);
                            if (v.is_zero()) continue;
                            if (row / m != (size_t)k1) {
                                ok = false;
                                w = "z does not map block " + std::to_string(k) + " to " +
                                    std::to_string(k1) + " at " + D.elements[lam];
                                break;
                            }
                            gk.at(row % m, col) = v;
                        }
                    if (!ok) break;
                    if (gk.rank() != m) {
                        ok = false;
                        w = "gamma^(k) not bijective at " + D.elements[lam];
                        break;
                    }
                    // twisted linearity: gamma^(k) M_k(b) = M_{k+1}(tau(b)) gamma^(k)
                    for (size_t b = 0; b < R.sub.dim; ++b) {
                        const Matrix& mk =
                            sub.cell_module(R.element_of(ri, k)).mod.action[b];
                        Matrix mt(f, m, m);
                        for (size_t c = 0; c < R.sub.dim; ++c)
                            if (!tau_coords[b][c].is_zero())
                                mt = mt + sub.cell_module(R.element_of(ri, k1))
                                              .mod.action[c]
                                              .scaled(tau_coords[b][c]);
                        if (!(gk * mk == mt * gk)) {
                            ok = false;
                            w = "tau-twisted linearity fails at " + D.elements[lam] + ", b = " +
                                R.sub.labels[b];
                            break;
                        }
                    }
                }
            }
            rep.add("4 tau twist", ok, w);
        }

        // (5) induction isomorphism
        {
            bool ok = true;
            std::string w;
            Scalar spinv = Scalar::of_int(f, (long)R.sp).inv();
            for (size_t ri = 0; ri < R.reps.size() && ok; ++ri) {
                size_t lam = R.reps[ri];
                size_t nt = D.tab_count(lam);
                size_t m = R.tsig[ri].size();
                long ot = R.otilde[ri];
                long o = R.o[ri];
                // tableau transport along the orbit: comp[j][s] = index of the
                // image of s in T(sigma^j lambda)
                std::vector<std::vector<size_t>> comp(o + 1, std::vector<size_t>(nt));
                for (size_t s = 0; s < nt; ++s) comp[0][s] = s;
                {
                    size_t cl = lam;
                    for (long j = 0; j < o; ++j) {
                        for (size_t s = 0; s < nt; ++s)
                            comp[j + 1][s] = S.sigmaT[cl][comp[j][s]];
                        cl = S.sigmaP[cl];
                    }
                }
                for (long k = 0; k < ot && ok; ++k) {
                    size_t dim_ind = R.sp * m;
                    size_t dim_tgt = (size_t)o * nt;
                    if (dim_ind != dim_tgt) {
                        ok = false;
                        w = "induced dimension mismatch at " + D.elements[lam];
                        break;
                    }
                    // gamma'': column (i, si) -> sum_j rho_{sigma^j lam}(z^i) c_{comp_j(...)}
                    Matrix gpp(f, dim_tgt, dim_ind);
                    for (size_t i = 0; i < R.sp; ++i)
                        for (size_t si = 0; si < m; ++si) {
                            // gamma'(c^(k)_si) inside C_lambda
                            std::vector<Scalar> gp(nt, Scalar::zero(f));
                            {
                                size_t row = R.tsig[ri][si];
                                for (long j = 0; j < ot; ++j) {
                                    gp[row] = gp[row] + R.eps_lam[ri].pow(-k * j);
                                    row = R.sigma_lam[ri][row];
                                }
                            }
                            for (long j = 0; j < o; ++j) {
                                size_t mu = lam;
                                for (long jj = 0; jj < j; ++jj) mu = S.sigmaP[mu];
                                // transport gp to C_{sigma^j lam} then act by z^i
                                std::vector<Scalar> tv(nt, Scalar::zero(f));
                                for (size_t s = 0; s < nt; ++s) tv[comp[j][s]] = gp[s];
                                Matrix rho(f, nt, nt);
                                for (size_t ai = 0; ai < A.dim; ++ai)
                                    if (!zpow[i][ai].is_zero())
                                        rho = rho + amb.cell_module(mu).mod.action[ai].scaled(
                                                        zpow[i][ai]);
                                auto out = rho.apply(tv);
                                for (size_t s = 0; s < nt; ++s)
                                    gpp.at((size_t)j * nt + s, i * m + si) = out[s];
                            }
                        }
                    if (gpp.rank() != dim_ind) {
                        ok = false;
                        w = "gamma'' not bijective at (" + D.elements[lam] + ";" +
                            std::to_string(k) + ")";
                        break;
                    }
                    // A-linearity: a (z^i x) = sum_j z^j (b_{j,i} x) with
                    // a z^i = sum_j z^j b_{j,i}
                    for (size_t ai = 0; ai < A.dim && ok; ++ai) {
                        // action matrix of a on the induced module
                        Matrix act(f, dim_ind, dim_ind);
                        for (size_t i = 0; i < R.sp; ++i) {
                            auto wvec = A.mul_vec(A.basis_vec(ai), zpow[i]);
                            for (size_t j = 0; j < R.sp; ++j) {
                                // eigenprojection of w onto the eps^j eigenspace
                                std::vector<Scalar> proj(A.dim, Scalar::zero(f));
                                std::vector<Scalar> cur = wvec;
                                for (size_t l = 0; l < R.sp; ++l) {
                                    Scalar c = spinv * eps.pow(-(long)j * (long)l);
                                    for (size_t x = 0; x < A.dim; ++x)
                                        proj[x] = proj[x] + c * cur[x];
                                    // apply sigmaA once more
                                    std::vector<Scalar> nxt(A.dim, Scalar::zero(f));
                                    for (size_t x = 0; x < A.dim; ++x)
                                        nxt[S.sigmaA[x]] = cur[x];
                                    cur = std::move(nxt);
                                }
                                auto bj = R.coords(A.mul_vec(zneg[j], proj));
                                Matrix mb(f, m, m);
                                for (size_t cidx = 0; cidx < R.sub.dim; ++cidx)
                                    if (!bj[cidx].is_zero())
                                        mb = mb + sub.cell_module(R.element_of(ri, k))
                                                      .mod.action[cidx]
                                                      .scaled(bj[cidx]);
                                for (size_t r2 = 0; r2 < m; ++r2)
                                    for (size_t c2 = 0; c2 < m; ++c2)
                                        act.at(j * m + r2, i * m + c2) =
                                            act.at(j * m + r2, i * m + c2) + mb.at(r2, c2);
                            }
                        }
                        // target action of a on (+)_j C_{sigma^j lam}
                        Matrix tact(f, dim_tgt, dim_tgt);
                        for (long j = 0; j < o; ++j) {
                            size_t mu = lam;
                            for (long jj = 0; jj < j; ++jj) mu = S.sigmaP[mu];
                            const Matrix& ma = amb.cell_module(mu).mod.action[ai];
                            for (size_t r2 = 0; r2 < nt; ++r2)
                                for (size_t c2 = 0; c2 < nt; ++c2)
                                    tact.at((size_t)j * nt + r2, (size_t)j * nt + c2) =
                                        ma.at(r2, c2);
                        }
                        if (!(tact * gpp == gpp * act)) {
                            ok = false;
                            w = "gamma'' not A-linear at (" + D.elements[lam] + ";" +
                                std::to_string(k) + "), a = " + A.labels[ai];
                        }
                    }
                }
            }
            rep.add("5 induction isomorphism", ok, w);
        }
    }

    // (6) simple census
    {
        bool ok = true;
        std::string w;
        size_t total = 0;
        for (size_t ri = 0; ri < R.reps.size() && ok; ++ri) {
            size_t lam = R.reps[ri];
            bool amb_nonzero = amb.gram_rank(lam) > 0;
            size_t nonzero_k = 0;
            for (long k = 0; k < R.otilde[ri]; ++k)
                if (sub.gram_rank(R.element_of(ri, k)) > 0) ++nonzero_k;
            if (nonzero_k != 0 && nonzero_k != (size_t)R.otilde[ri]) {
                ok = false;
                w = "partial simple family at " + D.elements[lam];
            } else if ((nonzero_k > 0) != amb_nonzero) {
                ok = false;
                w = "census mismatch with the ambient simples at " + D.elements[lam];
            }
            total += nonzero_k;
        }
        size_t p0 = 0;
        for (size_t e = 0; e < R.datum.poset_size(); ++e)
            if (sub.gram_rank(e) > 0) ++p0;
        if (ok && total != p0) {
            ok = false;
            w = "simple count mismatch";
        }
        rep.add("6 simple census", ok, w);
    }
    return rep;
}

} // namespace skewcell
