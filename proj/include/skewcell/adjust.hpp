#pragma once

#include "skewcell/algfile.hpp"
#include "skewcell/clifford.hpp"

namespace skewcell {

struct AdjustmentResult {
    DecompMatrix dq; // characteristic 0
    DecompMatrix df; // characteristic c
    std::vector<std::vector<Laurent>> af; // square over the P_0 labels
    std::vector<std::string> labels;      // P_0 element ids
    Report checks;
};

// D_F(t) = D_Q(t) A_F(t): both decomposition matrices are computed from the
// base-changed fixed-point algebras over the same P_sigma labels, and A_F is
// solved by back-substitution against the unitriangular D_Q, then checked for
// non-negativity, triangularity and bar symmetry.
inline AdjustmentResult adjustment(const GradedAlgebra& A_int, const SkewCellDatum& D,
                                   const ShiftAutomorphism& S, long c) {
    require(A_int.field->desc.kind == FieldKind::cyclotomic, "NotIntegral",
            "adjustment starts from a cyclotomic-integral algebra");
    long p = A_int.field->desc.p;
    require(p % c != 0 && is_prime_long(c), "BadParams", "need a prime c not dividing p");
    // integrality of every structure constant and the unit
    auto integral = [&](const Scalar& s) {
        for (auto& x : s.coeffs())
            if (x.get_den() != 1) return false;
        return true;
    };
    for (auto& u : A_int.unit)
        require(integral(u), "NotIntegral", "unit has denominators");
    for (size_t i = 0; i < A_int.dim; ++i)
        for (size_t j = 0; j < A_int.dim; ++j)
            for (auto& [k, s] : A_int.mult[i][j])
                require(integral(s), "NotIntegral", "structure constant has denominators");

    ShiftOrders ord;
    Report srep = verify_shift(A_int, D, S, &ord);
    require(srep.ok(), "DatumNotVerified", "shift fails verification");

    Scalar epsq = root_of_order(A_int.field, (long)ord.sp);
    auto RQ = fixed_point_datum(A_int, D, S, epsq);
    CellEngine engq(RQ.sub, RQ.datum, false);
    AdjustmentResult out;
    out.dq = graded_decomp(RQ.sub, engq);

    GradedAlgebra AF = base_change(A_int, cyclotomic_prime_field(p, c));
    Scalar epsf = reduce_pi(epsq, c);
    auto RF = fixed_point_datum(AF, D, S, epsf);
    CellEngine engf(RF.sub, RF.datum, false);
    out.df = graded_decomp(RF.sub, engf);

    Report& rep = out.checks;
    rep.add("P_sigma labels agree", out.dq.row_labels == out.df.row_labels,
            "fixed-point posets differ between characteristics");
    rep.add("simple labels agree", out.dq.col_labels == out.df.col_labels,
            "P_0 differs between characteristics");
    require(rep.ok(), "SolveFailed", "decomposition matrices are not aligned:\n" +
                                         rep.summary());
    out.labels = out.dq.col_labels;

    // back-substitution, smallest rows first: for nu in P_0,
    //   A_F[nu][mu] = D_F[nu][mu] - sum_{nu > nu'} D_Q[nu][nu'] A_F[nu'][mu]
    size_t n0 = out.labels.size();
    std::vector<size_t> row_of(n0); // position of each P_0 element among the rows
    for (size_t c0 = 0; c0 < n0; ++c0) {
        bool found = false;
        for (size_t r = 0; r < out.dq.rows.size(); ++r)
            if (out.dq.rows[r] == out.dq.cols[c0]) {
                row_of[c0] = r;
                found = true;
            }
        require(found, "InternalError", "P_0 element missing from the rows");
    }
    out.af.assign(n0, std::vector<Laurent>(n0));
    // columns are stored greatest-first, so iterating indices downwards
    // solves the smallest elements first; D_Q[nu][nu'] != 0 forces nu' < nu,
    // i.e. a larger index, which is already known
    for (size_t mu = 0; mu < n0; ++mu)
        for (size_t vi = n0; vi-- > 0;) {
            Laurent acc = out.df.d[row_of[vi]][mu];
            for (size_t vj = vi + 1; vj < n0; ++vj)
                acc = acc - out.dq.d[row_of[vi]][vj] * out.af[vj][mu];
            out.af[vi][mu] = acc;
        }

    // exact factorisation identity on every row
    bool factor_ok = true;
    std::string fw;
    for (size_t r = 0; r < out.dq.rows.size() && factor_ok; ++r)
        for (size_t mu = 0; mu < n0; ++mu) {
            Laurent acc;
            for (size_t nu = 0; nu < n0; ++nu) acc = acc + out.dq.d[r][nu] * out.af[nu][mu];
            if (!(acc == out.df.d[r][mu])) {
                factor_ok = false;
                fw = "row " + out.dq.row_labels[r] + ", column " + out.labels[mu];
                break;
            }
        }
    rep.add("D_F = D_Q A_F exactly", factor_ok, fw);

    bool diag_ok = true, tri_ok = true, pos_ok = true;
    std::string dw, tw, pw;
    for (size_t i = 0; i < n0; ++i)
        for (size_t j = 0; j < n0; ++j) {
            if (i == j && !out.af[i][j].is_one()) {
                diag_ok = false;
                dw = "at " + out.labels[i];
            }
            if (!out.af[i][j].nonneg()) {
                pos_ok = false;
                pw = "at (" + out.labels[i] + "," + out.labels[j] + ")";
            }
            if (i != j && !out.af[i][j].is_zero()) {
                size_t li = out.dq.cols[i], lj = out.dq.cols[j];
                // triangularity w.r.t. the fixed-point order
                bool gt = false;
                // the datum used for dq is RQ.datum
                gt = RQ.datum.gt[li][lj];
                if (!gt) {
                    tri_ok = false;
                    tw = "at (" + out.labels[i] + "," + out.labels[j] + ")";
                }
            }
        }
    rep.add("diagonal is 1", diag_ok, dw);
    rep.add("entries in Z_{>=0}[t,t^-1]", pos_ok, pw);
    rep.add("triangular for the fixed-point order", tri_ok, tw);

    // bar symmetry alpha_{iota nu, iota mu} = bar(alpha_{nu mu}), and
    // iota-stability of P_0
    bool bar_ok = true, iota_ok = true;
    std::string bw, iw;
    std::vector<long> iota_col(n0, -1);
    for (size_t i = 0; i < n0; ++i) {
        size_t img = RQ.datum.iota[out.dq.cols[i]];
        for (size_t j = 0; j < n0; ++j)
            if (out.dq.cols[j] == img) iota_col[i] = (long)j;
        if (iota_col[i] < 0) {
            iota_ok = false;
            iw = "iota leaves P_0 at " + out.labels[i];
        }
    }
    rep.add("P_0 is iota-stable", iota_ok, iw);
    if (iota_ok)
        for (size_t i = 0; i < n0 && bar_ok; ++i)
            for (size_t j = 0; j < n0; ++j)
                if (!(out.af[(size_t)iota_col[i]][(size_t)iota_col[j]] == out.af[i][j].bar())) {
                    bar_ok = false;
                    bw = "at (" + out.labels[i] + "," + out.labels[j] + ")";
                    break;
                }
    rep.add("bar symmetry", bar_ok, bw);
    return out;
}

} // namespace skewcell
