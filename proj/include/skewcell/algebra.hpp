#pragma once

#include <map>
#include <string>
#include <vector>

#include "skewcell/matrix.hpp"

namespace skewcell {

using SparseVec = std::vector<std::pair<size_t, Scalar>>; // index-sorted, nonzero

inline std::vector<Scalar> densify(const FieldPtr& f, size_t dim, const SparseVec& v) {
    std::vector<Scalar> out(dim, Scalar::zero(f));
    for (auto& [k, s] : v) out[k] = s;
    return out;
}

// Finite-dimensional graded algebra given by structure constants on a fixed
// basis, with a star anti-involution acting as a basis permutation.
struct GradedAlgebra {
    FieldPtr field;
    size_t dim = 0;
    std::vector<std::string> labels;
    std::vector<long> deg;
    std::vector<std::vector<SparseVec>> mult; // mult[i][j] = basis expansion of x_i x_j
    std::vector<size_t> star;                 // star(x_i) = x_{star[i]}
    std::vector<Scalar> unit;                 // coordinates of 1

    const SparseVec& prod(size_t i, size_t j) const { return mult[i][j]; }

    std::vector<Scalar> mul_vec(const std::vector<Scalar>& a,
                                const std::vector<Scalar>& b) const {
        std::vector<Scalar> out(dim, Scalar::zero(field));
        for (size_t i = 0; i < dim; ++i) {
            if (a[i].is_zero()) continue;
            for (size_t j = 0; j < dim; ++j) {
                if (b[j].is_zero()) continue;
                Scalar c = a[i] * b[j];
                for (auto& [k, s] : mult[i][j]) out[k] = out[k] + c * s;
            }
        }
        return out;
    }
    std::vector<Scalar> basis_vec(size_t i) const {
        std::vector<Scalar> v(dim, Scalar::zero(field));
        v[i] = Scalar::one(field);
        return v;
    }
    std::vector<Scalar> star_vec(const std::vector<Scalar>& a) const {
        std::vector<Scalar> out(dim, Scalar::zero(field));
        for (size_t i = 0; i < dim; ++i) out[star[i]] = a[i];
        return out;
    }
    // left-multiplication matrix of a vector
    Matrix left_mult(const std::vector<Scalar>& a) const {
        Matrix m(field, dim, dim);
        for (size_t j = 0; j < dim; ++j) {
            auto col = mul_vec(a, basis_vec(j));
            for (size_t i = 0; i < dim; ++i) m.at(i, j) = col[i];
        }
        return m;
    }

    // structural invariants: associativity, unit, grading, star
    void check_structure() const {
        require(labels.size() == dim && deg.size() == dim && star.size() == dim &&
                    unit.size() == dim && mult.size() == dim,
                "VerifyError", "algebra field sizes inconsistent");
        for (size_t i = 0; i < dim; ++i) {
            require(mult[i].size() == dim, "VerifyError", "mult table ragged");
            for (size_t j = 0; j < dim; ++j)
                for (auto& [k, s] : mult[i][j]) {
                    require(k < dim && !s.is_zero(), "VerifyError", "bad sparse entry");
                    require(deg[k] == deg[i] + deg[j], "VerifyError",
                            "grading violated at (" + labels[i] + ")*(" + labels[j] + ")");
                }
        }
        for (size_t i = 0; i < dim; ++i) {
            auto e = basis_vec(i);
            require(mul_vec(unit, e) == e && mul_vec(e, unit) == e, "VerifyError",
                    "unit fails at " + labels[i]);
        }
        auto sparse_eq = [&](const std::map<size_t, Scalar>& a, const SparseVec& b) {
            size_t nb = 0;
            for (auto& [k, s] : b) {
                auto it = a.find(k);
                if (it == a.end() || !(it->second == s)) return false;
                ++nb;
            }
            size_t na = 0;
            for (auto& [k, s] : a)
                if (!s.is_zero()) ++na;
            return na == nb;
        };
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; j < dim; ++j)
                for (size_t k = 0; k < dim; ++k) {
                    std::map<size_t, Scalar> lhs, rhs;
                    for (auto& [b, s] : mult[i][j])
                        for (auto& [b2, s2] : mult[b][k]) {
                            auto [it, fresh] = lhs.try_emplace(b2, s * s2);
                            if (!fresh) it->second = it->second + s * s2;
                        }
                    std::map<size_t, Scalar> acc;
                    for (auto& [b, s] : mult[j][k])
                        for (auto& [b2, s2] : mult[i][b]) {
                            auto [it, fresh] = acc.try_emplace(b2, s * s2);
                            if (!fresh) it->second = it->second + s * s2;
                        }
                    bool same = true;
                    for (auto& [b, s] : lhs) {
                        auto it = acc.find(b);
                        Scalar other = it == acc.end() ? Scalar::zero(field) : it->second;
                        if (!(s == other)) same = false;
                    }
                    for (auto& [b, s] : acc)
                        if (!lhs.count(b) && !s.is_zero()) same = false;
                    require(same, "VerifyError",
                            "associativity fails at (" + labels[i] + "," + labels[j] + "," +
                                labels[k] + ")");
                }
        for (size_t i = 0; i < dim; ++i) {
            require(star[star[i]] == i, "VerifyError", "star not an involution");
            require(deg[star[i]] == deg[i], "VerifyError", "star not degree-preserving");
            for (size_t j = 0; j < dim; ++j) {
                std::map<size_t, Scalar> lhs;
                for (auto& [k, s] : mult[i][j]) lhs[star[k]] = s;
                require(sparse_eq(lhs, mult[star[j]][star[i]]), "VerifyError",
                        "star is not an anti-automorphism at (" + labels[i] + "," + labels[j] +
                            ")");
            }
        }
    }
};

// helper for building multiplication tables entry by entry
inline SparseVec sparsify(const FieldPtr&, const std::vector<Scalar>& v) {
    SparseVec out;
    for (size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) out.push_back({k, v[k]});
    return out;
}

} // namespace skewcell
