#pragma once

// Representation matrices rho(Q_i) read off an adinkra: signed permutation
// matrices for valises, H-graded entries in general, plus the superalgebra
// relation check and the supertrace.

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "adinkra/dashing.hpp"
#include "adinkra/ranking.hpp"

namespace adinkra {

struct MatrixEntry {
    int row = 0;
    int col = 0;
    int sign = 1;    // +1 or -1
    int hpow = 0;    // 0 or 1
    bool operator<(const MatrixEntry& o) const {
        if (row != o.row) return row < o.row;
        return col < o.col;
    }
    bool operator==(const MatrixEntry& o) const {
        return row == o.row && col == o.col && sign == o.sign && hpow == o.hpow;
    }
};

struct GradedMatrix {
    int dim = 0;
    int boson_dim = 0;
    std::vector<MatrixEntry> entries;  // sorted by (row, col)
};

// Default basis: bosons (the bipartition class of the zero coset) in label
// order, then fermions in label order.  An explicit order must still put
// all bosons first.
inline std::vector<int> basis_order(const Prechromotopology& A, const Ranking& r,
                                    const std::optional<std::vector<int>>& explicit_order,
                                    int* boson_dim) {
    std::vector<int> cls = bipartition(A);
    int zero_parity = r.h[0] & 1;
    auto is_boson = [&](int v) { return (r.h[v] & 1) == zero_parity; };
    for (int v = 0; v < (int)A.vertex_count(); v++)
        if (is_boson(v) != (cls[v] == 0))
            throw ConsistencyError("rank parity disagrees with the bipartition");

    std::vector<int> order;
    if (explicit_order) {
        order = *explicit_order;
        if (order.size() != A.vertex_count()) throw DomainError("basis order has wrong size");
        std::vector<bool> used(A.vertex_count(), false);
        for (int v : order) {
            if (v < 0 || v >= (int)A.vertex_count() || used[v])
                throw DomainError("basis order is not a permutation");
            used[v] = true;
        }
    } else {
        for (int v = 0; v < (int)A.vertex_count(); v++)
            if (is_boson(v)) order.push_back(v);
        for (int v = 0; v < (int)A.vertex_count(); v++)
            if (!is_boson(v)) order.push_back(v);
    }
    int bosons = 0;
    for (std::size_t p = 0; p < order.size(); p++) {
        if (is_boson(order[p])) {
            if ((int)p != bosons) throw DomainError("basis order must list all bosons first");
            bosons++;
        }
    }
    *boson_dim = bosons;
    return order;
}

// Valise case: rho(Q_i) is the signed adjacency matrix of the color-i
// edges, entries carrying no H.
inline std::vector<GradedMatrix> garden_matrices(
    const Prechromotopology& A, const Ranking& r, const Dashing& d,
    const std::optional<std::vector<int>>& explicit_order = std::nullopt) {
    if (!is_valid_ranking(A, r) || height(r) != 1) throw DomainError("ranking is not a valise");
    if (!validate_dashing(A, d, Parity::Odd)) throw DomainError("dashing is not odd");

    int boson_dim = 0;
    std::vector<int> order = basis_order(A, r, explicit_order, &boson_dim);
    std::vector<int> pos(A.vertex_count());
    for (std::size_t p = 0; p < order.size(); p++) pos[order[p]] = (int)p;

    std::vector<GradedMatrix> mats(A.n);
    for (int i = 0; i < A.n; i++) {
        mats[i].dim = (int)A.vertex_count();
        mats[i].boson_dim = boson_dim;
    }
    for (std::size_t e = 0; e < A.edges.size(); e++) {
        const Edge& ed = A.edges[e];
        int s = d.values.get(e) ? -1 : 1;
        GradedMatrix& m = mats[ed.color - 1];
        m.entries.push_back({pos[ed.u], pos[ed.v], s, 0});
        m.entries.push_back({pos[ed.v], pos[ed.u], s, 0});
    }
    for (auto& m : mats) std::sort(m.entries.begin(), m.entries.end());
    return mats;
}

// General case: the ascending action of an edge carries no H, the
// descending action carries one H.
inline std::vector<GradedMatrix> graded_matrices(
    const Prechromotopology& A, const Ranking& r, const Dashing& d,
    const std::optional<std::vector<int>>& explicit_order = std::nullopt) {
    if (!is_valid_ranking(A, r)) throw DomainError("not a valid ranking");
    if (!validate_dashing(A, d, Parity::Odd)) throw DomainError("dashing is not odd");

    int boson_dim = 0;
    std::vector<int> order = basis_order(A, r, explicit_order, &boson_dim);
    std::vector<int> pos(A.vertex_count());
    for (std::size_t p = 0; p < order.size(); p++) pos[order[p]] = (int)p;

    std::vector<GradedMatrix> mats(A.n);
    for (int i = 0; i < A.n; i++) {
        mats[i].dim = (int)A.vertex_count();
        mats[i].boson_dim = boson_dim;
    }
    for (std::size_t e = 0; e < A.edges.size(); e++) {
        const Edge& ed = A.edges[e];
        int lo = ed.u, hi = ed.v;
        if (r.h[lo] > r.h[hi]) std::swap(lo, hi);
        int s = d.values.get(e) ? -1 : 1;
        GradedMatrix& m = mats[ed.color - 1];
        m.entries.push_back({pos[hi], pos[lo], s, 0});  // climbing: no H
        m.entries.push_back({pos[lo], pos[hi], s, 1});  // descending: one H
    }
    for (auto& m : mats) std::sort(m.entries.begin(), m.entries.end());
    return mats;
}

struct AlgebraFailure {
    int i = 0, j = 0;          // generator indices, 1-based
    int row = 0, col = 0;
    int hpow = 0;
    int coefficient = 0;
};

struct SuperalgebraReport {
    bool relations_hold = true;
    std::vector<AlgebraFailure> failures;
};

// Checks {Q_I, Q_J} = 2 delta_IJ H with H symbolic (Clifford mode drops the
// H grading and expects 2 delta_IJ).
inline SuperalgebraReport verify_algebra(const std::vector<GradedMatrix>& mats,
                                         bool clifford_mode = false) {
    SuperalgebraReport rep;
    if (mats.empty()) return rep;
    int dim = mats[0].dim;
    for (const auto& m : mats)
        if (m.dim != dim) throw DomainError("matrices have mismatched dimensions");
    if (dim > 4096) throw CapacityError("algebra check capped at dimension 4096");

    // coef[r][c][h]: accumulated coefficient of H^h at entry (r, c).
    std::vector<std::array<int, 3>> coef((std::size_t)dim * dim);
    auto accumulate = [&](const GradedMatrix& a, const GradedMatrix& b) {
        for (const MatrixEntry& ea : a.entries)
            for (const MatrixEntry& eb : b.entries) {
                if (ea.col != eb.row) continue;
                int h = clifford_mode ? 0 : ea.hpow + eb.hpow;
                coef[(std::size_t)ea.row * dim + eb.col][h] += ea.sign * eb.sign;
            }
    };

    for (std::size_t i = 0; i < mats.size(); i++) {
        for (std::size_t j = i; j < mats.size(); j++) {
            std::fill(coef.begin(), coef.end(), std::array<int, 3>{0, 0, 0});
            accumulate(mats[i], mats[j]);
            accumulate(mats[j], mats[i]);
            int want_h = clifford_mode ? 0 : 1;
            for (int r = 0; r < dim; r++)
                for (int c = 0; c < dim; c++)
                    for (int h = 0; h < 3; h++) {
                        int expect = (i == j && r == c && h == want_h) ? 2 : 0;
                        int got = coef[(std::size_t)r * dim + c][h];
                        if (got != expect) {
                            rep.relations_hold = false;
                            rep.failures.push_back(
                                {(int)i + 1, (int)j + 1, r, c, h, got});
                        }
                    }
        }
    }
    return rep;
}

// trace( rho(Q_1) ... rho(Q_N) . diag(+1 on bosons, -1 on fermions) ),
// signs only (valise / Clifford mode).
inline int64_t supertrace(const std::vector<GradedMatrix>& mats) {
    if (mats.empty()) throw DomainError("supertrace of an empty list");
    int dim = mats[0].dim;
    int boson_dim = mats[0].boson_dim;
    for (const auto& m : mats)
        if (m.dim != dim || m.boson_dim != boson_dim)
            throw DomainError("matrices have mismatched dimensions");

    // Column-wise signed permutation form of each factor.
    std::vector<std::vector<std::pair<int, int>>> colmap(mats.size());
    for (std::size_t i = 0; i < mats.size(); i++) {
        colmap[i].assign(dim, {-1, 0});
        for (const MatrixEntry& e : mats[i].entries) {
            if (colmap[i][e.col].first != -1)
                throw DomainError("supertrace needs signed permutation matrices");
            colmap[i][e.col] = {e.row, e.sign};
        }
        for (int c = 0; c < dim; c++)
            if (colmap[i][c].first == -1)
                throw DomainError("supertrace needs signed permutation matrices");
    }

    int64_t trace = 0;
    for (int c = 0; c < dim; c++) {
        int r = c, s = 1;
        for (std::size_t i = mats.size(); i-- > 0;) {
            s *= colmap[i][r].second;
            r = colmap[i][r].first;
        }
        if (r == c) trace += s * (c < boson_dim ? 1 : -1);
    }
    return trace;
}

}  // namespace adinkra
