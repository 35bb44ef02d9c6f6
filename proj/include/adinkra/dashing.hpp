#pragma once

// Odd/even dashings as a GF(2) linear system.  One constraint row per
// 2-colored closed walk orbit; an odd dashing is a solution of M d = 1 and
// the even dashings are the nullspace of M.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "adinkra/chromotopology.hpp"
#include "adinkra/gf2.hpp"

namespace adinkra {

struct Dashing {
    BitVec values;  // indexed by the host's edge list; 1 = dashed

    bool operator==(const Dashing& o) const { return values == o.values; }
    bool operator<(const Dashing& o) const { return values < o.values; }
};

enum class Parity { Even, Odd };

// For each unordered color pair {i,j} and each orbit of <q_i, q_j>, the row
// supported on the edges of the closed walk v -> q_i v -> q_j q_i v ->
// q_i q_j q_i v -> v, edges traversed twice cancelling.  For simple graphs
// this is exactly one row per 2-colored 4-cycle; loops yield degenerate
// walks whose connecting edges cancel.
inline BitMatrix constraint_system(const Prechromotopology& A) {
    GraphClass g = classify_graph(A);
    if (g.has_double_edge)
        throw DomainError("double edge admits no odd dashing; constraint system refused");

    BitMatrix m((std::size_t)A.edge_count());
    std::set<BitVec> rows;
    std::vector<bool> visited;
    for (int i = 1; i <= A.n; i++) {
        for (int j = i + 1; j <= A.n; j++) {
            visited.assign(A.vertex_count(), false);
            for (int v0 = 0; v0 < (int)A.vertex_count(); v0++) {
                if (visited[v0]) continue;
                BitVec row((std::size_t)A.edge_count());
                int v = v0;
                const int walk[4] = {i, j, i, j};
                for (int step = 0; step < 4; step++) {
                    visited[v] = true;
                    int c = walk[step];
                    row.flip((std::size_t)A.edge_at[c - 1][v]);
                    v = A.q[c - 1][v];
                }
                if (v != v0) throw ConsistencyError("2-colored walk did not close");
                rows.insert(row);
            }
        }
    }
    for (const BitVec& row : rows) m.add_row(row);
    return m;
}

struct DashingSpace {
    BitMatrix constraint_matrix;
    std::vector<BitVec> even_basis;       // nullspace basis
    std::optional<BitVec> odd_particular; // one odd dashing, when solvable
};

inline DashingSpace dashing_space(const Prechromotopology& A) {
    DashingSpace s;
    s.constraint_matrix = constraint_system(A);
    s.even_basis = s.constraint_matrix.nullspace();
    BitVec ones(s.constraint_matrix.rows());
    for (std::size_t r = 0; r < s.constraint_matrix.rows(); r++) ones.set(r, true);
    s.odd_particular = s.constraint_matrix.solve(ones);
    return s;
}

inline std::vector<BitVec> even_space(const Prechromotopology& A) {
    DashingSpace s = dashing_space(A);
    GraphClass g = classify_graph(A);
    if (g.is_adinkraizable) {
        int k = A.code.dim();
        std::size_t expected = (std::size_t(1) << (A.n - k)) + k - 1;
        if (s.even_basis.size() != expected)
            throw ConsistencyError("even-space dimension != 2^(n-k)+k-1 on adinkraizable input");
    }
    return s.even_basis;
}

// Present exactly when L is a dashing code; cross-checked both ways.
inline std::optional<Dashing> find_odd_dashing(const Prechromotopology& A) {
    bool dashable = classify(A.code).is_dashing_code;
    GraphClass g = classify_graph(A);
    if (g.has_double_edge) {
        if (dashable) throw ConsistencyError("double edge on a dashing-code quotient");
        return std::nullopt;
    }
    DashingSpace s = dashing_space(A);
    if (s.odd_particular.has_value() != dashable)
        throw ConsistencyError("odd-dashing solvability disagrees with dashing-code test");
    if (!s.odd_particular) return std::nullopt;
    return Dashing{*s.odd_particular};
}

inline bool validate_dashing(const Prechromotopology& A, const Dashing& d, Parity parity) {
    if (d.values.size() != A.edge_count()) throw DomainError("dashing index set mismatch");
    BitMatrix m = constraint_system(A);
    for (std::size_t r = 0; r < m.rows(); r++) {
        int par = 0;
        const BitVec& row = m.row(r);
        for (std::size_t e = 0; e < d.values.size(); e++)
            if (row.get(e) && d.values.get(e)) par ^= 1;
        if (par != (parity == Parity::Odd ? 1 : 0)) return false;
    }
    return true;
}

// |e(A)| = |o(A)| = 2^(2^(n-k)+k-1), as a big integer.
inline BigUint count_dashings(int n, int k) {
    if (k < 0 || k > n) throw DomainError("need 0 <= k <= n");
    if (n - k > kMaxQuotientBits) throw CapacityError("exponent exceeds the 2^20 vertex cap");
    return BigUint::pow2((std::size_t(1) << (n - k)) + k - 1);
}

// Flips every non-loop edge at v (a loop meets v twice, so it cancels).
inline Dashing vertex_switch(const Prechromotopology& A, const Dashing& d, int v) {
    if (d.values.size() != A.edge_count()) throw DomainError("dashing index set mismatch");
    Dashing out = d;
    for (int i = 0; i < A.n; i++)
        if (A.q[i][v] != v) out.values.flip((std::size_t)A.edge_at[i][v]);
    return out;
}

inline BitVec switch_vector(const Prechromotopology& A, int v) {
    BitVec s((std::size_t)A.edge_count());
    for (int i = 0; i < A.n; i++)
        if (A.q[i][v] != v) s.flip((std::size_t)A.edge_at[i][v]);
    return s;
}

// RREF basis of the span of all vertex-switch vectors.
inline std::vector<BitVec> switching_subspace(const Prechromotopology& A) {
    GraphClass g = classify_graph(A);
    if (g.has_loop || g.has_double_edge) throw DomainError("switching subspace needs a simple graph");
    BitMatrix m((std::size_t)A.edge_count());
    for (int v = 0; v < (int)A.vertex_count(); v++) m.add_row(switch_vector(A, v));
    std::vector<std::size_t> pivots = m.rref();
    std::vector<BitVec> basis;
    for (std::size_t r = 0; r < pivots.size(); r++) basis.push_back(m.row(r));
    if (basis.size() != A.vertex_count() - 1)
        throw ConsistencyError("switching subspace dimension != |V|-1 on a connected simple graph");
    return basis;
}

struct LscReport {
    BigUint count;
    std::vector<Dashing> representatives;  // lexicographically smallest per orbit; empty past caps
};

// Orbits of odd dashings under vertex switching.  The count is
// 2^(dim even - dim switching); representatives are materialized by
// cosetting when |E| <= 64.
inline LscReport lsc_count(const Prechromotopology& A) {
    GraphClass g = classify_graph(A);
    if (!g.is_adinkraizable) throw DomainError("LSCs are defined for adinkraizable input");
    DashingSpace s = dashing_space(A);
    std::vector<BitVec> sw = switching_subspace(A);
    if (s.even_basis.size() < sw.size())
        throw ConsistencyError("switching subspace exceeds the even space");
    std::size_t lsc_dim = s.even_basis.size() - sw.size();

    LscReport out{BigUint::pow2(lsc_dim), {}};
    if (A.edge_count() > 64 || !s.odd_particular) return out;

    // Extend the switching basis to the even space; the extension vectors
    // enumerate coset representatives.
    BitMatrix acc((std::size_t)A.edge_count());
    for (const BitVec& b : sw) acc.add_row(b);
    std::size_t base_rank = acc.rank();
    std::vector<BitVec> ext;
    for (const BitVec& b : s.even_basis) {
        BitMatrix trial = acc;
        trial.add_row(b);
        if (trial.rank() > base_rank) {
            acc.add_row(b);
            base_rank++;
            ext.push_back(b);
        }
    }
    if (ext.size() != lsc_dim) throw ConsistencyError("even/switching basis extension failed");

    // Pivot rows of the switching subspace, used to reduce each orbit
    // representative to its lexicographic minimum.
    BitMatrix swm((std::size_t)A.edge_count());
    for (const BitVec& b : sw) swm.add_row(b);
    std::vector<std::size_t> piv = swm.rref();

    for (std::size_t mask = 0; mask < (std::size_t(1) << ext.size()); mask++) {
        BitVec d = *s.odd_particular;
        for (std::size_t i = 0; i < ext.size(); i++)
            if ((mask >> i) & 1) d.xor_with(ext[i]);
        for (std::size_t r = 0; r < piv.size(); r++)
            if (d.get(piv[r])) d.xor_with(swm.row(r));
        out.representatives.push_back(Dashing{d});
    }
    std::sort(out.representatives.begin(), out.representatives.end());
    return out;
}

struct ChainComplex {
    std::size_t c0 = 0, c1 = 0, c2 = 0;
    BitMatrix d1;  // |V| x |E|
    BitMatrix d2;  // |E| x |C2|
    int betti0 = 0, betti1 = 0;
};

// The 2-complex with one 2-cell per 2-colored 4-cycle, over Z_2.
inline ChainComplex homology(const Prechromotopology& A) {
    GraphClass g = classify_graph(A);
    if (g.has_loop || g.has_double_edge)
        throw DomainError("homology is implemented for simple graphs only");

    ChainComplex x;
    x.c0 = A.vertex_count();
    x.c1 = A.edge_count();

    x.d1 = BitMatrix(x.c1);
    for (std::size_t v = 0; v < x.c0; v++) {
        BitVec row(x.c1);
        for (std::size_t e = 0; e < A.edges.size(); e++)
            if (A.edges[e].u == (int)v || A.edges[e].v == (int)v) row.flip(e);
        x.d1.add_row(row);
    }

    // Cycle columns, transposed into rows first for convenience.
    std::vector<BitVec> cycles;
    std::vector<bool> visited;
    for (int i = 1; i <= A.n; i++) {
        for (int j = i + 1; j <= A.n; j++) {
            visited.assign(A.vertex_count(), false);
            for (int v0 = 0; v0 < (int)A.vertex_count(); v0++) {
                if (visited[v0]) continue;
                BitVec cyc(x.c1);
                int v = v0;
                const int walk[4] = {i, j, i, j};
                for (int step = 0; step < 4; step++) {
                    visited[v] = true;
                    cyc.flip((std::size_t)A.edge_at[walk[step] - 1][v]);
                    v = A.q[walk[step] - 1][v];
                }
                cycles.push_back(cyc);
            }
        }
    }
    x.c2 = cycles.size();
    x.d2 = BitMatrix(x.c2);
    for (std::size_t e = 0; e < x.c1; e++) {
        BitVec row(x.c2);
        for (std::size_t c = 0; c < x.c2; c++)
            if (cycles[c].get(e)) row.set(c, true);
        x.d2.add_row(row);
    }

    // d1 . d2 = 0: each cycle's four endpoints cancel in pairs.
    for (const BitVec& cyc : cycles) {
        std::vector<int> deg(x.c0, 0);
        for (std::size_t e = 0; e < x.c1; e++)
            if (cyc.get(e)) {
                deg[A.edges[e].u] ^= 1;
                deg[A.edges[e].v] ^= 1;
            }
        for (int dv : deg)
            if (dv) throw ConsistencyError("boundary of a 2-cell is not a cycle");
    }

    std::size_t r1 = x.d1.rank();
    std::size_t r2 = x.d2.rank();
    x.betti0 = (int)(x.c0 - r1);
    x.betti1 = (int)(x.c1 - r1 - r2);

    if (g.is_adinkraizable) {
        if (x.betti0 != 1 || x.betti1 != A.code.dim())
            throw ConsistencyError("Betti numbers disagree with (1, k) on adinkraizable input");
    }
    return x;
}

}  // namespace adinkra
