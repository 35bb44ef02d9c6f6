#pragma once

// Test-only oracles, deliberately independent of the library paths they
// cross-check: brute-force subspace enumeration, hypercube 4-cycles from
// raw bit flips, and plain integer matrix arithmetic.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "adinkra/chromotopology.hpp"
#include "adinkra/linear_code.hpp"

namespace testutil {

// Every linear code of length n, as sorted codeword sets, found by closing
// {trivial} under one-generator extensions.
inline std::vector<std::vector<uint32_t>> all_subspaces(int n) {
    std::set<std::vector<uint32_t>> seen;
    std::vector<std::vector<uint32_t>> queue;
    queue.push_back({0});
    seen.insert(queue[0]);
    for (std::size_t head = 0; head < queue.size(); head++) {
        std::vector<uint32_t> cur = queue[head];
        for (uint32_t g = 1; g < (uint32_t(1) << n); g++) {
            if (std::binary_search(cur.begin(), cur.end(), g)) continue;
            std::set<uint32_t> closure(cur.begin(), cur.end());
            for (uint32_t w : cur) closure.insert(w ^ g);
            std::vector<uint32_t> nxt(closure.begin(), closure.end());
            if (seen.insert(nxt).second) queue.push_back(nxt);
        }
    }
    return queue;
}

inline std::vector<adinkra::LinearCode> all_codes(int n) {
    std::vector<adinkra::LinearCode> out;
    for (const auto& words : all_subspaces(n)) out.push_back(adinkra::span(n, words));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<adinkra::LinearCode> doubly_even_codes(int n) {
    std::vector<adinkra::LinearCode> out;
    for (const auto& code : all_codes(n))
        if (adinkra::classify(code).is_doubly_even) out.push_back(code);
    return out;
}

// The 2-colored 4-cycles of I_c^n as edge-index sets, built from raw bit
// flips rather than the library's orbit walks.
inline std::vector<std::vector<std::size_t>> hypercube_cycles(const adinkra::Prechromotopology& cube) {
    int n = cube.n;
    std::map<std::array<int, 3>, std::size_t> index;
    for (std::size_t e = 0; e < cube.edges.size(); e++)
        index[{cube.edges[e].u, cube.edges[e].v, cube.edges[e].color}] = e;
    auto edge_index = [&](uint32_t a, uint32_t b, int color) {
        int u = (int)std::min(a, b), v = (int)std::max(a, b);
        return index.at({u, v, color});
    };

    std::vector<std::vector<std::size_t>> cycles;
    for (int i = 1; i <= n; i++) {
        for (int j = i + 1; j <= n; j++) {
            uint32_t ei = adinkra::Bitstring::unit(n, i);
            uint32_t ej = adinkra::Bitstring::unit(n, j);
            for (uint32_t v = 0; v < (uint32_t(1) << n); v++) {
                if ((v & ei) || (v & ej)) continue;
                cycles.push_back({edge_index(v, v ^ ei, i),
                                  edge_index(v ^ ei, v ^ ei ^ ej, j),
                                  edge_index(v ^ ei ^ ej, v ^ ej, i),
                                  edge_index(v ^ ej, v, j)});
            }
        }
    }
    return cycles;
}

// All 2-colored 4-cycles of a simple graph by scanning edge quadruples:
// four distinct edges, two colors twice each, every vertex met exactly
// twice, same-colored edges disjoint.  Quartic and proud of it.
inline std::vector<std::vector<std::size_t>> quad_scan_cycles(const adinkra::Prechromotopology& A) {
    const auto& E = A.edges;
    std::vector<std::vector<std::size_t>> cycles;
    for (std::size_t a = 0; a < E.size(); a++)
        for (std::size_t b = a + 1; b < E.size(); b++)
            for (std::size_t c = b + 1; c < E.size(); c++)
                for (std::size_t d = c + 1; d < E.size(); d++) {
                    std::array<std::size_t, 4> q{a, b, c, d};
                    std::map<int, int> color_count, vertex_count;
                    for (std::size_t e : q) {
                        color_count[E[e].color]++;
                        vertex_count[E[e].u]++;
                        vertex_count[E[e].v]++;
                    }
                    if (color_count.size() != 2) continue;
                    bool ok = true;
                    for (auto& [col, cnt] : color_count) ok &= (cnt == 2);
                    if (vertex_count.size() != 4) continue;
                    for (auto& [v, cnt] : vertex_count) ok &= (cnt == 2);
                    if (!ok) continue;
                    // Same-colored edges must not share a vertex.
                    for (std::size_t i = 0; i < 4 && ok; i++)
                        for (std::size_t j = i + 1; j < 4; j++) {
                            if (E[q[i]].color != E[q[j]].color) continue;
                            if (E[q[i]].u == E[q[j]].u || E[q[i]].u == E[q[j]].v ||
                                E[q[i]].v == E[q[j]].u || E[q[i]].v == E[q[j]].v)
                                ok = false;
                        }
                    if (ok) cycles.push_back({a, b, c, d});
                }
    return cycles;
}

// Parity of a dashing over an explicit cycle list; 1 = every cycle odd,
// 0 = every cycle even, -1 = mixed.
inline int census_parity(const std::vector<std::vector<std::size_t>>& cycles, uint32_t dash_mask) {
    int all_odd = 1, all_even = 1;
    for (const auto& cyc : cycles) {
        int par = 0;
        for (std::size_t e : cyc) par ^= (dash_mask >> e) & 1u;
        if (par) all_even = 0;
        else all_odd = 0;
    }
    if (all_odd) return 1;
    if (all_even) return 0;
    return -1;
}

// Plain signed integer matrices for representation cross-checks.
using IntMatrix = std::vector<std::vector<int>>;

inline IntMatrix int_matrix(int dim) { return IntMatrix(dim, std::vector<int>(dim, 0)); }

inline IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    int d = (int)a.size();
    IntMatrix c = int_matrix(d);
    for (int i = 0; i < d; i++)
        for (int k = 0; k < d; k++)
            if (a[i][k])
                for (int j = 0; j < d; j++) c[i][j] += a[i][k] * b[k][j];
    return c;
}

}  // namespace testutil
