#pragma once

// Prechromotopologies as hypercube quotients: vertices are cosets of a code
// L inside Z_2^n, one involution q_i per color, loops and (distinct-color)
// parallel edges allowed.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "adinkra/errors.hpp"
#include "adinkra/linear_code.hpp"

namespace adinkra {

constexpr int kMaxQuotientBits = 20;  // vertex count cap: 2^(n-k) <= 2^20

struct Edge {
    int u = 0;
    int v = 0;      // u <= v; u == v is a loop
    int color = 0;  // 1-based
    bool operator==(const Edge& o) const { return u == o.u && v == o.v && color == o.color; }
    bool operator<(const Edge& o) const {
        if (color != o.color) return color < o.color;
        if (u != o.u) return u < o.u;
        return v < o.v;
    }
};

struct GraphClass {
    bool has_loop = false;
    bool has_double_edge = false;
    bool is_bipartite = false;
    bool is_chromotopology = false;
    bool is_adinkraizable = false;
};

class Prechromotopology {
  public:
    int n = 0;                            // number of colors
    LinearCode code;                      // the defining code L
    std::vector<uint32_t> vertex_labels;  // canonical coset reps, ascending
    std::vector<Edge> edges;              // sorted by (color, u, v)
    std::vector<std::vector<int>> q;      // q[color-1][vertex] -> vertex
    std::vector<std::vector<int>> edge_at;  // edge_at[color-1][vertex] -> edge index

    std::size_t vertex_count() const { return vertex_labels.size(); }
    std::size_t edge_count() const { return edges.size(); }

    int vertex_of_label(uint32_t label) const {
        auto it = std::lower_bound(vertex_labels.begin(), vertex_labels.end(), label);
        if (it == vertex_labels.end() || *it != label)
            throw DomainError("no vertex with that coset label");
        return (int)(it - vertex_labels.begin());
    }

    std::string label_string(int v) const { return Bitstring(n, vertex_labels[v]).to_string(); }
};

inline Prechromotopology build_quotient(int n, const LinearCode& code) {
    if (code.ambient_length() != n) throw DomainError("code ambient length != n");
    int k = code.dim();
    if (n - k > kMaxQuotientBits) throw CapacityError("quotient would exceed 2^20 vertices");

    Prechromotopology A;
    A.n = n;
    A.code = code;

    // Cosets by BFS from the zero coset; q_i(u) flips bit i of the label.
    std::set<uint32_t> seen{0};
    std::vector<uint32_t> order{0};
    for (std::size_t head = 0; head < order.size(); head++) {
        for (int i = 1; i <= n; i++) {
            uint32_t rep = code.coset_rep(order[head] ^ Bitstring::unit(n, i));
            if (seen.insert(rep).second) order.push_back(rep);
        }
    }
    if (order.size() != std::size_t(1) << (n - k))
        throw ConsistencyError("coset count != 2^(n-k)");

    A.vertex_labels.assign(seen.begin(), seen.end());

    A.q.assign(n, std::vector<int>(A.vertex_count()));
    A.edge_at.assign(n, std::vector<int>(A.vertex_count(), -1));
    for (int i = 1; i <= n; i++) {
        for (int u = 0; u < (int)A.vertex_count(); u++) {
            uint32_t rep = code.coset_rep(A.vertex_labels[u] ^ Bitstring::unit(n, i));
            A.q[i - 1][u] = A.vertex_of_label(rep);
        }
    }
    for (int i = 1; i <= n; i++) {
        for (int u = 0; u < (int)A.vertex_count(); u++) {
            int v = A.q[i - 1][u];
            if (v < u) continue;
            A.edge_at[i - 1][u] = (int)A.edges.size();
            A.edge_at[i - 1][v] = (int)A.edges.size();
            A.edges.push_back(Edge{u, v, i});
        }
    }
    return A;
}

// Bipartition classes via 2-coloring, or nullopt when an odd cycle (or a
// loop) exists.  Class 0 contains vertex 0, the zero coset.
inline std::optional<std::vector<int>> try_bipartition(const Prechromotopology& A) {
    std::vector<int> cls(A.vertex_count(), -1);
    std::queue<int> bfs;
    cls[0] = 0;
    bfs.push(0);
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        for (int i = 0; i < A.n; i++) {
            int v = A.q[i][u];
            if (cls[v] == -1) {
                cls[v] = cls[u] ^ 1;
                bfs.push(v);
            } else if (cls[v] == cls[u]) {
                return std::nullopt;
            }
        }
    }
    return cls;
}

inline std::vector<int> bipartition(const Prechromotopology& A) {
    auto cls = try_bipartition(A);
    if (!cls) throw DomainError("graph is not bipartite");
    return *cls;
}

// BFS distances from one vertex (loops and parallel edges are harmless).
inline std::vector<int> distances_from(const Prechromotopology& A, int src) {
    std::vector<int> d(A.vertex_count(), -1);
    std::queue<int> bfs;
    d[src] = 0;
    bfs.push(src);
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        for (int i = 0; i < A.n; i++) {
            int v = A.q[i][u];
            if (d[v] == -1) {
                d[v] = d[u] + 1;
                bfs.push(v);
            }
        }
    }
    return d;
}

inline std::vector<std::vector<int>> distance_matrix(const Prechromotopology& A) {
    std::vector<std::vector<int>> d;
    d.reserve(A.vertex_count());
    for (int v = 0; v < (int)A.vertex_count(); v++) d.push_back(distances_from(A, v));
    return d;
}

// Classifies both graph-theoretically (edge scan, 2-coloring) and
// code-theoretically (weight-1/2 words, evenness); the two views must agree.
inline GraphClass classify_graph(const Prechromotopology& A) {
    GraphClass g;
    std::vector<std::pair<int, int>> pairs;
    for (const Edge& e : A.edges) {
        if (e.u == e.v) g.has_loop = true;
        // A pair of same-endpoint loops counts as a (degenerate) double
        // edge: the two colors act identically, just as in the v != w case.
        pairs.push_back({e.u, e.v});
    }
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 1; i < pairs.size(); i++)
        if (pairs[i] == pairs[i - 1]) g.has_double_edge = true;
    g.is_bipartite = try_bipartition(A).has_value();

    CodeClass c = classify(A.code);
    if (g.has_loop != c.has_weight1)
        throw ConsistencyError("loop flag disagrees with weight-1 codeword test");
    if (g.has_double_edge != c.has_weight2)
        throw ConsistencyError("double-edge flag disagrees with weight-2 codeword test");
    if (g.is_bipartite != c.is_even)
        throw ConsistencyError("bipartiteness disagrees with even-code test");

    g.is_chromotopology = !g.has_loop && !g.has_double_edge && g.is_bipartite;
    g.is_adinkraizable = g.is_chromotopology && c.is_doubly_even;
    return g;
}

// An abstract edge-colored multigraph, for code recovery.
struct MultigraphInput {
    int n = 0;
    int vertex_count = 0;
    std::vector<Edge> edges;
};

struct RecoveredCode {
    int n = 0;
    LinearCode code;
    std::vector<uint32_t> labels;  // coset label per input vertex
};

// Recovers (n, L, labeling) from the structure alone: the stabilizer of a
// base vertex under the group generated by the q_i is the code.
inline RecoveredCode recover_code(const MultigraphInput& G) {
    if (G.n < 1 || G.vertex_count < 1) throw DomainError("empty multigraph");
    std::vector<std::vector<int>> q(G.n, std::vector<int>(G.vertex_count, -1));
    for (const Edge& e : G.edges) {
        if (e.color < 1 || e.color > G.n || e.u < 0 || e.v >= G.vertex_count || e.u > e.v)
            throw DomainError("malformed edge");
        auto& qi = q[e.color - 1];
        if (qi[e.u] != -1 || (e.u != e.v && qi[e.v] != -1))
            throw DomainError("not a prechromotopology: repeated color at a vertex");
        qi[e.u] = e.v;
        qi[e.v] = e.u;
    }
    for (int i = 0; i < G.n; i++)
        for (int v = 0; v < G.vertex_count; v++)
            if (q[i][v] == -1)
                throw DomainError("not a prechromotopology: missing color at a vertex");
    for (int i = 0; i < G.n; i++)
        for (int j = i + 1; j < G.n; j++)
            for (int v = 0; v < G.vertex_count; v++)
                if (q[i][q[j][v]] != q[j][q[i][v]])
                    throw DomainError("not a prechromotopology: involutions do not commute");

    // BFS from the base vertex: s(v) is a group word taking the base to v;
    // every edge closing a cycle contributes a stabilizer generator.
    std::vector<uint32_t> s(G.vertex_count);
    std::vector<bool> vis(G.vertex_count, false);
    std::vector<uint32_t> gens;
    std::queue<int> bfs;
    vis[0] = true;
    bfs.push(0);
    int reached = 1;
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        for (int i = 1; i <= G.n; i++) {
            int v = q[i - 1][u];
            uint32_t word = s[u] ^ Bitstring::unit(G.n, i);
            if (!vis[v]) {
                vis[v] = true;
                s[v] = word;
                reached++;
                bfs.push(v);
            } else {
                gens.push_back(word ^ s[v]);
            }
        }
    }
    if (reached != G.vertex_count)
        throw DomainError("not a prechromotopology: graph is disconnected");

    RecoveredCode out;
    out.n = G.n;
    out.code = span(G.n, gens);
    for (int v = 0; v < G.vertex_count; v++) out.labels.push_back(out.code.coset_rep(s[v]));

    // The labeling must reproduce the quotient exactly.
    Prechromotopology Q = build_quotient(G.n, out.code);
    if (Q.vertex_count() != (std::size_t)G.vertex_count)
        throw ConsistencyError("recovered quotient has wrong vertex count");
    for (int v = 0; v < G.vertex_count; v++)
        for (int i = 0; i < G.n; i++)
            if (Q.vertex_labels[Q.q[i][Q.vertex_of_label(out.labels[v])]] != out.labels[q[i][v]])
                throw ConsistencyError("recovered labeling does not match the quotient");
    return out;
}

struct DecompositionPieces {
    int color = 0;
    Prechromotopology low;   // vertices with bit i = 0, bit i deleted
    Prechromotopology high;  // vertices with bit i = 1, bit i deleted
    std::vector<int> inc_low;   // piece vertex -> vertex of A
    std::vector<int> inc_high;
};

inline uint32_t delete_bit(uint32_t v, int n, int i) {
    uint32_t low_mask = (uint32_t(1) << (n - i)) - 1;
    return ((v >> 1) & ~low_mask) | (v & low_mask);
}

inline uint32_t insert_bit(uint32_t v, int n_out, int i, int bit) {
    uint32_t low_mask = (uint32_t(1) << (n_out - i)) - 1;
    return ((v & ~low_mask) << 1) | (uint32_t(bit) << (n_out - i)) | (v & low_mask);
}

// Splits A by bit i; legal exactly when every codeword has bit i = 0.
inline DecompositionPieces decompose(const Prechromotopology& A, int color) {
    if (color < 1 || color > A.n) throw DomainError("color out of range");
    if (A.n < 2) throw DomainError("nothing left after removing the only color");
    for (uint32_t w : A.code.basis())
        if ((w >> (A.n - color)) & 1u)
            throw DomainError("color does not decompose: a codeword has that bit set");

    std::vector<uint32_t> piece_basis;
    for (uint32_t w : A.code.basis()) piece_basis.push_back(delete_bit(w, A.n, color));
    LinearCode piece_code = span(A.n - 1, piece_basis);
    if (piece_code.dim() != A.code.dim())
        throw ConsistencyError("bit deletion changed the code dimension");

    DecompositionPieces out;
    out.color = color;
    out.low = build_quotient(A.n - 1, piece_code);
    out.high = out.low;
    for (int p = 0; p < (int)out.low.vertex_count(); p++) {
        uint32_t label = out.low.vertex_labels[p];
        out.inc_low.push_back(A.vertex_of_label(insert_bit(label, A.n, color, 0)));
        out.inc_high.push_back(A.vertex_of_label(insert_bit(label, A.n, color, 1)));
    }
    return out;
}

}  // namespace adinkra
