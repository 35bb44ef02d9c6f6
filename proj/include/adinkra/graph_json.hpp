#pragma once

// Graph file schema, fields in fixed order:
//   { "n": int, "code_basis": [str], "vertices": [str],
//     "edges": [{"u": int, "v": int, "color": int}],
//     "ranks": [int]?, "dashes": [0|1]? }
// Vertices are canonical coset labels; edges may appear in any order but
// must form the canonical edge multiset, and "dashes" follows the file's
// own edge order.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "adinkra/dashing.hpp"
#include "adinkra/ranking.hpp"
#include "adinkra/susyrep.hpp"

namespace adinkra {

using ordered_json = nlohmann::ordered_json;

inline ordered_json graph_to_json(const Prechromotopology& A,
                                  const std::optional<Ranking>& ranks = std::nullopt,
                                  const std::optional<Dashing>& dashes = std::nullopt) {
    ordered_json j;
    j["n"] = A.n;
    j["code_basis"] = A.code.basis_strings();
    ordered_json verts = ordered_json::array();
    for (int v = 0; v < (int)A.vertex_count(); v++) verts.push_back(A.label_string(v));
    j["vertices"] = verts;
    ordered_json edges = ordered_json::array();
    for (const Edge& e : A.edges) {
        ordered_json je;
        je["u"] = e.u;
        je["v"] = e.v;
        je["color"] = e.color;
        edges.push_back(je);
    }
    j["edges"] = edges;
    if (ranks) j["ranks"] = ranks->h;
    if (dashes) {
        ordered_json d = ordered_json::array();
        for (std::size_t e = 0; e < dashes->values.size(); e++)
            d.push_back(dashes->values.get(e) ? 1 : 0);
        j["dashes"] = d;
    }
    return j;
}

struct LoadedGraph {
    Prechromotopology A;
    std::optional<Ranking> ranks;
    std::optional<Dashing> dashes;
};

inline LoadedGraph graph_from_json(const ordered_json& j) {
    if (!j.contains("n") || !j.contains("code_basis") || !j.contains("vertices") ||
        !j.contains("edges"))
        throw DomainError("graph json missing a required field");
    int n = j["n"].get<int>();
    std::vector<Bitstring> gens;
    for (const auto& s : j["code_basis"]) gens.push_back(Bitstring::parse(s.get<std::string>()));
    for (const Bitstring& g : gens)
        if (g.length != n) throw DomainError("code basis length != n");
    std::vector<uint32_t> vals;
    for (const Bitstring& g : gens) vals.push_back(g.value);

    LoadedGraph out{build_quotient(n, span(n, vals)), std::nullopt, std::nullopt};
    const Prechromotopology& A = out.A;

    if (j["vertices"].size() != A.vertex_count())
        throw DomainError("vertex list does not match the quotient");
    for (int v = 0; v < (int)A.vertex_count(); v++)
        if (j["vertices"][v].get<std::string>() != A.label_string(v))
            throw DomainError("vertices are not the canonical coset labels");

    // Match the file's edges against the canonical list, remembering the
    // permutation so "dashes" can be realigned.
    std::map<Edge, int> canon;
    for (std::size_t e = 0; e < A.edges.size(); e++) canon[A.edges[e]] = (int)e;
    if (j["edges"].size() != A.edges.size()) throw DomainError("edge list size mismatch");
    std::vector<int> perm(A.edges.size(), -1);
    std::vector<bool> taken(A.edges.size(), false);
    for (std::size_t e = 0; e < j["edges"].size(); e++) {
        const auto& je = j["edges"][e];
        Edge ed{je["u"].get<int>(), je["v"].get<int>(), je["color"].get<int>()};
        if (ed.u > ed.v) std::swap(ed.u, ed.v);
        auto it = canon.find(ed);
        if (it == canon.end() || taken[it->second])
            throw DomainError("edge list does not match the quotient");
        perm[e] = it->second;
        taken[it->second] = true;
    }

    if (j.contains("ranks")) {
        Ranking r;
        for (const auto& x : j["ranks"]) r.h.push_back(x.get<int>());
        if (!is_valid_ranking(A, r)) throw DomainError("ranks field is not a valid ranking");
        out.ranks = r;
    }
    if (j.contains("dashes")) {
        if (j["dashes"].size() != A.edges.size()) throw DomainError("dashes size mismatch");
        Dashing d{BitVec(A.edges.size())};
        for (std::size_t e = 0; e < j["dashes"].size(); e++) {
            int bit = j["dashes"][e].get<int>();
            if (bit != 0 && bit != 1) throw DomainError("dashes entries must be 0 or 1");
            if (bit) d.values.set((std::size_t)perm[e], true);
        }
        out.dashes = d;
    }
    return out;
}

inline ordered_json matrix_to_json(const GradedMatrix& m) {
    ordered_json j;
    j["dim"] = m.dim;
    ordered_json entries = ordered_json::array();
    for (const MatrixEntry& e : m.entries)
        entries.push_back(ordered_json::array({e.row, e.col, e.sign, e.hpow}));
    j["entries"] = entries;
    return j;
}

}  // namespace adinkra
