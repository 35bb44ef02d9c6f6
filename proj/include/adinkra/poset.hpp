#pragma once

// Finite posets given by cover relations, order-ideal lattices, and the
// meet/join/distributivity checks.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "adinkra/errors.hpp"
#include "adinkra/gf2.hpp"

namespace adinkra {

struct Poset {
    int size = 0;
    std::vector<std::pair<int, int>> covers;  // (lower, upper)
    std::vector<int> rank;                    // optional; empty if unranked
};

namespace detail {

// down[x] = { y : y <= x } as bitsets, by sweeping a topological order.
inline std::vector<BitVec> down_sets(const Poset& p) {
    std::vector<std::vector<int>> lowers(p.size);
    std::vector<int> indeg(p.size, 0);
    for (auto [lo, hi] : p.covers) {
        if (lo < 0 || hi < 0 || lo >= p.size || hi >= p.size)
            throw DomainError("cover index out of range");
        lowers[hi].push_back(lo);
        indeg[hi]++;
    }
    std::vector<int> order;
    std::vector<int> deg = indeg;
    for (int v = 0; v < p.size; v++)
        if (deg[v] == 0) order.push_back(v);
    for (std::size_t head = 0; head < order.size(); head++) {
        for (auto [lo, hi] : p.covers)
            if (lo == order[head] && --deg[hi] == 0) order.push_back(hi);
    }
    if ((int)order.size() != p.size) throw DomainError("covers contain a cycle");

    std::vector<BitVec> down(p.size, BitVec((std::size_t)p.size));
    for (int v : order) {
        down[v].set((std::size_t)v, true);
        for (int lo : lowers[v])
            for (std::size_t b = 0; b < down[v].size(); b++)
                if (down[lo].get(b)) down[v].set(b, true);
    }
    return down;
}

}  // namespace detail

struct LatticeReport {
    bool is_lattice = false;
    bool is_distributive = false;
};

// Pairwise meet/join existence, then the distributive laws over all triples
// with early exit.
inline LatticeReport lattice_checks(const Poset& p) {
    if (p.size > 10000) throw CapacityError("lattice checks capped at 10^4 elements");
    LatticeReport rep;
    if (p.size == 0) return rep;

    std::vector<BitVec> down = detail::down_sets(p);
    std::vector<BitVec> up(p.size, BitVec((std::size_t)p.size));
    for (int x = 0; x < p.size; x++)
        for (int y = 0; y < p.size; y++)
            if (down[y].get((std::size_t)x)) up[x].set((std::size_t)y, true);

    std::vector<std::size_t> dsize(p.size), usize(p.size);
    for (int x = 0; x < p.size; x++) dsize[x] = down[x].count(), usize[x] = up[x].count();

    auto bound = [&](const std::vector<BitVec>& sets, const std::vector<std::size_t>& sz,
                     int x, int y) -> int {
        // The unique maximal element of sets[x] & sets[y], or -1.
        BitVec common = sets[x];
        for (std::size_t b = 0; b < common.size(); b++)
            if (!sets[y].get(b)) common.set(b, false);
        int best = -1;
        std::size_t best_sz = 0;
        for (std::size_t b = 0; b < common.size(); b++)
            if (common.get(b) && sz[b] >= best_sz) best = (int)b, best_sz = sz[b];
        if (best < 0) return -1;
        return sets[best] == common ? best : -1;
    };

    std::vector<int> meet((std::size_t)p.size * p.size), join((std::size_t)p.size * p.size);
    for (int x = 0; x < p.size; x++) {
        for (int y = x; y < p.size; y++) {
            int m = bound(down, dsize, x, y);
            int j = bound(up, usize, x, y);
            if (m < 0 || j < 0) return rep;  // not a lattice
            meet[(std::size_t)x * p.size + y] = meet[(std::size_t)y * p.size + x] = m;
            join[(std::size_t)x * p.size + y] = join[(std::size_t)y * p.size + x] = j;
        }
    }
    rep.is_lattice = true;

    auto mt = [&](int a, int b) { return meet[(std::size_t)a * p.size + b]; };
    auto jn = [&](int a, int b) { return join[(std::size_t)a * p.size + b]; };
    for (int x = 0; x < p.size; x++)
        for (int y = 0; y < p.size; y++)
            for (int z = 0; z < p.size; z++) {
                if (jn(x, mt(y, z)) != mt(jn(x, y), jn(x, z))) return rep;
                if (mt(x, jn(y, z)) != jn(mt(x, y), mt(x, z))) return rep;
            }
    rep.is_distributive = true;
    return rep;
}

struct IdealLattice {
    Poset poset;
    std::vector<uint64_t> ideals;  // element masks, aligned with poset ids
};

// J(P): all order ideals ordered by inclusion, covers = single additions.
inline IdealLattice order_ideal_lattice(const Poset& p) {
    if (p.size > 64) throw CapacityError("order ideals use 64-bit element masks");
    std::vector<uint64_t> below(p.size, 0);  // direct lower covers
    for (auto [lo, hi] : p.covers) below[hi] |= uint64_t(1) << lo;

    std::map<uint64_t, int> id;
    std::vector<uint64_t> ideals;
    ideals.push_back(0);
    id[0] = 0;
    IdealLattice out;
    for (std::size_t head = 0; head < ideals.size(); head++) {
        uint64_t cur = ideals[head];
        for (int e = 0; e < p.size; e++) {
            if ((cur >> e) & 1) continue;
            if ((below[e] & cur) != below[e]) continue;  // not addable yet
            uint64_t nxt = cur | (uint64_t(1) << e);
            auto [it, fresh] = id.emplace(nxt, (int)ideals.size());
            if (fresh) {
                ideals.push_back(nxt);
                if (ideals.size() > 1000000) throw CapacityError("more than 10^6 order ideals");
            }
            out.poset.covers.push_back({(int)head, it->second});
        }
    }
    // Renumber canonically: by size, then by mask.
    std::vector<int> perm(ideals.size());
    std::vector<int> order_ix(ideals.size());
    for (std::size_t i = 0; i < ideals.size(); i++) order_ix[i] = (int)i;
    std::sort(order_ix.begin(), order_ix.end(), [&](int a, int b) {
        int ca = std::popcount(ideals[a]), cb = std::popcount(ideals[b]);
        if (ca != cb) return ca < cb;
        return ideals[a] < ideals[b];
    });
    for (std::size_t pos = 0; pos < order_ix.size(); pos++) perm[order_ix[pos]] = (int)pos;

    out.poset.size = (int)ideals.size();
    out.ideals.resize(ideals.size());
    out.poset.rank.resize(ideals.size());
    for (std::size_t i = 0; i < ideals.size(); i++) {
        out.ideals[perm[i]] = ideals[i];
        out.poset.rank[perm[i]] = std::popcount(ideals[i]);
    }
    for (auto& [lo, hi] : out.poset.covers) lo = perm[lo], hi = perm[hi];
    std::sort(out.poset.covers.begin(), out.poset.covers.end());
    out.poset.covers.erase(std::unique(out.poset.covers.begin(), out.poset.covers.end()),
                           out.poset.covers.end());
    return out;
}

}  // namespace adinkra
