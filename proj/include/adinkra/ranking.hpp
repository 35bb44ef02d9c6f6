#pragma once

// Rank functions on bipartite prechromotopologies: Hanging Gardens, vertex
// flips, the rank-family enumerators (flip-closure oracle and the layered
// sink-pair algorithm), elevation posets, and the rank family poset.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <thread>
#include <vector>

#include "adinkra/chromotopology.hpp"
#include "adinkra/poset.hpp"

namespace adinkra {

struct Ranking {
    std::vector<int> h;  // per vertex, normalized so min = 0

    bool operator==(const Ranking& o) const { return h == o.h; }
    bool operator<(const Ranking& o) const { return h < o.h; }
};

inline void normalize(Ranking& r) {
    int m = *std::min_element(r.h.begin(), r.h.end());
    for (int& x : r.h) x -= m;
}

inline bool is_valid_ranking(const Prechromotopology& A, const Ranking& r) {
    if (r.h.size() != A.vertex_count()) return false;
    for (const Edge& e : A.edges)
        if (std::abs(r.h[e.u] - r.h[e.v]) != 1) return false;
    return *std::min_element(r.h.begin(), r.h.end()) == 0;
}

inline int height(const Ranking& r) { return *std::max_element(r.h.begin(), r.h.end()); }

inline bool is_sink(const Prechromotopology& A, const Ranking& r, int v) {
    for (int i = 0; i < A.n; i++)
        if (r.h[A.q[i][v]] != r.h[v] - 1) return false;
    return true;
}

inline bool is_source(const Prechromotopology& A, const Ranking& r, int v) {
    for (int i = 0; i < A.n; i++)
        if (r.h[A.q[i][v]] != r.h[v] + 1) return false;
    return true;
}

inline std::vector<int> sinks_of(const Prechromotopology& A, const Ranking& r) {
    std::vector<int> s;
    for (int v = 0; v < (int)A.vertex_count(); v++)
        if (is_sink(A, r, v)) s.push_back(v);
    return s;
}

// The two height-2 rankings across the bipartition; the class of the zero
// coset sits at rank 0 in the first result.
inline std::pair<Ranking, Ranking> valises(const Prechromotopology& A) {
    std::vector<int> cls = bipartition(A);
    Ranking a, b;
    a.h.resize(A.vertex_count());
    b.h.resize(A.vertex_count());
    for (std::size_t v = 0; v < A.vertex_count(); v++) {
        a.h[v] = cls[v];
        b.h[v] = cls[v] ^ 1;
    }
    return {a, b};
}

struct SinkSpec {
    std::vector<int> sinks;
    std::vector<int> ranks;  // aligned with sinks
};

// h(v) = max over sinks of (h_S(s) - D(v, s)), then normalized; validated
// against both theorem clauses and the exact-sink-set postcondition.
inline Ranking hanging_gardens(const Prechromotopology& A, const SinkSpec& spec) {
    if (spec.sinks.empty() || spec.sinks.size() != spec.ranks.size())
        throw DomainError("sink spec must pair each sink with a rank");
    std::vector<int> cls = bipartition(A);

    int parity_key = (spec.ranks[0] + cls[spec.sinks[0]]) & 1;
    for (std::size_t i = 0; i < spec.sinks.size(); i++)
        if (((spec.ranks[i] + cls[spec.sinks[i]]) & 1) != parity_key)
            throw DomainError("sink ranks violate the parity clause");

    std::vector<std::vector<int>> dist;
    for (int s : spec.sinks) dist.push_back(distances_from(A, s));
    for (std::size_t i = 0; i < spec.sinks.size(); i++)
        for (std::size_t j = i + 1; j < spec.sinks.size(); j++) {
            if (spec.sinks[i] == spec.sinks[j]) throw DomainError("duplicate sink");
            if (dist[i][spec.sinks[j]] < std::abs(spec.ranks[i] - spec.ranks[j]))
                throw DomainError("sink ranks violate the distance clause");
        }

    Ranking r;
    r.h.resize(A.vertex_count());
    for (std::size_t v = 0; v < A.vertex_count(); v++) {
        int best = spec.ranks[0] - dist[0][v];
        for (std::size_t i = 1; i < spec.sinks.size(); i++)
            best = std::max(best, spec.ranks[i] - dist[i][v]);
        r.h[v] = best;
    }
    int shift = -*std::min_element(r.h.begin(), r.h.end());
    normalize(r);

    if (!is_valid_ranking(A, r)) throw DomainError("sink spec does not hang to a ranking");
    std::vector<int> got = sinks_of(A, r);
    std::vector<int> want = spec.sinks;
    std::sort(want.begin(), want.end());
    if (got != want) throw DomainError("computed sink set differs from the requested sinks");
    for (std::size_t i = 0; i < spec.sinks.size(); i++)
        if (r.h[spec.sinks[i]] != spec.ranks[i] + shift)
            throw ConsistencyError("sink ranks shifted non-uniformly");
    return r;
}

enum class HookMode { Hooked, Anchored };

// A^v hangs from its single sink v; A_v is its global rank reversal.
inline Ranking hook(const Prechromotopology& A, int v, HookMode mode) {
    Ranking r = hanging_gardens(A, SinkSpec{{v}, {0}});
    if (mode == HookMode::Anchored) {
        int top = height(r);
        for (int& x : r.h) x = top - x;
    }
    return r;
}

enum class FlipDir { Lower, Raise };

inline Ranking vertex_flip(const Prechromotopology& A, const Ranking& r, int v, FlipDir dir) {
    if (dir == FlipDir::Lower && !is_sink(A, r, v))
        throw DomainError("can only lower a sink");
    if (dir == FlipDir::Raise && !is_source(A, r, v))
        throw DomainError("can only raise a source");
    Ranking out = r;
    out.h[v] += (dir == FlipDir::Lower) ? -2 : 2;
    normalize(out);
    return out;
}

// Flip-closure of a valise; this is R(A).
inline std::vector<Ranking> enumerate_rankings_oracle(const Prechromotopology& A) {
    if (A.vertex_count() > 16) throw CapacityError("oracle enumeration capped at 16 vertices");
    std::set<Ranking> seen;
    std::vector<Ranking> queue{valises(A).first};
    seen.insert(queue[0]);
    for (std::size_t head = 0; head < queue.size(); head++) {
        Ranking cur = queue[head];
        for (int v = 0; v < (int)A.vertex_count(); v++) {
            if (is_sink(A, cur, v)) {
                Ranking nxt = vertex_flip(A, cur, v, FlipDir::Lower);
                if (seen.insert(nxt).second) queue.push_back(nxt);
            }
            if (is_source(A, cur, v)) {
                Ranking nxt = vertex_flip(A, cur, v, FlipDir::Raise);
                if (seen.insert(nxt).second) queue.push_back(nxt);
            }
        }
    }
    return std::vector<Ranking>(seen.begin(), seen.end());
}

namespace detail {

// A ranking of I_c^m held as its Hanging-Gardens data: sink vertices and
// their (normalized) ranks.
struct SinkRanking {
    std::vector<uint32_t> sinks;
    std::vector<int16_t> ranks;

    int eval(uint32_t v, const std::vector<std::vector<int>>& dist) const {
        int best = ranks[0] - dist[sinks[0]][v];
        for (std::size_t i = 1; i < sinks.size(); i++)
            best = std::max(best, ranks[i] - dist[sinks[i]][v]);
        return best;
    }
};

// One layer step: combine rankings (a, b) of I_c^{m-1} under offset c into
// a ranking of I_c^m whenever every label with a sink endpoint has
// |h_a - (h_b + c)| = 1.  Both feasible offsets at the zero label are
// tried; each accepted triple is a distinct ranking of the next cube.
inline bool try_combine(const SinkRanking& a, const SinkRanking& b, int c,
                        const std::vector<std::vector<int>>& dist, SinkRanking* out) {
    for (uint32_t s : a.sinks)
        if (std::abs(a.eval(s, dist) - (b.eval(s, dist) + c)) != 1) return false;
    for (uint32_t s : b.sinks)
        if (std::abs(a.eval(s, dist) - (b.eval(s, dist) + c)) != 1) return false;
    if (!out) return true;

    out->sinks.clear();
    out->ranks.clear();
    int shift = std::min(0, c);
    for (std::size_t i = 0; i < a.sinks.size(); i++) {
        uint32_t s = a.sinks[i];
        if (b.eval(s, dist) + c == a.ranks[i] - 1) {
            out->sinks.push_back(s << 1);
            out->ranks.push_back((int16_t)(a.ranks[i] - shift));
        }
    }
    for (std::size_t i = 0; i < b.sinks.size(); i++) {
        uint32_t s = b.sinks[i];
        if (a.eval(s, dist) == b.ranks[i] + c - 1) {
            out->sinks.push_back((s << 1) | 1);
            out->ranks.push_back((int16_t)(b.ranks[i] + c - shift));
        }
    }
    return true;
}

}  // namespace detail

struct FastEnumerationResult {
    uint64_t count = 0;
    std::vector<Ranking> rankings;  // materialized only when requested
};

// Builds R(I_c^n) level by level: each ranking of I_c^m decomposes along
// color m into an ordered pair from R(I_c^{m-1}) plus an offset, and the
// pair check only needs the sinks.  Materializing the final level is
// optional; the count alone never stores it.
inline FastEnumerationResult enumerate_rankings_fast(int n, bool materialize = false,
                                                     int jobs = 1) {
    if (n < 1) throw DomainError("need n >= 1");
    if (n > 6) throw CapacityError("rank enumeration is not attempted past n = 6");
    if (jobs < 1) jobs = 1;

    using detail::SinkRanking;
    std::vector<SinkRanking> level;
    level.push_back(SinkRanking{{1}, {1}});  // h = (0, 1)
    level.push_back(SinkRanking{{0}, {1}});  // h = (1, 0)

    std::vector<std::vector<int>> dist;
    for (int m = 2; m <= n; m++) {
        Prechromotopology cube = build_quotient(m - 1, span(m - 1, {}));
        dist = distance_matrix(cube);

        bool last = (m == n);
        std::vector<SinkRanking> next;
        uint64_t count = 0;

        auto sweep = [&](std::size_t lo, std::size_t hi, std::vector<SinkRanking>* sink_out,
                         uint64_t* count_out) {
            SinkRanking combined;
            for (std::size_t ia = lo; ia < hi; ia++) {
                const SinkRanking& a = level[ia];
                int ha0 = a.eval(0, dist);
                for (const SinkRanking& b : level) {
                    int hb0 = b.eval(0, dist);
                    for (int c : {ha0 - hb0 + 1, ha0 - hb0 - 1}) {
                        SinkRanking* slot = sink_out ? &combined : nullptr;
                        if (detail::try_combine(a, b, c, dist, slot)) {
                            (*count_out)++;
                            if (sink_out) sink_out->push_back(combined);
                        }
                    }
                }
            }
        };

        bool keep = !last || materialize;
        if (jobs == 1 || level.size() < 64) {
            sweep(0, level.size(), keep ? &next : nullptr, &count);
        } else {
            std::vector<std::vector<SinkRanking>> parts(jobs);
            std::vector<uint64_t> counts(jobs, 0);
            std::vector<std::thread> workers;
            std::size_t chunk = (level.size() + jobs - 1) / jobs;
            for (int t = 0; t < jobs; t++) {
                std::size_t lo = std::min(level.size(), t * chunk);
                std::size_t hi = std::min(level.size(), lo + chunk);
                workers.emplace_back(sweep, lo, hi, keep ? &parts[t] : nullptr, &counts[t]);
            }
            for (auto& w : workers) w.join();
            for (int t = 0; t < jobs; t++) {
                count += counts[t];
                for (auto& s : parts[t]) next.push_back(std::move(s));
            }
        }

        if (last) {
            FastEnumerationResult res;
            res.count = count;
            if (materialize) {
                Prechromotopology full = build_quotient(n, span(n, {}));
                std::vector<std::vector<int>> full_dist = distance_matrix(full);
                for (const SinkRanking& s : next) {
                    Ranking r;
                    r.h.resize(full.vertex_count());
                    for (std::size_t v = 0; v < full.vertex_count(); v++)
                        r.h[v] = s.eval((uint32_t)v, full_dist);
                    res.rankings.push_back(std::move(r));
                }
            }
            return res;
        }
        level = std::move(next);
    }

    // n == 1: the two base rankings.
    FastEnumerationResult res;
    res.count = 2;
    if (materialize) {
        res.rankings.push_back(Ranking{{0, 1}});
        res.rankings.push_back(Ranking{{1, 0}});
    }
    return res;
}

struct ElevationPoset {
    Poset poset;
    std::vector<std::pair<int, int>> elements;  // (vertex w, elevation h)
};

// E_v(A): pairs (w, h) with w != v, 1 <= h <= D(w, v); covers couple
// adjacent vertices at consecutive distances from v.
inline ElevationPoset elevation_poset(const Prechromotopology& A, int v) {
    std::vector<int> cls = bipartition(A);
    std::vector<int> dist = distances_from(A, v);

    ElevationPoset out;
    std::map<std::pair<int, int>, int> id;
    for (int w = 0; w < (int)A.vertex_count(); w++) {
        if (w == v) continue;
        for (int h = 1; h <= dist[w]; h++) {
            id[{w, h}] = (int)out.elements.size();
            out.elements.push_back({w, h});
        }
    }
    out.poset.size = (int)out.elements.size();

    std::set<std::pair<int, int>> covers;
    for (const Edge& e : A.edges) {
        int w1 = e.u, w2 = e.v;
        if (dist[w1] > dist[w2]) std::swap(w1, w2);
        if (dist[w1] + 1 != dist[w2]) throw ConsistencyError("edge distances differ by != 1");
        if (w1 == v) continue;
        for (int h = 1; h <= dist[w1]; h++) {
            covers.insert({id[{w2, h}], id[{w1, h}]});      // (w1,h) covers (w2,h)
            covers.insert({id[{w1, h}], id[{w2, h + 1}]});  // (w2,h+1) covers (w1,h)
        }
    }
    for (auto& c : covers) out.poset.covers.push_back(c);
    return out;
}

struct RankFamilyPoset {
    Poset poset;
    std::vector<Ranking> elements;  // aligned with poset ids
    int bottom = 0;                 // the v-hooked ranking
    int top = 0;                    // the v-anchored ranking
};

// P_v(A): start at A^v, repeatedly raise every source except v, recording
// covers.  Level sizes are the poset ranks.
inline RankFamilyPoset rank_family_poset(const Prechromotopology& A, int v) {
    if (A.vertex_count() > 16) throw CapacityError("rank family poset capped at 16 vertices");
    RankFamilyPoset out;
    std::map<Ranking, int> id;

    Ranking bottom = hook(A, v, HookMode::Hooked);
    out.elements.push_back(bottom);
    out.poset.rank.push_back(0);
    id[bottom] = 0;
    out.bottom = 0;

    std::vector<int> layer{0};
    int level = 0;
    while (!layer.empty()) {
        level++;
        std::vector<std::pair<Ranking, int>> produced;  // (new ranking, parent id)
        for (int bid : layer) {
            Ranking base = out.elements[bid];
            for (int w = 0; w < (int)A.vertex_count(); w++) {
                if (w == v || !is_source(A, base, w)) continue;
                produced.push_back({vertex_flip(A, base, w, FlipDir::Raise), bid});
            }
        }
        std::sort(produced.begin(), produced.end());
        std::vector<int> next_layer;
        for (auto& [r, parent] : produced) {
            auto [it, fresh] = id.emplace(r, (int)out.elements.size());
            if (fresh) {
                out.elements.push_back(r);
                out.poset.rank.push_back(level);
                next_layer.push_back(it->second);
            }
            out.poset.covers.push_back({parent, it->second});
        }
        if (next_layer.empty()) {
            if (layer.size() != 1)
                throw ConsistencyError("top rank of the rank family poset is not unique");
            out.top = layer[0];
        }
        layer = std::move(next_layer);
    }
    out.poset.size = (int)out.elements.size();
    std::sort(out.poset.covers.begin(), out.poset.covers.end());
    out.poset.covers.erase(std::unique(out.poset.covers.begin(), out.poset.covers.end()),
                           out.poset.covers.end());

    if (!(out.elements[out.top] == hook(A, v, HookMode::Anchored)))
        throw ConsistencyError("rank family poset does not end at the anchored ranking");
    return out;
}

}  // namespace adinkra
