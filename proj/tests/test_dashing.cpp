#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "adinkra/dashing.hpp"
#include "helpers.hpp"

using namespace adinkra;

static Prechromotopology cube(int n) { return build_quotient(n, span(n, {})); }

static std::size_t edge_index(const Prechromotopology& A, uint32_t a, uint32_t b, int color) {
    int u = A.vertex_of_label(std::min(a, b));
    int v = A.vertex_of_label(std::max(a, b));
    for (std::size_t e = 0; e < A.edges.size(); e++)
        if (A.edges[e] == Edge{u, v, color}) return e;
    throw std::runtime_error("edge not found");
}

// The dashed edges of the running 3-cube adinkra figure: color 1 between
// 001-101 and 011-111, color 2 between 001-011 and 100-110.
static Dashing figure_dashing(const Prechromotopology& A) {
    Dashing d{BitVec(A.edge_count())};
    d.values.set(edge_index(A, 0b001, 0b101, 1), true);
    d.values.set(edge_index(A, 0b011, 0b111, 1), true);
    d.values.set(edge_index(A, 0b001, 0b011, 2), true);
    d.values.set(edge_index(A, 0b100, 0b110, 2), true);
    return d;
}

TEST_CASE("constraint rows per 2-colored orbit") {
    REQUIRE(constraint_system(cube(2)).rows() == 1);
    BitMatrix m3 = constraint_system(cube(3));
    REQUIRE(m3.rows() == 6);
    REQUIRE(m3.cols() == 12);
    for (std::size_t r = 0; r < m3.rows(); r++) REQUIRE(m3.row(r).count() == 4);

    // Loop quotient: one row supported on the two loops only.
    Prechromotopology loops = build_quotient(2, span({Bitstring::parse("10")}));
    BitMatrix ml = constraint_system(loops);
    REQUIRE(ml.rows() == 1);
    REQUIRE(ml.row(0).count() == 2);
    REQUIRE(ml.row(0).get(0));  // loop at vertex 0 (edge order: loops first)
    REQUIRE(ml.row(0).get(1));
    REQUIRE(!ml.row(0).get(2));  // the color-2 edge cancelled

    // Double edges refuse a constraint system.
    Prechromotopology dbl = build_quotient(2, span({Bitstring::parse("11")}));
    REQUIRE_THROWS_AS(constraint_system(dbl), DomainError);
}

TEST_CASE("cycle walks match an independent quad scan on simple graphs") {
    for (const LinearCode& code : {span(3, {}), span({Bitstring::parse("1111")})}) {
        Prechromotopology A = build_quotient(code.ambient_length(), code);
        auto quads = testutil::quad_scan_cycles(A);
        BitMatrix m = constraint_system(A);
        std::set<BitVec> walk_rows;
        for (std::size_t r = 0; r < m.rows(); r++) walk_rows.insert(m.row(r));
        std::set<BitVec> quad_rows;
        for (const auto& cyc : quads) {
            BitVec v(A.edge_count());
            for (std::size_t e : cyc) v.set(e, true);
            quad_rows.insert(v);
        }
        REQUIRE(walk_rows == quad_rows);
    }
    // Hypercube cycle counts also agree with the bit-flip census.
    REQUIRE(testutil::hypercube_cycles(cube(3)).size() == 6);
    REQUIRE(testutil::hypercube_cycles(cube(4)).size() == 24);
}

TEST_CASE("even space dimensions") {
    REQUIRE(even_space(cube(1)).size() == 1);
    REQUIRE(even_space(cube(3)).size() == 7);
    Prechromotopology k44 = build_quotient(4, span({Bitstring::parse("1111")}));
    REQUIRE(even_space(k44).size() == 8);  // 2^3 + 1 - 1
}

TEST_CASE("odd dashings exist exactly for dashing codes") {
    auto d3 = find_odd_dashing(cube(3));
    REQUIRE(d3.has_value());
    REQUIRE(validate_dashing(cube(3), *d3, Parity::Odd));

    REQUIRE(!find_odd_dashing(build_quotient(2, span({Bitstring::parse("11")}))));

    Prechromotopology loops = build_quotient(2, span({Bitstring::parse("10")}));
    auto dl = find_odd_dashing(loops);
    REQUIRE(dl.has_value());
    // The two loops are oppositely dashed; the connecting edge is free.
    REQUIRE((dl->values.get(0) ^ dl->values.get(1)) == true);
}

TEST_CASE("validate_dashing on transcribed figures") {
    Prechromotopology A = cube(3);
    Dashing fig = figure_dashing(A);
    REQUIRE(validate_dashing(A, fig, Parity::Odd));
    REQUIRE(!validate_dashing(A, fig, Parity::Even));

    Dashing zero{BitVec(A.edge_count())};
    REQUIRE(validate_dashing(A, zero, Parity::Even));

    Prechromotopology sq = cube(2);
    Dashing one{BitVec(sq.edge_count())};
    one.values.set(0, true);
    REQUIRE(validate_dashing(sq, one, Parity::Odd));
    REQUIRE(!validate_dashing(sq, one, Parity::Even));
}

TEST_CASE("count_dashings closed form") {
    REQUIRE(count_dashings(3, 0).to_string() == "128");
    REQUIRE(count_dashings(5, 0).to_string() == "2147483648");
    REQUIRE(count_dashings(4, 1).to_string() == "256");
    REQUIRE(count_dashings(1, 0).to_string() == "2");
}

TEST_CASE("vertex switches are involutions preserving parity") {
    Prechromotopology A = cube(3);
    Dashing fig = figure_dashing(A);
    for (int v = 0; v < 8; v++) {
        Dashing once = vertex_switch(A, fig, v);
        REQUIRE(validate_dashing(A, once, Parity::Odd));
        REQUIRE(vertex_switch(A, once, v) == fig);
    }

    // The before/after switch figure: switching 001 toggles its three edges.
    Dashing after = vertex_switch(A, fig, A.vertex_of_label(0b001));
    Dashing want{BitVec(A.edge_count())};
    want.values.set(edge_index(A, 0b011, 0b111, 1), true);
    want.values.set(edge_index(A, 0b100, 0b110, 2), true);
    want.values.set(edge_index(A, 0b000, 0b001, 3), true);
    REQUIRE(after == want);
}

TEST_CASE("switching at a looped vertex leaves its loop alone") {
    Prechromotopology loops = build_quotient(2, span({Bitstring::parse("10")}));
    Dashing d{BitVec(3)};
    d.values.set(1, true);  // loop at vertex 1 dashed
    Dashing switched = vertex_switch(loops, d, 0);
    REQUIRE(switched.values.get(0) == false);  // own loop untouched
    REQUIRE(switched.values.get(1) == true);
    REQUIRE(switched.values.get(2) == true);  // the ordinary edge flipped
    REQUIRE(validate_dashing(loops, switched, Parity::Odd));
}

TEST_CASE("switching subspace dimensions") {
    REQUIRE(switching_subspace(cube(1)).size() == 1);
    REQUIRE(switching_subspace(cube(3)).size() == 7);
    Prechromotopology k44 = build_quotient(4, span({Bitstring::parse("1111")}));
    REQUIRE(switching_subspace(k44).size() == 7);

    Prechromotopology loops = build_quotient(2, span({Bitstring::parse("10")}));
    REQUIRE_THROWS_AS(switching_subspace(loops), DomainError);
}

TEST_CASE("labeled switching classes") {
    REQUIRE(lsc_count(cube(2)).count.to_string() == "1");
    REQUIRE(lsc_count(cube(3)).count.to_string() == "1");

    Prechromotopology k44 = build_quotient(4, span({Bitstring::parse("1111")}));
    LscReport rep = lsc_count(k44);
    REQUIRE(rep.count.to_string() == "2");
    REQUIRE(rep.representatives.size() == 2);
    for (const Dashing& d : rep.representatives)
        REQUIRE(validate_dashing(k44, d, Parity::Odd));

    // e8-type (8,4) code: 2^4 classes; |E| = 64 sits exactly on the
    // representative cap.
    LinearCode e8 = span({Bitstring::parse("11111111"), Bitstring::parse("11110000"),
                          Bitstring::parse("11001100"), Bitstring::parse("10101010")});
    REQUIRE(e8.dim() == 4);
    REQUIRE(classify(e8).is_doubly_even);
    Prechromotopology A8 = build_quotient(8, e8);
    LscReport rep8 = lsc_count(A8);
    REQUIRE(rep8.count.to_string() == "16");
    REQUIRE(rep8.representatives.size() == 16);
    for (const Dashing& d : rep8.representatives)
        REQUIRE(validate_dashing(A8, d, Parity::Odd));
}

TEST_CASE("exhaustive dashing census on small hosts") {
    // I_c^2, I_c^3 and the K44 quotient all have |E| <= 16: enumerate every
    // dashing, judging parity with the independent quad-scan cycles.
    std::vector<LinearCode> codes{span(2, {}), span(3, {}), span({Bitstring::parse("1111")})};
    for (const LinearCode& code : codes) {
        Prechromotopology A = build_quotient(code.ambient_length(), code);
        REQUIRE(A.edge_count() <= 16);
        auto cycles = testutil::quad_scan_cycles(A);

        uint64_t odd = 0, even = 0;
        std::set<BitVec> odd_set;
        for (uint32_t mask = 0; mask < (uint32_t(1) << A.edge_count()); mask++) {
            int par = testutil::census_parity(cycles, mask);
            if (par == 1) {
                odd++;
                BitVec v(A.edge_count());
                for (std::size_t e = 0; e < A.edge_count(); e++)
                    if ((mask >> e) & 1) v.set(e, true);
                odd_set.insert(v);
            } else if (par == 0) {
                even++;
            }
        }
        int n = A.n, k = code.dim();
        uint64_t expected = uint64_t(1) << ((1u << (n - k)) + k - 1);
        REQUIRE(odd == expected);
        REQUIRE(even == expected);

        // odd = particular + even space, exactly.
        DashingSpace s = dashing_space(A);
        REQUIRE(s.odd_particular.has_value());
        std::set<BitVec> coset;
        REQUIRE(s.even_basis.size() <= 16);
        for (uint32_t mask = 0; mask < (uint32_t(1) << s.even_basis.size()); mask++) {
            BitVec v = *s.odd_particular;
            for (std::size_t i = 0; i < s.even_basis.size(); i++)
                if ((mask >> i) & 1) v.xor_with(s.even_basis[i]);
            coset.insert(v);
        }
        REQUIRE(coset == odd_set);
    }
}

TEST_CASE("even dashings of the low cube extend uniquely across a cut") {
    Prechromotopology A = cube(3);
    DecompositionPieces p = decompose(A, 1);
    auto cycles = testutil::quad_scan_cycles(A);

    // Partition A's edges: low square, cut (color 1), high square.
    std::vector<std::size_t> low_edges, cut_edges, high_edges;
    std::set<int> lows(p.inc_low.begin(), p.inc_low.end());
    for (std::size_t e = 0; e < A.edge_count(); e++) {
        const Edge& ed = A.edges[e];
        if (ed.color == 1) cut_edges.push_back(e);
        else if (lows.count(ed.u)) low_edges.push_back(e);
        else high_edges.push_back(e);
    }
    REQUIRE(low_edges.size() == 4);
    REQUIRE(cut_edges.size() == 4);
    REQUIRE(high_edges.size() == 4);

    // Cycles living entirely in the low square, re-expressed in low-edge
    // positions; a dashing of the square is even when all of them are.
    std::vector<std::vector<std::size_t>> low_cycles;
    for (const auto& cyc : cycles) {
        std::vector<std::size_t> pos;
        for (std::size_t e : cyc) {
            auto it = std::find(low_edges.begin(), low_edges.end(), e);
            if (it == low_edges.end()) break;
            pos.push_back((std::size_t)(it - low_edges.begin()));
        }
        if (pos.size() == 4) low_cycles.push_back(pos);
    }
    REQUIRE(low_cycles.size() == 1);
    std::vector<uint32_t> low_evens;
    for (uint32_t lm = 0; lm < 16; lm++) {
        bool even = true;
        for (const auto& cyc : low_cycles) {
            int pp = 0;
            for (std::size_t i : cyc) pp ^= (lm >> i) & 1u;
            if (pp) even = false;
        }
        if (even) low_evens.push_back(lm);
    }
    REQUIRE(low_evens.size() == 8);

    uint64_t total = 0;
    for (uint32_t lm : low_evens) {
        for (uint32_t cm = 0; cm < 16; cm++) {
            int extensions = 0;
            for (uint32_t hm = 0; hm < 16; hm++) {
                uint32_t mask = 0;
                for (std::size_t i = 0; i < 4; i++) {
                    if ((lm >> i) & 1) mask |= 1u << low_edges[i];
                    if ((cm >> i) & 1) mask |= 1u << cut_edges[i];
                    if ((hm >> i) & 1) mask |= 1u << high_edges[i];
                }
                if (testutil::census_parity(cycles, mask) == 0) extensions++;
            }
            REQUIRE(extensions == 1);
            total += extensions;
        }
    }
    REQUIRE(total == 128);  // = |e(I_c^3)|
}

TEST_CASE("switching orbits partition the odd dashings with equal sizes") {
    for (const LinearCode& code : {span(2, {}), span(3, {}), span({Bitstring::parse("1111")})}) {
        Prechromotopology A = build_quotient(code.ambient_length(), code);
        auto cycles = testutil::quad_scan_cycles(A);
        std::set<BitVec> odd_set;
        for (uint32_t mask = 0; mask < (uint32_t(1) << A.edge_count()); mask++) {
            if (testutil::census_parity(cycles, mask) == 1) {
                BitVec v(A.edge_count());
                for (std::size_t e = 0; e < A.edge_count(); e++)
                    if ((mask >> e) & 1) v.set(e, true);
                odd_set.insert(v);
            }
        }
        std::size_t orbit_size = std::size_t(1) << (A.vertex_count() - 1);
        std::size_t orbits = 0;
        std::set<BitVec> covered;
        for (const BitVec& start : odd_set) {
            if (covered.count(start)) continue;
            orbits++;
            std::vector<BitVec> queue{start};
            std::set<BitVec> orbit{start};
            for (std::size_t head = 0; head < queue.size(); head++) {
                for (int v = 0; v < (int)A.vertex_count(); v++) {
                    Dashing next = vertex_switch(A, Dashing{queue[head]}, v);
                    if (orbit.insert(next.values).second) queue.push_back(next.values);
                }
            }
            REQUIRE(orbit.size() == orbit_size);
            covered.insert(orbit.begin(), orbit.end());
        }
        REQUIRE(orbits == std::size_t(1) << code.dim());
        REQUIRE(covered == odd_set);
    }
}

TEST_CASE("homology of cubes and quotients") {
    ChainComplex x4 = homology(cube(4));
    REQUIRE(x4.betti0 == 1);
    REQUIRE(x4.betti1 == 0);
    REQUIRE(x4.c0 == 16);
    REQUIRE(x4.c1 == 32);
    REQUIRE(x4.c2 == 24);

    Prechromotopology k44 = build_quotient(4, span({Bitstring::parse("1111")}));
    ChainComplex xq = homology(k44);
    REQUIRE(xq.betti0 == 1);
    REQUIRE(xq.betti1 == 1);

    Prechromotopology loops = build_quotient(2, span({Bitstring::parse("10")}));
    REQUIRE_THROWS_AS(homology(loops), DomainError);
}

TEST_CASE("dimension chain over doubly-even codes up to n = 5") {
    for (int n = 1; n <= 5; n++) {
        for (const LinearCode& code : testutil::doubly_even_codes(n)) {
            Prechromotopology A = build_quotient(n, code);
            int k = code.dim();
            std::size_t verts = std::size_t(1) << (n - k);
            REQUIRE(even_space(A).size() == verts + k - 1);
            REQUIRE(switching_subspace(A).size() == verts - 1);
            REQUIRE(homology(A).betti1 == k);
            REQUIRE(lsc_count(A).count == BigUint::pow2(k));
        }
    }
}
