#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "adinkra/gf2.hpp"

using namespace adinkra;

TEST_CASE("bitvec basics") {
    BitVec v(70);
    REQUIRE(v.none());
    v.set(0, true);
    v.set(69, true);
    REQUIRE(v.count() == 2);
    v.flip(69);
    REQUIRE(v.count() == 1);
    REQUIRE(v.get(0));
    REQUIRE(v.to_string().substr(0, 3) == "100");
}

TEST_CASE("bitvec lexicographic order puts bit 0 first") {
    BitVec a(4), b(4);
    a.set(1, true);        // 0100
    b.set(0, true);        // 1000
    REQUIRE(a < b);
    BitVec c(4);
    c.set(1, true);
    c.set(3, true);        // 0101
    REQUIRE(a < c);
    REQUIRE(!(c < a));
}

TEST_CASE("rref, rank and nullspace agree with hand results") {
    // rows: 110, 011, 101 -> rank 2, nullspace {111}
    BitMatrix m(3);
    auto row = [&](std::initializer_list<int> bits) {
        BitVec v(3);
        int i = 0;
        for (int b : bits) v.set(i++, b != 0);
        return v;
    };
    m.add_row(row({1, 1, 0}));
    m.add_row(row({0, 1, 1}));
    m.add_row(row({1, 0, 1}));
    REQUIRE(m.rank() == 2);
    auto ns = m.nullspace();
    REQUIRE(ns.size() == 1);
    REQUIRE(ns[0].to_string() == "111");
}

TEST_CASE("solve finds particular solutions and detects inconsistency") {
    BitMatrix m(3);
    BitVec r1(3), r2(3);
    r1.set(0, true);
    r1.set(1, true);  // x0 + x1
    r2.set(1, true);
    r2.set(2, true);  // x1 + x2
    m.add_row(r1);
    m.add_row(r2);

    BitVec rhs(2);
    rhs.set(0, true);
    auto x = m.solve(rhs);
    REQUIRE(x.has_value());
    REQUIRE((x->get(0) ^ x->get(1)) == true);
    REQUIRE((x->get(1) ^ x->get(2)) == false);

    // Duplicate row with contradictory rhs.
    BitMatrix m2(2);
    BitVec r(2);
    r.set(0, true);
    m2.add_row(r);
    m2.add_row(r);
    BitVec bad(2);
    bad.set(0, true);
    REQUIRE(!m2.solve(bad).has_value());
}

TEST_CASE("nullspace dimension is cols - rank on random matrices") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 50; trial++) {
        std::size_t cols = 1 + rng() % 20, rows = 1 + rng() % 20;
        BitMatrix m(cols);
        for (std::size_t r = 0; r < rows; r++) {
            BitVec v(cols);
            for (std::size_t c = 0; c < cols; c++) v.set(c, rng() & 1);
            m.add_row(v);
        }
        std::size_t rank = m.rank();
        auto ns = m.nullspace();
        REQUIRE(ns.size() == cols - rank);
        for (const BitVec& v : ns) {
            for (std::size_t r = 0; r < m.rows(); r++) {
                int parity = 0;
                for (std::size_t c = 0; c < cols; c++)
                    parity ^= (m.row(r).get(c) && v.get(c)) ? 1 : 0;
                REQUIRE(parity == 0);
            }
        }
    }
}

TEST_CASE("biguint powers of two and decimal printing") {
    REQUIRE(BigUint::pow2(0).to_string() == "1");
    REQUIRE(BigUint::pow2(31).to_string() == "2147483648");
    REQUIRE(BigUint::pow2(64).to_string() == "18446744073709551616");
    REQUIRE(BigUint::pow2(127).to_string() == "170141183460469231731687303715884105728");
    BigUint x = BigUint::pow2(31);
    x.mul_u64(395094);
    REQUIRE(x.to_string() == "848457904422912");
    REQUIRE(BigUint(0).to_string() == "0");
    REQUIRE(BigUint(123456789).to_string() == "123456789");
}
