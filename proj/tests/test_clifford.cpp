#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "adinkra/clifford.hpp"
#include "helpers.hpp"

using namespace adinkra;

TEST_CASE("generator products anticommute") {
    SignedMonomial g1 = clif(Bitstring::parse("10"));
    SignedMonomial g2 = clif(Bitstring::parse("01"));
    SignedMonomial p12 = smul(g1, g2);
    SignedMonomial p21 = smul(g2, g1);
    REQUIRE(p12.sign == 1);
    REQUIRE(p12.support.to_string() == "11");
    REQUIRE(p21.sign == -1);
    REQUIRE(p21.support.to_string() == "11");
}

TEST_CASE("squares follow the (-1)^(k(k-1)/2) rule") {
    SignedMonomial w4 = clif(Bitstring::parse("1111"));
    REQUIRE(smul(w4, w4) == clif(Bitstring::parse("0000")));
    SignedMonomial w2 = clif(Bitstring::parse("1100"));
    SignedMonomial sq = smul(w2, w2);
    REQUIRE(sq.sign == -1);
    REQUIRE(sq.support.value == 0);
}

TEST_CASE("smul needs matching dimensions") {
    REQUIRE_THROWS_AS(smul(clif(Bitstring::parse("10")), clif(Bitstring::parse("100"))),
                      DomainError);
}

TEST_CASE("commutes formula spot checks") {
    REQUIRE(commutes(Bitstring::parse("1111"), Bitstring::parse("1111")));
    REQUIRE(commutes(Bitstring::parse("10"), Bitstring::parse("10")));
    REQUIRE(!commutes(Bitstring::parse("100"), Bitstring::parse("010")));
}

TEST_CASE("commutes agrees with the product comparison for all pairs up to n = 6") {
    for (int n = 1; n <= 6; n++) {
        for (uint32_t a = 0; a < (uint32_t(1) << n); a++) {
            for (uint32_t b = 0; b < (uint32_t(1) << n); b++) {
                SignedMonomial ma = clif(Bitstring(n, a));
                SignedMonomial mb = clif(Bitstring(n, b));
                bool direct = smul(ma, mb) == smul(mb, ma);
                REQUIRE(direct == commutes(Bitstring(n, a), Bitstring(n, b)));
            }
        }
    }
}

TEST_CASE("smul is associative and clif(0) is the identity") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 500; trial++) {
        int n = 1 + rng() % 10;
        auto rnd = [&] {
            int sign = (rng() & 1) ? 1 : -1;
            return SignedMonomial{sign, Bitstring(n, rng() & ((uint32_t(1) << n) - 1))};
        };
        SignedMonomial a = rnd(), b = rnd(), c = rnd();
        REQUIRE(smul(smul(a, b), c) == smul(a, smul(b, c)));
        REQUIRE(smul(a, clif(Bitstring(n, 0))) == a);
        REQUIRE(smul(clif(Bitstring(n, 0)), a) == a);
    }
}

TEST_CASE("sign function existence and worked examples") {
    auto s = build_sign_function(span({Bitstring::parse("1111")}));
    REQUIRE(s.has_value());
    REQUIRE(s->sign_of(0) == 1);
    REQUIRE(s->sign_of(0b1111) == 1);

    REQUIRE(!build_sign_function(span({Bitstring::parse("11")})));

    auto t = build_sign_function(span(3, {}));
    REQUIRE(t.has_value());
    REQUIRE(t->words == std::vector<uint32_t>{0});
}

TEST_CASE("three-way dashability agreement over all codes up to n = 5") {
    for (int n = 1; n <= 5; n++) {
        for (const LinearCode& code : testutil::all_codes(n)) {
            bool flag = classify(code).is_dashing_code;
            bool sign_exists = build_sign_function(code).has_value();
            bool odd_exists = find_odd_dashing(build_quotient(n, code)).has_value();
            REQUIRE(flag == sign_exists);
            REQUIRE(flag == odd_exists);
        }
    }
}

TEST_CASE("signed operators from a found odd dashing realize the Clifford relations") {
    Prechromotopology A = build_quotient(3, span(3, {}));
    auto d = find_odd_dashing(A);
    REQUIRE(d.has_value());
    // Constructor throws on any anticommutation failure.
    SignedOperatorSet ops = signed_operators(A, *d);

    // Spot-check one pair on the whole vertex set.
    for (int v = 0; v < 8; v++) {
        int s01 = ops.sign[1][v] * ops.sign[0][ops.q[1][v]];
        int s10 = ops.sign[0][v] * ops.sign[1][ops.q[0][v]];
        REQUIRE(s01 == -s10);
    }
}

TEST_CASE("signed operators reject non-odd dashings") {
    Prechromotopology sq = build_quotient(2, span(2, {}));
    Dashing zero{BitVec(sq.edge_count())};
    REQUIRE_THROWS_AS(signed_operators(sq, zero), DomainError);
}

TEST_CASE("loop preadinkra operators") {
    Prechromotopology A = build_quotient(2, span({Bitstring::parse("10")}));
    // Edge order: loop at 0, loop at 1, connecting color-2 edge.  Dash the
    // second loop, as in the two-loop figure.
    Dashing d{BitVec(3)};
    d.values.set(1, true);
    REQUIRE(validate_dashing(A, d, Parity::Odd));
    SignedOperatorSet ops = signed_operators(A, d);
    REQUIRE(ops.sign[0][0] == 1);   // qbar_1 fixes vertex 0 with +
    REQUIRE(ops.q[0][0] == 0);
    REQUIRE(ops.sign[0][1] == -1);  // and vertex 1 with -
    REQUIRE(ops.q[0][1] == 1);
}
