#pragma once

// Signed Clifford monomials clif(b) = product of gamma_i over the set bits
// of b, taken in increasing index order, and the bridge from odd dashings
// to anticommuting signed operators.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "adinkra/bitstring.hpp"
#include "adinkra/dashing.hpp"
#include "adinkra/linear_code.hpp"

namespace adinkra {

struct SignedMonomial {
    int sign = 1;          // +1 or -1
    Bitstring support;

    bool operator==(const SignedMonomial& o) const {
        return sign == o.sign && support == o.support;
    }
};

inline SignedMonomial clif(const Bitstring& b) { return SignedMonomial{1, b}; }

// Multiplication: support XORs; the sign picks up one transposition for
// every generator of b moved left past a strictly-larger generator of a,
// and gamma_i^2 = +1 absorbs shared generators.
inline SignedMonomial smul(const SignedMonomial& a, const SignedMonomial& b) {
    if (a.support.length != b.support.length) throw DomainError("monomial dimension mismatch");
    int n = a.support.length;
    int t = 0;
    for (int p = 0; p < n; p++) {
        if ((b.support.value >> p) & 1u) {
            // Bit positions below p hold the 1-based indices above b's.
            t += std::popcount(a.support.value & ((uint32_t(1) << p) - 1));
        }
    }
    int sign = a.sign * b.sign * ((t & 1) ? -1 : 1);
    return SignedMonomial{sign, Bitstring(n, a.support.value ^ b.support.value)};
}

// clif(a) and clif(b) commute iff (a.b) + wt(a) wt(b) = 0 mod 2.
inline bool commutes(const Bitstring& a, const Bitstring& b) {
    if (a.length != b.length) throw DomainError("bitstring length mismatch");
    return ((dot(a.value, b.value) + a.weight() * b.weight()) & 1) == 0;
}

struct SignFunction {
    int n = 0;
    std::vector<uint32_t> words;  // codewords, ascending
    std::vector<int> signs;       // aligned with words

    int sign_of(uint32_t w) const {
        auto it = std::lower_bound(words.begin(), words.end(), w);
        if (it == words.end() || *it != w) throw DomainError("not a codeword");
        return signs[it - words.begin()];
    }
};

// Greedy construction from the basis: s = +1 on basis rows, extended
// multiplicatively.  Absent exactly when L is not a dashing code.  The
// subgroup law { s(v) clif(v) } is verified exhaustively for k <= 12.
inline std::optional<SignFunction> build_sign_function(const LinearCode& L) {
    if (!classify(L).is_dashing_code) return std::nullopt;
    int n = L.ambient_length();

    SignFunction s;
    s.n = n;
    s.words = L.codewords();
    s.signs.resize(s.words.size());
    for (std::size_t idx = 0; idx < s.words.size(); idx++) {
        uint32_t w = s.words[idx];
        SignedMonomial prod = clif(Bitstring(n, 0));
        uint32_t rem = w;
        for (uint32_t row : L.basis()) {
            if ((rem ^ row) < rem) {
                prod = smul(prod, clif(Bitstring(n, row)));
                rem ^= row;
            }
        }
        if (rem != 0 || prod.support.value != w)
            throw ConsistencyError("codeword decomposition over the basis failed");
        s.signs[idx] = prod.sign;
    }

    if (L.dim() <= 12) {
        for (std::size_t i = 0; i < s.words.size(); i++) {
            for (std::size_t j = 0; j < s.words.size(); j++) {
                SignedMonomial p = smul(
                    SignedMonomial{s.signs[i], Bitstring(n, s.words[i])},
                    SignedMonomial{s.signs[j], Bitstring(n, s.words[j])});
                if (p.sign != s.sign_of(s.words[i] ^ s.words[j]))
                    throw ConsistencyError("signed monomials are not closed under products");
            }
        }
    }
    return s;
}

// The maps qbar_i(v) = (-1)^{d(edge at v, color i)} q_i(v).
struct SignedOperatorSet {
    std::vector<std::vector<int>> sign;  // [color-1][vertex] -> +-1
    std::vector<std::vector<int>> q;     // copied vertex maps
};

inline SignedOperatorSet signed_operators(const Prechromotopology& A, const Dashing& d) {
    if (!validate_dashing(A, d, Parity::Odd))
        throw DomainError("signed operators need an odd dashing");

    SignedOperatorSet ops;
    ops.q = A.q;
    ops.sign.assign(A.n, std::vector<int>(A.vertex_count(), 1));
    for (int i = 0; i < A.n; i++)
        for (int v = 0; v < (int)A.vertex_count(); v++)
            ops.sign[i][v] = d.values.get((std::size_t)A.edge_at[i][v]) ? -1 : 1;

    for (int i = 0; i < A.n; i++) {
        for (int v = 0; v < (int)A.vertex_count(); v++) {
            if (ops.sign[i][v] * ops.sign[i][ops.q[i][v]] != 1 || ops.q[i][ops.q[i][v]] != v)
                throw ConsistencyError("qbar_i is not a signed involution");
        }
    }
    for (int i = 0; i < A.n; i++) {
        for (int j = i + 1; j < A.n; j++) {
            for (int v = 0; v < (int)A.vertex_count(); v++) {
                int sij = ops.sign[j][v] * ops.sign[i][ops.q[j][v]];
                int sji = ops.sign[i][v] * ops.sign[j][ops.q[i][v]];
                if (ops.q[i][ops.q[j][v]] != ops.q[j][ops.q[i][v]] || sij != -sji)
                    throw ConsistencyError("odd dashing failed to anticommute the operators");
            }
        }
    }
    return ops;
}

}  // namespace adinkra
