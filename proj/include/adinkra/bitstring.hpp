#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "adinkra/errors.hpp"

namespace adinkra {

// A bitstring b_1 b_2 ... b_n is packed into a word with b_1 as the most
// significant of the n bits, so integer order on `value` equals
// lexicographic order on the written string.  Positions are 1-based
// throughout, matching the usual b_1-first notation.
struct Bitstring {
    int length = 0;
    uint32_t value = 0;

    Bitstring() = default;
    Bitstring(int n, uint32_t v) : length(n), value(v) {
        if (n < 1 || n > 30) throw CapacityError("bitstring length must be in [1,30]");
        if (v >> n) throw ConsistencyError("bitstring value out of range");
    }

    static uint32_t unit(int n, int i) { return uint32_t(1) << (n - i); }

    int bit(int i) const { return (value >> (length - i)) & 1u; }
    int weight() const { return std::popcount(value); }

    Bitstring complement() const {
        uint32_t mask = (length == 32) ? ~0u : ((uint32_t(1) << length) - 1);
        return Bitstring(length, value ^ mask);
    }

    Bitstring operator^(const Bitstring& o) const {
        if (length != o.length) throw DomainError("bitstring length mismatch");
        return Bitstring(length, value ^ o.value);
    }

    bool operator==(const Bitstring& o) const {
        return length == o.length && value == o.value;
    }
    bool operator<(const Bitstring& o) const { return value < o.value; }

    std::string to_string() const {
        std::string s(length, '0');
        for (int i = 1; i <= length; i++)
            if (bit(i)) s[i - 1] = '1';
        return s;
    }

    static Bitstring parse(const std::string& s) {
        if (s.empty()) throw DomainError("empty bitstring");
        uint32_t v = 0;
        for (char c : s) {
            if (c != '0' && c != '1') throw DomainError("bitstring must contain only 0/1");
            v = (v << 1) | uint32_t(c - '0');
        }
        return Bitstring((int)s.size(), v);
    }
};

inline int weight(uint32_t v) { return std::popcount(v); }

// Parity of the GF(2) dot product.
inline int dot(uint32_t a, uint32_t b) { return std::popcount(a & b) & 1; }

}  // namespace adinkra
