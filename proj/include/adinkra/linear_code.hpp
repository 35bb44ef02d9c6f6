#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "adinkra/bitstring.hpp"
#include "adinkra/errors.hpp"

namespace adinkra {

constexpr int kMaxCodeDim = 20;  // codeword materialization cap (2^k blowup)

struct CodeClass {
    bool is_even = false;
    bool is_doubly_even = false;
    bool is_dashing_code = false;
    bool has_weight1 = false;
    bool has_weight2 = false;
};

// A binary linear code, held in its unique reduced row-echelon basis
// (pivot columns leftmost, rows in decreasing value order), so equal
// subspaces compare equal.
class LinearCode {
  public:
    LinearCode() = default;
    LinearCode(int n, std::vector<uint32_t> rref_basis)
        : n_(n), basis_(std::move(rref_basis)) {}

    int ambient_length() const { return n_; }
    int dim() const { return (int)basis_.size(); }
    const std::vector<uint32_t>& basis() const { return basis_; }

    bool operator==(const LinearCode& o) const { return n_ == o.n_ && basis_ == o.basis_; }
    bool operator<(const LinearCode& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        return basis_ < o.basis_;
    }

    bool contains(uint32_t v) const {
        for (uint32_t row : basis_) {
            uint32_t t = v ^ row;
            if (t < v) v = t;
        }
        return v == 0;
    }

    // Canonical coset label: the lexicographically smallest coset member.
    uint32_t coset_rep(uint32_t v) const {
        for (uint32_t row : basis_) {
            uint32_t t = v ^ row;
            if (t < v) v = t;
        }
        return v;
    }

    // All 2^k codewords, ascending.
    std::vector<uint32_t> codewords() const {
        if (dim() > kMaxCodeDim) throw CapacityError("codeword enumeration limited to k <= 20");
        std::vector<uint32_t> words(std::size_t(1) << dim(), 0);
        for (std::size_t m = 0; m < words.size(); m++) {
            uint32_t w = 0;
            for (int i = 0; i < dim(); i++)
                if ((m >> i) & 1) w ^= basis_[i];
            words[m] = w;
        }
        std::sort(words.begin(), words.end());
        return words;
    }

    std::vector<std::string> basis_strings() const {
        std::vector<std::string> out;
        for (uint32_t row : basis_) out.push_back(Bitstring(n_, row).to_string());
        return out;
    }

  private:
    int n_ = 0;
    std::vector<uint32_t> basis_;
};

// XOR-closure of the generators, canonicalized to the RREF basis.
inline LinearCode span(int n, const std::vector<uint32_t>& generators) {
    if (n < 1 || n > 30) throw CapacityError("ambient length must be in [1,30]");
    std::vector<uint32_t> basis;
    for (uint32_t g : generators) {
        if (g >> n) throw DomainError("generator exceeds ambient length");
        for (uint32_t row : basis) g = std::min(g, g ^ row);
        if (g == 0) continue;
        // Back-reduce existing rows against the new pivot.
        for (uint32_t& row : basis) row = std::min(row, row ^ g);
        basis.push_back(g);
    }
    std::sort(basis.rbegin(), basis.rend());
    return LinearCode(n, std::move(basis));
}

inline LinearCode span(const std::vector<Bitstring>& generators, int n_if_empty = 0) {
    if (generators.empty()) {
        if (n_if_empty < 1) throw DomainError("empty generator set needs an explicit length");
        return span(n_if_empty, {});
    }
    int n = generators[0].length;
    std::vector<uint32_t> vals;
    for (const Bitstring& g : generators) {
        if (g.length != n) throw DomainError("generators have mixed lengths");
        vals.push_back(g.value);
    }
    return span(n, vals);
}

// Scans all codewords for the weight conditions and all codeword pairs for
// the pairing condition (w1.w2) + wt(w1) wt(w2) = 0 mod 2.
inline CodeClass classify(const LinearCode& code) {
    CodeClass c;
    std::vector<uint32_t> words = code.codewords();
    c.is_even = true;
    c.is_doubly_even = true;
    bool weights_ok = true;  // all weights 0 or 1 mod 4
    for (uint32_t w : words) {
        int wt = weight(w);
        if (wt % 2) c.is_even = false;
        if (wt % 4) c.is_doubly_even = false;
        if (wt % 4 >= 2) weights_ok = false;
        if (wt == 1) c.has_weight1 = true;
        if (wt == 2) c.has_weight2 = true;
    }
    bool pairs_ok = true;
    for (std::size_t i = 0; i < words.size() && pairs_ok; i++)
        for (std::size_t j = i; j < words.size(); j++) {
            int lhs = (dot(words[i], words[j]) + weight(words[i]) * weight(words[j])) & 1;
            if (lhs) { pairs_ok = false; break; }
        }
    c.is_dashing_code = weights_ok && pairs_ok;
    return c;
}

// Code file format: one generator per line, characters 0/1 only, lines of
// equal length; '#' starts a comment line; blank lines are skipped.
inline std::vector<Bitstring> parse_code_file(std::istream& in) {
    std::vector<Bitstring> gens;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        Bitstring b = Bitstring::parse(line);
        if (!gens.empty() && b.length != gens[0].length)
            throw DomainError("code file lines have unequal lengths");
        gens.push_back(b);
    }
    return gens;
}

inline std::vector<Bitstring> parse_code_text(const std::string& text) {
    std::istringstream in(text);
    return parse_code_file(in);
}

}  // namespace adinkra
