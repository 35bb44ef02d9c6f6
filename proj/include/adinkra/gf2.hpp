#pragma once

// Dense bit-packed GF(2) vectors and matrices, plus an unsigned big integer
// for the counting formulas.  Matrices here stay small (a few hundred
// columns), so everything is plain Gaussian elimination over packed words.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adinkra/errors.hpp"

namespace adinkra {

class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        uint64_t mask = uint64_t(1) << (i & 63);
        if (v) w_[i >> 6] |= mask;
        else w_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

    void xor_with(const BitVec& o) {
        for (std::size_t i = 0; i < w_.size(); i++) w_[i] ^= o.w_[i];
    }

    std::size_t count() const {
        std::size_t s = 0;
        for (uint64_t x : w_) s += std::popcount(x);
        return s;
    }
    bool none() const {
        for (uint64_t x : w_) if (x) return false;
        return true;
    }

    bool operator==(const BitVec& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }

    // Lexicographic on the bit sequence (bit 0 first).  At the first
    // differing position, the vector holding a 0 there is smaller.
    bool operator<(const BitVec& o) const {
        for (std::size_t i = 0; i < w_.size(); i++) {
            uint64_t diff = w_[i] ^ o.w_[i];
            if (diff) {
                std::size_t b = std::countr_zero(diff);
                return !((w_[i] >> b) & 1u);
            }
        }
        return false;
    }

    std::string to_string() const {
        std::string s(nbits_, '0');
        for (std::size_t i = 0; i < nbits_; i++)
            if (get(i)) s[i] = '1';
        return s;
    }

  private:
    std::size_t nbits_ = 0;
    std::vector<uint64_t> w_;
};

// Row-major GF(2) matrix.  Rows are BitVecs of a common width.
class BitMatrix {
  public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t cols) : cols_(cols) {}

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const BitVec& row(std::size_t i) const { return rows_[i]; }

    void add_row(BitVec r) {
        if (r.size() != cols_) throw ConsistencyError("BitMatrix row width mismatch");
        rows_.push_back(std::move(r));
    }

    // In-place reduction to reduced row-echelon form; returns pivot columns.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_.size(); c++) {
            std::size_t sel = r;
            while (sel < rows_.size() && !rows_[sel].get(c)) sel++;
            if (sel == rows_.size()) continue;
            std::swap(rows_[r], rows_[sel]);
            for (std::size_t i = 0; i < rows_.size(); i++)
                if (i != r && rows_[i].get(c)) rows_[i].xor_with(rows_[r]);
            pivots.push_back(c);
            r++;
        }
        return pivots;
    }

    std::size_t rank() const {
        BitMatrix tmp = *this;
        return tmp.rref().size();
    }

    // Basis of { x : M x = 0 }, one vector per non-pivot column.
    std::vector<BitVec> nullspace() const {
        BitMatrix m = *this;
        std::vector<std::size_t> pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (std::size_t p : pivots) is_pivot[p] = true;

        std::vector<BitVec> basis;
        for (std::size_t c = 0; c < cols_; c++) {
            if (is_pivot[c]) continue;
            BitVec v(cols_);
            v.set(c, true);
            for (std::size_t i = 0; i < pivots.size(); i++)
                if (m.rows_[i].get(c)) v.set(pivots[i], true);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // A particular solution of M x = rhs (rhs indexed by rows), if consistent.
    std::optional<BitVec> solve(const BitVec& rhs) const {
        if (rhs.size() != rows_.size()) throw ConsistencyError("solve rhs size mismatch");
        BitMatrix m = *this;
        BitVec b = rhs;
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < m.rows_.size(); c++) {
            std::size_t sel = r;
            while (sel < m.rows_.size() && !m.rows_[sel].get(c)) sel++;
            if (sel == m.rows_.size()) continue;
            std::swap(m.rows_[r], m.rows_[sel]);
            bool br = b.get(r), bs = b.get(sel);
            b.set(r, bs), b.set(sel, br);
            for (std::size_t i = 0; i < m.rows_.size(); i++) {
                if (i != r && m.rows_[i].get(c)) {
                    m.rows_[i].xor_with(m.rows_[r]);
                    b.set(i, b.get(i) ^ b.get(r));
                }
            }
            pivots.push_back(c);
            r++;
        }
        for (std::size_t i = r; i < m.rows_.size(); i++)
            if (b.get(i)) return std::nullopt;

        BitVec x(cols_);
        for (std::size_t i = 0; i < pivots.size(); i++) x.set(pivots[i], b.get(i));
        return x;
    }

  private:
    std::size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

// Arbitrary-precision unsigned integer, base 2^64 limbs.  Only the handful
// of operations the counting theorems need.
class BigUint {
  public:
    BigUint() : limbs_{0} {}
    explicit BigUint(uint64_t v) : limbs_{v} {}

    static BigUint pow2(std::size_t e) {
        BigUint r;
        r.limbs_.assign(e / 64 + 1, 0);
        r.limbs_[e / 64] = uint64_t(1) << (e % 64);
        return r;
    }

    BigUint& mul_u64(uint64_t m) {
        unsigned __int128 carry = 0;
        for (uint64_t& limb : limbs_) {
            unsigned __int128 cur = (unsigned __int128)limb * m + carry;
            limb = (uint64_t)cur;
            carry = cur >> 64;
        }
        while (carry) {
            limbs_.push_back((uint64_t)carry);
            carry >>= 64;
        }
        return *this;
    }

    bool operator==(const BigUint& o) const {
        std::size_t n = std::max(limbs_.size(), o.limbs_.size());
        for (std::size_t i = 0; i < n; i++)
            if (limb(i) != o.limb(i)) return false;
        return true;
    }

    std::string to_string() const {
        std::vector<uint64_t> v = limbs_;
        while (v.size() > 1 && v.back() == 0) v.pop_back();
        std::string out;
        const uint64_t base = 1000000000000000000ull;  // 10^18
        while (v.size() > 1 || v[0] != 0) {
            unsigned __int128 rem = 0;
            for (std::size_t i = v.size(); i-- > 0;) {
                unsigned __int128 cur = (rem << 64) | v[i];
                v[i] = (uint64_t)(cur / base);
                rem = cur % base;
            }
            while (v.size() > 1 && v.back() == 0) v.pop_back();
            std::string chunk = std::to_string((uint64_t)rem);
            if (v.size() == 1 && v[0] == 0) {
                out = chunk + out;
            } else {
                out = std::string(18 - chunk.size(), '0') + chunk + out;
            }
        }
        return out.empty() ? "0" : out;
    }

  private:
    uint64_t limb(std::size_t i) const { return i < limbs_.size() ? limbs_[i] : 0; }
    std::vector<uint64_t> limbs_;  // little-endian
};

}  // namespace adinkra
