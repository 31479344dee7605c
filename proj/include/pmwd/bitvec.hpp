// Packed GF(2) vector used for codewords and decision vectors.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pmwd {

// Fixed-length bit vector backed by 64-bit words. Bit 0 corresponds to the
// paper's position 1 (c_1); all public code indices are 1-based, storage is
// 0-based.
class BitVec {
public:
    BitVec() = default;

    explicit BitVec(uint32_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    uint32_t size() const { return nbits_; }

    bool test(uint32_t pos) const { return (words_[pos >> 6] >> (pos & 63)) & 1u; }

    void set(uint32_t pos, bool value) {
        const uint64_t mask = uint64_t(1) << (pos & 63);
        if (value)
            words_[pos >> 6] |= mask;
        else
            words_[pos >> 6] &= ~mask;
    }

    void flip(uint32_t pos) { words_[pos >> 6] ^= uint64_t(1) << (pos & 63); }

    uint64_t weight() const {
        uint64_t w = 0;
        for (uint64_t word : words_)
            w += std::popcount(word);
        return w;
    }

    bool any() const {
        for (uint64_t word : words_)
            if (word)
                return true;
        return false;
    }

    bool none() const { return !any(); }

    BitVec& operator^=(const BitVec& other) {
        for (size_t i = 0; i < words_.size(); ++i)
            words_[i] ^= other.words_[i];
        return *this;
    }

    friend BitVec operator^(BitVec lhs, const BitVec& rhs) {
        lhs ^= rhs;
        return lhs;
    }

    friend bool operator==(const BitVec&, const BitVec&) = default;

    // Lexicographic from position 1, so ordering matches the hex rendering.
    friend bool operator<(const BitVec& lhs, const BitVec& rhs) {
        if (lhs.nbits_ != rhs.nbits_)
            return lhs.nbits_ < rhs.nbits_;
        for (size_t i = 0; i < lhs.words_.size(); ++i) {
            if (lhs.words_[i] != rhs.words_[i]) {
                // smaller position differs first; reverse each word's bit order
                const uint64_t diff = lhs.words_[i] ^ rhs.words_[i];
                const int bit = std::countr_zero(diff);
                return !((lhs.words_[i] >> bit) & 1u);
            }
        }
        return false;
    }

    // Support containment: every set bit of *this is also set in other.
    bool is_subset_of(const BitVec& other) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i])
                return false;
        return true;
    }

    std::span<const uint64_t> words() const { return words_; }
    std::span<uint64_t> words() { return words_; }

    BitVec left_half() const {
        const uint32_t half = nbits_ / 2;
        BitVec out(half);
        if (half % 64 == 0) {
            std::copy_n(words_.begin(), half / 64, out.words_.begin());
        } else {
            for (uint32_t i = 0; i < half; ++i)
                out.set(i, test(i));
        }
        return out;
    }

    BitVec right_half() const {
        const uint32_t half = nbits_ / 2;
        BitVec out(half);
        if (half % 64 == 0) {
            std::copy_n(words_.begin() + half / 64, half / 64, out.words_.begin());
        } else {
            for (uint32_t i = 0; i < half; ++i)
                out.set(i, test(i + half));
        }
        return out;
    }

    static BitVec concat(const BitVec& left, const BitVec& right) {
        BitVec out(left.nbits_ + right.nbits_);
        if (left.nbits_ % 64 == 0) {
            std::copy(left.words_.begin(), left.words_.end(), out.words_.begin());
            std::copy(right.words_.begin(), right.words_.end(),
                      out.words_.begin() + left.nbits_ / 64);
        } else {
            for (uint32_t i = 0; i < left.nbits_; ++i)
                out.set(i, left.test(i));
            for (uint32_t i = 0; i < right.nbits_; ++i)
                out.set(left.nbits_ + i, right.test(i));
        }
        return out;
    }

    // Index of the lowest set bit, or size() when empty.
    uint32_t lowest_set_bit() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i])
                return static_cast<uint32_t>(64 * i + std::countr_zero(words_[i]));
        return nbits_;
    }

    // Hex rendering with c_1 as the most significant bit of the string.
    // Lengths that are not multiples of 4 are padded with trailing zeros.
    std::string to_hex() const {
        static const char digits[] = "0123456789ABCDEF";
        std::string out;
        out.reserve((nbits_ + 3) / 4);
        for (uint32_t i = 0; i < nbits_; i += 4) {
            int nibble = 0;
            for (uint32_t j = 0; j < 4; ++j)
                nibble = (nibble << 1) | ((i + j < nbits_ && test(i + j)) ? 1 : 0);
            out.push_back(digits[nibble]);
        }
        return out;
    }

    static BitVec from_hex(std::string_view hex, uint32_t nbits) {
        if (hex.size() != (nbits + 3) / 4)
            throw std::invalid_argument("hex string length does not match bit count");
        BitVec out(nbits);
        for (uint32_t i = 0; i < hex.size(); ++i) {
            const char c = hex[i];
            int nibble;
            if (c >= '0' && c <= '9')
                nibble = c - '0';
            else if (c >= 'a' && c <= 'f')
                nibble = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F')
                nibble = c - 'A' + 10;
            else
                throw std::invalid_argument("invalid hex digit");
            for (uint32_t j = 0; j < 4; ++j) {
                const bool bit = (nibble >> (3 - j)) & 1;
                if (4 * i + j < nbits)
                    out.set(4 * i + j, bit);
                else if (bit)
                    throw std::invalid_argument("nonzero padding bits in hex string");
            }
        }
        return out;
    }

private:
    uint32_t nbits_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace pmwd
