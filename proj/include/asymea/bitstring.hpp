#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "asymea/random.hpp"

namespace asymea {

/// Fixed-length bit string packed into 64-bit words with a cached count of
/// one-bits. Position 0 is rendered first.
class BitString {
public:
    /// All-zero string of length n. Throws std::invalid_argument for n == 0.
    explicit BitString(std::size_t n);

    /// Parses a string of '0'/'1' characters.
    static BitString from_string(std::string_view text);

    std::size_t size() const noexcept { return size_; }
    std::size_t count_ones() const noexcept { return ones_; }
    std::size_t count_zeros() const noexcept { return size_ - ones_; }

    bool operator[](std::size_t i) const noexcept {
        return ((words_[i >> 6] >> (i & 63)) & 1u) != 0;
    }
    /// Bounds-checked access.
    bool test(std::size_t i) const;

    void flip(std::size_t i) noexcept {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        std::uint64_t& w = words_[i >> 6];
        ones_ += (w & mask) ? std::size_t(-1) : std::size_t(1);
        w ^= mask;
    }
    void set(std::size_t i, bool value) noexcept {
        if ((*this)[i] != value) flip(i);
    }

    std::span<const std::uint64_t> words() const noexcept { return words_; }

    /// Recounts one-bits from the packed words. Used to check the cache.
    std::size_t recount_ones() const noexcept;

    std::string to_string() const;

    friend bool operator==(const BitString&, const BitString&) = default;

private:
    std::size_t size_;
    std::size_t ones_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Number of differing positions. Throws std::invalid_argument on length mismatch.
std::size_t hamming(const BitString& x, const BitString& y);

/// Copy of x with the listed positions inverted. Positions must be distinct
/// and in range; violations throw std::out_of_range / std::invalid_argument.
BitString apply_flips(const BitString& x, std::span<const std::size_t> positions);

/// Each bit independently 1 with probability 1/2, one generator word per 64 positions.
template <Bit64Generator G>
BitString random_uniform(std::size_t n, G& rng) {
    BitString x(n);
    for (std::size_t base = 0; base < n; base += 64) {
        std::uint64_t w = rng();
        for (std::size_t i = base; i < n && i < base + 64; ++i, w >>= 1)
            if (w & 1u) x.flip(i);
    }
    return x;
}

/// A bit string together with the lists of its zero and one positions, so
/// that the k-th member of either class is found in O(1). Flips keep both in
/// sync in O(1); list order is arbitrary.
class IndexedBitString {
public:
    explicit IndexedBitString(BitString bits);

    const BitString& bits() const noexcept { return bits_; }
    std::size_t size() const noexcept { return bits_.size(); }
    std::size_t count_zeros() const noexcept { return zeros_.size(); }
    std::size_t count_ones() const noexcept { return ones_.size(); }

    std::uint32_t zero_at(std::size_t k) const noexcept { return zeros_[k]; }
    std::uint32_t one_at(std::size_t k) const noexcept { return ones_[k]; }

    void flip(std::size_t i) noexcept;

    /// Full consistency check of the position lists against the bits. O(n).
    bool consistent() const;

private:
    BitString bits_;
    std::vector<std::uint32_t> zeros_;
    std::vector<std::uint32_t> ones_;
    std::vector<std::uint32_t> slot_;  // index of position i within its class list
};

}  // namespace asymea
