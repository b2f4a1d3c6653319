#include "asymea/bitstring.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace asymea {

BitString::BitString(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {
    if (n == 0) throw std::invalid_argument("BitString: length must be positive");
}

BitString BitString::from_string(std::string_view text) {
    BitString x(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') {
            x.flip(i);
        } else if (text[i] != '0') {
            throw std::invalid_argument("BitString: invalid character '" +
                                        std::string(1, text[i]) + "'");
        }
    }
    return x;
}

bool BitString::test(std::size_t i) const {
    if (i >= size_) throw std::out_of_range("BitString: index out of range");
    return (*this)[i];
}

std::size_t BitString::recount_ones() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::string BitString::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if ((*this)[i]) s[i] = '1';
    return s;
}

std::size_t hamming(const BitString& x, const BitString& y) {
    if (x.size() != y.size()) throw std::invalid_argument("hamming: length mismatch");
    const auto wx = x.words();
    const auto wy = y.words();
    std::size_t d = 0;
    for (std::size_t k = 0; k < wx.size(); ++k)
        d += static_cast<std::size_t>(std::popcount(wx[k] ^ wy[k]));
    return d;
}

BitString apply_flips(const BitString& x, std::span<const std::size_t> positions) {
    BitString y = x;
    for (auto i : positions) {
        if (i >= x.size()) throw std::out_of_range("apply_flips: position out of range");
        y.flip(i);
    }
    if (positions.size() > 1) {
        std::vector<std::size_t> sorted(positions.begin(), positions.end());
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("apply_flips: duplicate position");
    }
    return y;
}

IndexedBitString::IndexedBitString(BitString bits)
    : bits_(std::move(bits)), slot_(bits_.size()) {
    if (bits_.size() > std::numeric_limits<std::uint32_t>::max())
        throw std::invalid_argument("IndexedBitString: length exceeds 32-bit positions");
    zeros_.reserve(bits_.count_zeros());
    ones_.reserve(bits_.count_ones());
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        auto& list = bits_[i] ? ones_ : zeros_;
        slot_[i] = static_cast<std::uint32_t>(list.size());
        list.push_back(static_cast<std::uint32_t>(i));
    }
}

void IndexedBitString::flip(std::size_t i) noexcept {
    const bool was_one = bits_[i];
    auto& from = was_one ? ones_ : zeros_;
    auto& to = was_one ? zeros_ : ones_;
    const std::uint32_t s = slot_[i];
    const std::uint32_t moved = from.back();
    from[s] = moved;
    slot_[moved] = s;
    from.pop_back();
    slot_[i] = static_cast<std::uint32_t>(to.size());
    to.push_back(static_cast<std::uint32_t>(i));
    bits_.flip(i);
}

bool IndexedBitString::consistent() const {
    if (zeros_.size() != bits_.count_zeros() || ones_.size() != bits_.count_ones())
        return false;
    if (bits_.recount_ones() != bits_.count_ones()) return false;
    for (std::size_t k = 0; k < zeros_.size(); ++k)
        if (bits_[zeros_[k]] || slot_[zeros_[k]] != k) return false;
    for (std::size_t k = 0; k < ones_.size(); ++k)
        if (!bits_[ones_[k]] || slot_[ones_[k]] != k) return false;
    return true;
}

}  // namespace asymea
