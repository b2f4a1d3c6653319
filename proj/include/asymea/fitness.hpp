#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "asymea/bitstring.hpp"

namespace asymea {

/// Hidden target `a` of OneMax_a.
class Target {
public:
    explicit Target(BitString a) : a_(std::move(a)) {}

    static Target all_ones(std::size_t n);
    static Target all_zeros(std::size_t n);
    /// 0^{floor(n/2)} 1^{ceil(n/2)}
    static Target half_split(std::size_t n);

    /// Preset names `all-ones`, `all-zeros`, `half-split`, or `pattern:<bits>`.
    /// For `pattern:` the pattern length must equal n.
    static Target parse(std::string_view preset, std::size_t n);

    const BitString& bits() const noexcept { return a_; }
    std::size_t size() const noexcept { return a_.size(); }
    std::size_t ones() const noexcept { return a_.count_ones(); }
    std::size_t zeros() const noexcept { return a_.count_zeros(); }
    /// min(ones, zeros)
    std::size_t z() const noexcept { return ones() < zeros() ? ones() : zeros(); }

private:
    BitString a_;
};

/// Counts of positions by (x value, target value): n_vw = |{i : x_i = v, a_i = w}|.
struct BitProfile {
    std::uint64_t n00 = 0;
    std::uint64_t n01 = 0;
    std::uint64_t n10 = 0;
    std::uint64_t n11 = 0;

    std::uint64_t size() const noexcept { return n00 + n01 + n10 + n11; }
    std::uint64_t zeros() const noexcept { return n00 + n01; }
    std::uint64_t ones() const noexcept { return n10 + n11; }
    std::uint64_t fitness() const noexcept { return n00 + n11; }

    friend bool operator==(const BitProfile&, const BitProfile&) = default;
};

/// OneMax_a(x) = n - H(x, a).
std::size_t eval(const BitString& x, const Target& target);
bool is_optimum(const BitString& x, const Target& target);
BitProfile classify(const BitString& x, const Target& target);

}  // namespace asymea
