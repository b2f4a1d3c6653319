#include "asymea/fitness.hpp"

#include <stdexcept>

namespace asymea {

Target Target::all_ones(std::size_t n) {
    BitString a(n);
    for (std::size_t i = 0; i < n; ++i) a.flip(i);
    return Target(std::move(a));
}

Target Target::all_zeros(std::size_t n) { return Target(BitString(n)); }

Target Target::half_split(std::size_t n) {
    BitString a(n);
    for (std::size_t i = n / 2; i < n; ++i) a.flip(i);
    return Target(std::move(a));
}

Target Target::parse(std::string_view preset, std::size_t n) {
    if (preset == "all-ones") return all_ones(n);
    if (preset == "all-zeros") return all_zeros(n);
    if (preset == "half-split") return half_split(n);
    constexpr std::string_view prefix = "pattern:";
    if (preset.starts_with(prefix)) {
        auto a = BitString::from_string(preset.substr(prefix.size()));
        if (a.size() != n)
            throw std::invalid_argument("target pattern length " + std::to_string(a.size()) +
                                        " does not match n = " + std::to_string(n));
        return Target(std::move(a));
    }
    throw std::invalid_argument("unknown target preset '" + std::string(preset) + "'");
}

std::size_t eval(const BitString& x, const Target& target) {
    return x.size() - hamming(x, target.bits());
}

bool is_optimum(const BitString& x, const Target& target) {
    return eval(x, target) == x.size();
}

BitProfile classify(const BitString& x, const Target& target) {
    const auto& a = target.bits();
    if (x.size() != a.size()) throw std::invalid_argument("classify: length mismatch");
    const auto wx = x.words();
    const auto wa = a.words();
    BitProfile p;
    for (std::size_t k = 0; k < wx.size(); ++k) {
        p.n11 += static_cast<std::uint64_t>(std::popcount(wx[k] & wa[k]));
        p.n10 += static_cast<std::uint64_t>(std::popcount(wx[k] & ~wa[k]));
        p.n01 += static_cast<std::uint64_t>(std::popcount(~wx[k] & wa[k]));
    }
    p.n00 = x.size() - p.n11 - p.n10 - p.n01;
    return p;
}

}  // namespace asymea
