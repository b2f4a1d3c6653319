#include "asymea/mutation.hpp"

#include <stdexcept>
#include <string>

namespace asymea {

ProbabilityPair ProbabilityPair::checked(double p0, double p1) {
    // Written so that NaN fails too.
    if (!(p0 >= 0.0 && p0 <= 1.0)) throw std::invalid_argument("p0 must lie in [0, 1]");
    if (!(p1 >= 0.0 && p1 <= 1.0)) throw std::invalid_argument("p1 must lie in [0, 1]");
    return {p0, p1};
}

ProbabilityPair pair_from_strengths(double strength0, double strength1, std::size_t zeros,
                                    std::size_t ones) noexcept {
    return {zeros == 0 ? 0.0 : strength0 / static_cast<double>(zeros),
            ones == 0 ? 0.0 : strength1 / static_cast<double>(ones)};
}

ProbabilityPair static_pair(std::size_t zeros, std::size_t ones) noexcept {
    return pair_from_strengths(0.5, 0.5, zeros, ones);
}

std::string_view to_string(Operator op) noexcept {
    switch (op) {
        case Operator::standard: return "standard";
        case Operator::static_asym: return "static-asym";
        case Operator::self_adjusting_asym: return "self-adjusting-asym";
    }
    return "?";
}

Operator parse_operator(std::string_view name) {
    if (name == "standard") return Operator::standard;
    if (name == "static-asym") return Operator::static_asym;
    if (name == "self-adjusting-asym") return Operator::self_adjusting_asym;
    throw std::invalid_argument("unknown operator '" + std::string(name) + "'");
}

}  // namespace asymea
