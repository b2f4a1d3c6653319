#include "asymea/controller.hpp"

#include <cmath>
#include <stdexcept>

namespace asymea {

std::string_view to_string(Direction d) noexcept { return d == Direction::up ? "up" : "down"; }

namespace {

constexpr double kGridSlack = 1e-9;

}  // namespace

StrengthController::StrengthController(double alpha, std::uint32_t phase_length)
    : alpha_(alpha), phase_length_(phase_length) {
    if (!(alpha > 0.0 && alpha < 0.25))
        throw std::invalid_argument("alpha must lie in (0, 1/4)");
    if (phase_length < 2 || phase_length % 2 != 0)
        throw std::invalid_argument("phase length N must be even and at least 2");

    // (1 - 4 alpha) / alpha is integral for alpha = 1/m; absorb rounding noise.
    top_ = static_cast<std::uint32_t>(std::ceil((1.0 - 4.0 * alpha) / alpha - kGridSlack));

    // Grid point nearest to 1/2, ties towards the lower index.
    k_ = 0;
    double best = std::abs(strength_at(0) - 0.5);
    for (std::uint32_t k = 1; k <= top_; ++k) {
        const double d = std::abs(strength_at(k) - 0.5);
        if (d < best - kGridSlack) {
            best = d;
            k_ = k;
        }
    }
}

double StrengthController::strength_at(std::uint32_t k) const noexcept {
    if (k >= top_) return 1.0 - 2.0 * alpha_;
    return static_cast<double>(k + 2) * alpha_;
}

ProbabilityPair StrengthController::current_pair(std::size_t zeros,
                                                 std::size_t ones) const noexcept {
    const double s0 = r0();
    const double s1 = r1();
    if (next_uses_minus()) return pair_from_strengths(s0 - alpha_, s1 + alpha_, zeros, ones);
    return pair_from_strengths(s0 + alpha_, s1 - alpha_, zeros, ones);
}

void StrengthController::record_outcome(bool strict_improvement) noexcept {
    ++t_;
    if (strict_improvement) b_ += (t_ % 2 == 1) ? -1 : 1;
}

void StrengthController::require_boundary() const {
    if (!at_phase_boundary())
        throw std::logic_error("phase_boundary_update called when t is not a multiple of N");
}

PhaseRecord StrengthController::apply_update(Direction d, bool tie) noexcept {
    PhaseRecord rec{t_ / phase_length_, r0(), b_, d, tie};
    if (d == Direction::up) {
        if (k_ < top_) ++k_;
    } else {
        if (k_ > 0) --k_;
    }
    b_ = 0;
    return rec;
}

}  // namespace asymea
