#pragma once

#include <cstdint>
#include <string_view>

#include "asymea/mutation.hpp"
#include "asymea/random.hpp"

namespace asymea {

enum class Direction { down, up };
std::string_view to_string(Direction d) noexcept;

/// Outcome of one phase-boundary update.
struct PhaseRecord {
    std::uint64_t phase = 0;  // 1-based
    double r0 = 0.0;          // 0-strength in force during the phase
    std::int64_t b = 0;       // success balance at the boundary
    Direction direction = Direction::up;
    bool tie = false;         // direction chosen by coin flip

    friend bool operator==(const PhaseRecord&, const PhaseRecord&) = default;
};

/// Self-adjustment state for the asymmetric operator with r = 1.
///
/// The 0-strength lives on the grid r0 = 2*alpha + k*alpha, k = 0..K, with the
/// top point pinned to exactly 1 - 2*alpha. Only the index k is stored, so
/// clamping and grid membership are exact; r1 is always 1 - r0.
///
/// Iterations alternate between p- (odd t) and p+ (even t). Strict
/// improvements decrement b on odd t and increment it on even t. Every N
/// iterations r0 moves one grid step towards the better pair (coin flip on a
/// tie) and b resets.
class StrengthController {
public:
    /// Throws std::invalid_argument unless 0 < alpha < 1/4 and N is even and >= 2.
    StrengthController(double alpha, std::uint32_t phase_length);

    double alpha() const noexcept { return alpha_; }
    std::uint32_t phase_length() const noexcept { return phase_length_; }
    std::uint32_t grid_index() const noexcept { return k_; }
    std::uint32_t grid_top() const noexcept { return top_; }
    double r0() const noexcept { return strength_at(k_); }
    double r1() const noexcept { return 1.0 - r0(); }
    std::int64_t balance() const noexcept { return b_; }
    /// Iterations completed so far.
    std::uint64_t iteration() const noexcept { return t_; }
    std::uint32_t iterations_in_phase() const noexcept {
        return static_cast<std::uint32_t>(t_ % phase_length_);
    }

    double strength_at(std::uint32_t k) const noexcept;
    double min_strength() const noexcept { return 2.0 * alpha_; }
    double max_strength() const noexcept { return strength_at(top_); }

    /// True when the upcoming iteration t+1 is odd and uses p-.
    bool next_uses_minus() const noexcept { return (t_ + 1) % 2 == 1; }

    /// Pair for the upcoming iteration given the current counts of the search point.
    ProbabilityPair current_pair(std::size_t zeros, std::size_t ones) const noexcept;

    /// Completes the current iteration.
    void record_outcome(bool strict_improvement) noexcept;

    bool at_phase_boundary() const noexcept { return t_ > 0 && t_ % phase_length_ == 0; }

    /// Moves r0 one grid step according to b, resets b. Throws std::logic_error
    /// when not at a phase boundary.
    template <Bit64Generator G>
    PhaseRecord phase_boundary_update(G& rng) {
        require_boundary();
        const std::int64_t b = b_;
        const bool tie = b == 0;
        const Direction d = b > 0 ? Direction::up : b < 0 ? Direction::down
                            : fair_coin(rng)     ? Direction::up
                                                 : Direction::down;
        return apply_update(d, tie);
    }

private:
    void require_boundary() const;
    PhaseRecord apply_update(Direction d, bool tie) noexcept;

    double alpha_;
    std::uint32_t phase_length_;
    std::uint32_t top_;
    std::uint32_t k_;
    std::int64_t b_ = 0;
    std::uint64_t t_ = 0;
};

}  // namespace asymea
