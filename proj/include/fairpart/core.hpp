#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fairpart/rational.hpp"

namespace fairpart {

/// Point color. The order Red < Blue is fixed and used wherever output must
/// be deterministic.
enum class Color : std::uint8_t { Red = 0, Blue = 1 };

inline Color opposite(Color c) noexcept { return c == Color::Red ? Color::Blue : Color::Red; }
inline char color_char(Color c) noexcept { return c == Color::Red ? 'R' : 'B'; }

/// Color awarded on an exact tie. A convention, not a parameter.
inline constexpr Color tie_majority = Color::Blue;

struct Run {
    Color color;
    int length;
    bool operator==(const Run&) const = default;
};

/// Half-open range (start, start+len] of 1-based positions. When `wrap` is
/// set (circular instances) positions past n continue from 1 again.
struct Interval {
    int start = 0;
    int len = 0;
    bool wrap = false;
};

/// A colored point sequence with cached run-length and prefix-count views.
/// Immutable after construction.
class Instance {
public:
    /// Parses the shared instance text format: '#' lines are comments, the
    /// payload is either a bare R/B character string or whitespace-separated
    /// run tokens like "5R 3B". Adjacent same-color run tokens are merged.
    static Instance parse(std::string_view text);
    static Instance from_colors(std::vector<Color> colors);
    static Instance from_runs(const std::vector<Run>& runs);

    int size() const noexcept { return static_cast<int>(colors_.size()); }
    Color color_at(int position) const { return colors_.at(static_cast<std::size_t>(position) - 1); }
    const std::vector<Color>& colors() const noexcept { return colors_; }
    const std::vector<Run>& runs() const noexcept { return runs_; }

    /// Number of red points among positions 1..i (i in [0, n]).
    int reds_up_to(int i) const { return red_prefix_.at(static_cast<std::size_t>(i)); }

    /// Instance with colors shifted left by `offset` positions (circular).
    Instance rotated(int offset) const;
    /// Instance with every color swapped.
    Instance color_swapped() const;
    /// Instance read right to left.
    Instance reversed() const;

    std::string to_run_string() const;
    std::string to_char_string() const;

private:
    Instance() = default;
    void build_views();

    std::vector<Color> colors_;
    std::vector<Run> runs_;
    std::vector<int> red_prefix_;
};

enum class BetaMode : std::uint8_t { Strict, Inclusive };
enum class Topology : std::uint8_t { Line, Circle };

/// Fairness parameters (sigma, epsilon, beta) together with the derived
/// exact integer allowability bounds.
class FairnessParams {
public:
    FairnessParams(int sigma, Rational epsilon, Rational beta, BetaMode mode = BetaMode::Inclusive);

    int sigma() const noexcept { return sigma_; }
    const Rational& epsilon() const noexcept { return epsilon_; }
    const Rational& beta() const noexcept { return beta_; }
    BetaMode beta_mode() const noexcept { return mode_; }

    /// Smallest allowable interval size, ceil((1-epsilon)*sigma).
    int min_size() const noexcept { return min_size_; }
    /// Largest allowable interval size, floor((1+epsilon)*sigma).
    int max_size() const noexcept { return max_size_; }

    bool size_allowable(int len) const noexcept { return len >= min_size_ && len <= max_size_; }

private:
    int sigma_;
    Rational epsilon_;
    Rational beta_;
    BetaMode mode_;
    int min_size_;
    int max_size_;
};

/// Interval size in units of sigma, |I|/sigma.
Rational measure(const Interval& interval, const FairnessParams& params);

bool is_allowable(const Interval& interval, const FairnessParams& params);

/// Majority color of the points in `interval`; exact ties report Blue.
Color majority_color(const Instance& x, const Interval& interval);

struct ColorCount {
    int red = 0;
    int blue = 0;
};

ColorCount count_colors(const Instance& x, const Interval& interval);

/// Definition of a deviating count: the unhappy points must be a strict
/// majority of the interval, and must reach beta*sigma (>= in Inclusive
/// mode, > in Strict mode). Both comparisons are exact.
bool deviation_threshold_met(long long unhappy, long long interval_len, const FairnessParams& params);

} // namespace fairpart
