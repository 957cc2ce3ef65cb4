#include "fairpart/core.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace fairpart {

namespace {

void check_interval(const Instance& x, const Interval& iv) {
    const int n = x.size();
    if (iv.len < 1) throw std::invalid_argument("empty interval");
    if (iv.wrap) {
        if (iv.start < 0 || iv.start >= n || iv.len > n)
            throw std::invalid_argument("circular interval out of range");
    } else {
        if (iv.start < 0 || iv.start + iv.len > n)
            throw std::invalid_argument("interval out of range");
    }
}

} // namespace

Instance Instance::parse(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;

        const std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) continue;
        if (line[first] == '#') continue;

        std::size_t i = first;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            if (j > i) tokens.emplace_back(line.substr(i, j - i));
            i = j;
        }
    }
    if (tokens.empty()) throw std::invalid_argument("empty instance payload");

    const auto is_color_token = [](const std::string& t) {
        return std::all_of(t.begin(), t.end(), [](char c) { return c == 'R' || c == 'B'; });
    };

    if (std::all_of(tokens.begin(), tokens.end(), is_color_token)) {
        std::vector<Color> colors;
        for (const auto& t : tokens)
            for (char c : t) colors.push_back(c == 'R' ? Color::Red : Color::Blue);
        return from_colors(std::move(colors));
    }

    std::vector<Run> runs;
    for (const auto& t : tokens) {
        std::size_t i = 0;
        long long count = 0;
        while (i < t.size() && t[i] >= '0' && t[i] <= '9') {
            count = count * 10 + (t[i] - '0');
            if (count > 1'000'000'000) throw std::invalid_argument("run token too large: " + t);
            ++i;
        }
        if (i == 0 || i + 1 != t.size() || (t[i] != 'R' && t[i] != 'B'))
            throw std::invalid_argument("malformed run token: " + t);
        if (count == 0) throw std::invalid_argument("zero-length run: " + t);
        runs.push_back(Run{t[i] == 'R' ? Color::Red : Color::Blue, static_cast<int>(count)});
    }
    return from_runs(runs);
}

Instance Instance::from_colors(std::vector<Color> colors) {
    if (colors.empty()) throw std::invalid_argument("empty instance");
    Instance x;
    x.colors_ = std::move(colors);
    x.build_views();
    return x;
}

Instance Instance::from_runs(const std::vector<Run>& runs) {
    if (runs.empty()) throw std::invalid_argument("empty instance");
    std::vector<Color> colors;
    for (const auto& r : runs) {
        if (r.length < 1) throw std::invalid_argument("zero-length run");
        colors.insert(colors.end(), static_cast<std::size_t>(r.length), r.color);
    }
    return from_colors(std::move(colors));
}

void Instance::build_views() {
    runs_.clear();
    for (Color c : colors_) {
        if (!runs_.empty() && runs_.back().color == c)
            ++runs_.back().length;
        else
            runs_.push_back(Run{c, 1});
    }
    red_prefix_.assign(colors_.size() + 1, 0);
    for (std::size_t i = 0; i < colors_.size(); ++i)
        red_prefix_[i + 1] = red_prefix_[i] + (colors_[i] == Color::Red ? 1 : 0);
}

Instance Instance::rotated(int offset) const {
    const int n = size();
    std::vector<Color> colors(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        colors[static_cast<std::size_t>(i)] = colors_[static_cast<std::size_t>((i + offset) % n + (offset < 0 ? n : 0)) % n];
    return from_colors(std::move(colors));
}

Instance Instance::color_swapped() const {
    std::vector<Color> colors(colors_.size());
    std::transform(colors_.begin(), colors_.end(), colors.begin(), [](Color c) { return opposite(c); });
    return from_colors(std::move(colors));
}

Instance Instance::reversed() const {
    std::vector<Color> colors(colors_.rbegin(), colors_.rend());
    return from_colors(std::move(colors));
}

std::string Instance::to_run_string() const {
    std::string out;
    for (const auto& r : runs_) {
        if (!out.empty()) out += ' ';
        out += std::to_string(r.length);
        out += color_char(r.color);
    }
    return out;
}

std::string Instance::to_char_string() const {
    std::string out;
    out.reserve(colors_.size());
    for (Color c : colors_) out += color_char(c);
    return out;
}

FairnessParams::FairnessParams(int sigma, Rational epsilon, Rational beta, BetaMode mode)
    : sigma_(sigma), epsilon_(epsilon), beta_(beta), mode_(mode) {
    if (sigma < 1) throw std::invalid_argument("sigma must be positive");
    if (epsilon < Rational(0) || epsilon > Rational(1, 2))
        throw std::invalid_argument("epsilon must lie in [0, 1/2]");
    if (beta < Rational(1, 2) || beta > Rational(1))
        throw std::invalid_argument("beta must lie in [1/2, 1]");
    min_size_ = static_cast<int>(((Rational(1) - epsilon_) * Rational(sigma_)).ceil());
    max_size_ = static_cast<int>(((Rational(1) + epsilon_) * Rational(sigma_)).floor());
    if (min_size_ > max_size_)
        throw std::invalid_argument("no integer interval size is allowable for these parameters");
}

Rational measure(const Interval& interval, const FairnessParams& params) {
    return Rational(interval.len, params.sigma());
}

bool is_allowable(const Interval& interval, const FairnessParams& params) {
    return params.size_allowable(interval.len);
}

ColorCount count_colors(const Instance& x, const Interval& iv) {
    check_interval(x, iv);
    const int n = x.size();
    int red = 0;
    if (iv.wrap && iv.start + iv.len > n) {
        red = (x.reds_up_to(n) - x.reds_up_to(iv.start)) + x.reds_up_to(iv.start + iv.len - n);
    } else {
        red = x.reds_up_to(iv.start + iv.len) - x.reds_up_to(iv.start);
    }
    return ColorCount{red, iv.len - red};
}

Color majority_color(const Instance& x, const Interval& iv) {
    const ColorCount c = count_colors(x, iv);
    if (c.red == c.blue) return tie_majority;
    return c.red > c.blue ? Color::Red : Color::Blue;
}

bool deviation_threshold_met(long long unhappy, long long interval_len, const FairnessParams& params) {
    if (unhappy < 0 || interval_len < 1)
        throw std::invalid_argument("deviation_threshold_met: bad arguments");
    if (2 * unhappy <= interval_len) return false;
    const Rational mass = params.beta() * Rational(params.sigma());
    return params.beta_mode() == BetaMode::Inclusive ? Rational(unhappy) >= mass
                                                     : Rational(unhappy) > mass;
}

} // namespace fairpart
