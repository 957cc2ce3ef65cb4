#include "fairpart/exact.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <unordered_map>
#include <vector>

#include "fairpart/audit.hpp"

namespace fairpart {

namespace {

using Clock = std::chrono::steady_clock;

long long elapsed_ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

/// Up to four contiguous zones (edge[z], edge[z+1]] with their standalone
/// majority colors. Candidate-group unhappiness against this local
/// partition is a sum of minority counts per overlapped zone.
struct LocalWindow {
    int edge[5];
    Color maj[4];
    int zones = 0;

    void push(const Instance& x, int from, int to) {
        if (to <= from) return;
        if (zones == 0) edge[0] = from;
        edge[zones + 1] = to;
        maj[zones] = majority_color(x, Interval{from, to - from, false});
        ++zones;
    }
};

long long window_unhappy(const Instance& x, const LocalWindow& w, int s, int e, Color c) {
    long long u = 0;
    for (int z = 0; z < w.zones; ++z) {
        if (w.maj[z] == c) continue;
        const int from = std::max(s, w.edge[z]);
        const int to = std::min(e, w.edge[z + 1]);
        if (to <= from) continue;
        const int red = x.reds_up_to(to) - x.reds_up_to(from);
        u += (c == Color::Red) ? red : (to - from) - red;
    }
    return u;
}

/// Scans candidates (s, e] with s in [s_lo, s_hi], e in
/// [max(s+lo, min_end), min(s+hi, end_cap)] and reports whether any meets
/// the deviation threshold for either color.
bool any_deviator(const Instance& x, const LocalWindow& w, const FairnessParams& p, int s_lo,
                  int s_hi, int min_end, int end_cap) {
    for (int s = s_lo; s <= s_hi; ++s) {
        const int e_lo = std::max(s + p.min_size(), min_end);
        const int e_hi = std::min(s + p.max_size(), end_cap);
        for (int e = e_lo; e <= e_hi; ++e) {
            if (deviation_threshold_met(window_unhappy(x, w, s, e, Color::Red), e - s, p))
                return true;
            if (deviation_threshold_met(window_unhappy(x, w, s, e, Color::Blue), e - s, p))
                return true;
        }
    }
    return false;
}

} // namespace

bool standalone_fair(const Instance& x, const Interval& interval, const FairnessParams& params) {
    if (!is_allowable(interval, params))
        throw std::invalid_argument("standalone_fair: interval not allowable");
    if (interval.wrap) throw std::invalid_argument("standalone_fair: wrapped interval");
    const Color minority = opposite(majority_color(x, interval));
    const int i = interval.start;
    const int j = interval.start + interval.len;
    for (int s = i; s <= j - params.min_size(); ++s) {
        const int e_hi = std::min(s + params.max_size(), j);
        for (int e = s + params.min_size(); e <= e_hi; ++e) {
            const int red = x.reds_up_to(e) - x.reds_up_to(s);
            const int u = (minority == Color::Red) ? red : (e - s) - red;
            if (deviation_threshold_met(u, e - s, params)) return false;
        }
    }
    return true;
}

bool fair4(const Instance& x, int b4, int b3, int b2, int b1, int end, const FairnessParams& params) {
    const int bs[5] = {b4, b3, b2, b1, end};
    for (int k = 0; k + 1 < 5; ++k)
        if (bs[k] > bs[k + 1]) throw std::invalid_argument("fair4: boundaries must be non-decreasing");
    if (b4 < 0 || end > x.size() || end <= b4) throw std::invalid_argument("fair4: empty or out-of-range window");

    LocalWindow w;
    for (int k = 0; k + 1 < 5; ++k) {
        if (bs[k + 1] == bs[k]) continue;
        if (!params.size_allowable(bs[k + 1] - bs[k]))
            throw std::invalid_argument("fair4: constituent interval not allowable");
        w.push(x, bs[k], bs[k + 1]);
    }
    return !any_deviator(x, w, params, b4, end - params.min_size(), 0, end);
}

SolveResult dp_solve(const Instance& x, const FairnessParams& params, const SolveOptions& options) {
    const auto t0 = Clock::now();
    SolveResult res;
    const int n = x.size();
    const int lo = params.min_size();
    const int hi = params.max_size();
    const int W = hi - lo + 1;

    if (lo > n) {
        res.stats.elapsed_ms = elapsed_ms_since(t0);
        return res;
    }

    bool use_cache = options.fair4_cache == Fair4Mode::On;
    if (options.fair4_cache == Fair4Mode::Auto) {
        const double spread = hi - lo;
        use_cache = static_cast<double>(n) * spread * spread * spread * spread >= 1e8;
    }
    if (n >= 1 << 16) use_cache = false; // memo key packs four 16-bit boundaries

    // truth(j, i1, i2, i3): a fair partition of (0, j] exists whose last
    // boundaries are i3 < i2 < i1 (zeros marking partitions of fewer than
    // four intervals). Cells are indexed by window offsets; offset slot 0 of
    // a coordinate is reserved for the degenerate value 0.
    const int stride_c = W + 1;
    const int stride_b = (W + 1) * (W + 1);
    const std::size_t per_j = static_cast<std::size_t>(W) * stride_b;
    std::vector<std::uint8_t> truth(static_cast<std::size_t>(n + 1) * per_j, 0);
    std::vector<std::int32_t> parent(truth.size(), -1);

    const auto cell = [&](int j, int i1, int i2, int i3) -> std::size_t {
        const int a = (j - lo) - i1;
        const int b = i2 == 0 ? 0 : (i1 - lo) - i2 + 1;
        const int c = i3 == 0 ? 0 : (i2 - lo) - i3 + 1;
        assert(a >= 0 && a < W && b >= 0 && b <= W && c >= 0 && c <= W);
        return static_cast<std::size_t>(j) * per_j + static_cast<std::size_t>(a) * stride_b +
               static_cast<std::size_t>(b) * stride_c + static_cast<std::size_t>(c);
    };

    std::vector<std::unordered_map<std::uint64_t, bool>> memo;
    if (use_cache) memo.resize(static_cast<std::size_t>(n) + 1);
    const auto cached_fair4 = [&](int b4, int b3, int b2, int b1, int j) {
        const std::uint64_t key = (static_cast<std::uint64_t>(b4) << 48) |
                                  (static_cast<std::uint64_t>(b3) << 32) |
                                  (static_cast<std::uint64_t>(b2) << 16) |
                                  static_cast<std::uint64_t>(b1);
        auto& slot = memo[static_cast<std::size_t>(j)];
        if (const auto it = slot.find(key); it != slot.end()) return it->second;
        const bool value = fair4(x, b4, b3, b2, b1, j, params);
        slot.emplace(key, value);
        return value;
    };

    std::vector<std::uint8_t> suffix_fair(static_cast<std::size_t>(W), 0);

    for (int j = lo; j <= n; ++j) {
        for (int a = 0; a < W; ++a) {
            const int i1 = (j - lo) - a;
            suffix_fair[static_cast<std::size_t>(a)] =
                i1 >= 0 && standalone_fair(x, Interval{i1, j - i1, false}, params);
        }

        if (j <= hi) { // single-interval partition of (0, j]
            ++res.stats.states;
            const std::size_t c0 = cell(j, 0, 0, 0);
            truth[c0] = suffix_fair[static_cast<std::size_t>(j - lo)];
            parent[c0] = 0;
        }

        for (int i1 = std::max(lo, j - hi); i1 <= j - lo; ++i1) {
            if (!suffix_fair[static_cast<std::size_t>((j - lo) - i1)]) continue;

            if (i1 <= hi) { // two-interval partition {(0,i1], (i1,j]}
                ++res.stats.states;
                if (truth[cell(i1, 0, 0, 0)]) {
                    ++res.stats.fair4_calls;
                    LocalWindow w;
                    w.push(x, 0, i1);
                    w.push(x, i1, j);
                    if (!any_deviator(x, w, params, std::max(0, i1 - hi + 1), i1 - 1, i1 + 1, j)) {
                        truth[cell(j, i1, 0, 0)] = 1;
                        parent[cell(j, i1, 0, 0)] = 0;
                    }
                }
            }

            for (int i2 = std::max(lo, i1 - hi); i2 <= i1 - lo; ++i2) {
                // Candidates straddling i1 that start inside (i2, i1] only
                // depend on these two zones; shared by every deeper state.
                LocalWindow near;
                near.push(x, i2, i1);
                near.push(x, i1, j);
                if (any_deviator(x, near, params, std::max(i2, i1 - hi + 1), i1 - 1, i1 + 1, j))
                    continue;

                if (i2 <= hi) { // three intervals: {(0,i2], (i2,i1], (i1,j]}
                    ++res.stats.states;
                    if (truth[cell(i1, i2, 0, 0)]) {
                        ++res.stats.fair4_calls;
                        LocalWindow w;
                        w.push(x, 0, i2);
                        w.push(x, i2, i1);
                        w.push(x, i1, j);
                        if (!any_deviator(x, w, params, std::max(0, i1 - hi + 1), i2 - 1, i1 + 1, j)) {
                            truth[cell(j, i1, i2, 0)] = 1;
                            parent[cell(j, i1, i2, 0)] = 0;
                        }
                    }
                }

                for (int i3 = std::max(lo, i2 - hi); i3 <= i2 - lo; ++i3) {
                    ++res.stats.states;
                    LocalWindow mid;
                    mid.push(x, i3, i2);
                    mid.push(x, i2, i1);
                    mid.push(x, i1, j);
                    if (any_deviator(x, mid, params, std::max(i3, i1 - hi + 1), i2 - 1, i1 + 1, j))
                        continue;

                    const std::size_t target = cell(j, i1, i2, i3);
                    for (int i4 = std::max(0, i3 - hi); i4 <= i3 - lo; ++i4) {
                        if (!truth[cell(i1, i2, i3, i4)]) continue;
                        ++res.stats.fair4_calls;
                        bool clean;
                        if (use_cache) {
                            clean = cached_fair4(i4, i3, i2, i1, j);
                        } else {
                            // Only candidates reaching into (i4, i3] are new
                            // at this depth; shallower ones were checked above
                            // or are covered by the sub-state's own audit.
                            const int s_lo = std::max(i4, i1 - hi + 1);
                            if (s_lo > i3 - 1) {
                                clean = true;
                            } else {
                                LocalWindow deep;
                                deep.push(x, i4, i3);
                                deep.push(x, i3, i2);
                                deep.push(x, i2, i1);
                                deep.push(x, i1, j);
                                clean = !any_deviator(x, deep, params, s_lo, i3 - 1, i1 + 1, j);
                            }
                        }
                        if (clean) {
                            truth[target] = 1;
                            parent[target] = i4; // smallest feasible i4 wins
                            break;
                        }
                    }
                }
            }
        }
    }

    // Accept in a fixed order: shortest suffix chain first.
    int f1 = -1, f2 = 0, f3 = 0;
    const auto take = [&](int i1, int i2, int i3) {
        if (f1 < 0 && truth[cell(n, i1, i2, i3)]) {
            f1 = i1;
            f2 = i2;
            f3 = i3;
        }
    };
    if (n >= lo && n <= hi) take(0, 0, 0);
    for (int i1 = std::max(lo, n - hi); i1 <= n - lo && f1 < 0; ++i1) {
        if (i1 <= hi) take(i1, 0, 0);
        for (int i2 = std::max(lo, i1 - hi); i2 <= i1 - lo && f1 < 0; ++i2) {
            if (i2 <= hi) take(i1, i2, 0);
            for (int i3 = std::max(lo, i2 - hi); i3 <= i2 - lo && f1 < 0; ++i3) take(i1, i2, i3);
        }
    }

    if (f1 >= 0) {
        res.feasible = true;
        std::vector<int> bounds{n};
        int j = n, a1 = f1, a2 = f2, a3 = f3;
        while (a1 > 0) {
            bounds.push_back(a1);
            const int i4 = parent[cell(j, a1, a2, a3)];
            assert(i4 >= 0);
            j = a1;
            a1 = a2;
            a2 = a3;
            a3 = i4;
        }
        bounds.push_back(0);
        std::reverse(bounds.begin(), bounds.end());
        Partition part(n, std::move(bounds));
        const AuditReport check = audit(x, part, params, Topology::Line, true);
        if (!check.is_fair || check.alpha != Rational(0))
            throw std::logic_error("dp_solve produced a partition that fails its own audit");
        res.partition = std::move(part);
    }

    res.stats.elapsed_ms = elapsed_ms_since(t0);
    return res;
}

namespace {

/// Lexicographic DFS over compositions of n into allowable parts, pruning a
/// prefix as soon as some candidate group inside it deviates; those flags
/// can never change as the partition grows, so the whole subtree is unfair.
class CompositionSearch {
public:
    CompositionSearch(const Instance& x, const FairnessParams& p, bool circle, SolveStats& stats)
        : x_(x), p_(p), circle_(circle), n_(x.size()), stats_(stats) {
        unhappy_red_.assign(static_cast<std::size_t>(n_) + 1, 0);
        unhappy_blue_.assign(static_cast<std::size_t>(n_) + 1, 0);
        bounds_.push_back(0);
    }

    std::optional<std::vector<int>> run() {
        if (dfs(0)) return bounds_;
        return std::nullopt;
    }

private:
    bool dfs(int b) {
        if (b == n_) return circle_ ? no_wrapped_deviator() : true;
        for (int len = p_.min_size(); len <= p_.max_size() && b + len <= n_; ++len) {
            if (!place(b, b + len)) continue;
            bounds_.push_back(b + len);
            if (dfs(b + len)) return true;
            bounds_.pop_back();
        }
        return false;
    }

    bool place(int b, int e) {
        ++stats_.states;
        const Color maj = majority_color(x_, Interval{b, e - b, false});
        for (int q = b + 1; q <= e; ++q) {
            const bool red = x_.color_at(q) == Color::Red;
            const bool unhappy = x_.color_at(q) != maj;
            unhappy_red_[static_cast<std::size_t>(q)] =
                unhappy_red_[static_cast<std::size_t>(q) - 1] + (unhappy && red ? 1 : 0);
            unhappy_blue_[static_cast<std::size_t>(q)] =
                unhappy_blue_[static_cast<std::size_t>(q) - 1] + (unhappy && !red ? 1 : 0);
        }
        for (int end = b + 1; end <= e; ++end) {
            for (int s = std::max(0, end - p_.max_size()); s <= end - p_.min_size(); ++s) {
                const long long red = unhappy_red_[static_cast<std::size_t>(end)] -
                                      unhappy_red_[static_cast<std::size_t>(s)];
                const long long blue = unhappy_blue_[static_cast<std::size_t>(end)] -
                                       unhappy_blue_[static_cast<std::size_t>(s)];
                if (deviation_threshold_met(red, end - s, p_)) return false;
                if (deviation_threshold_met(blue, end - s, p_)) return false;
            }
        }
        return true;
    }

    bool no_wrapped_deviator() const {
        const int max_len = std::min(p_.max_size(), n_);
        for (int s = std::max(1, n_ - max_len + 1); s < n_; ++s) {
            for (int len = std::max(p_.min_size(), n_ - s + 1); len <= max_len; ++len) {
                const int tail = s + len - n_;
                const long long red = (unhappy_red_[static_cast<std::size_t>(n_)] -
                                       unhappy_red_[static_cast<std::size_t>(s)]) +
                                      unhappy_red_[static_cast<std::size_t>(tail)];
                const long long blue = (unhappy_blue_[static_cast<std::size_t>(n_)] -
                                        unhappy_blue_[static_cast<std::size_t>(s)]) +
                                       unhappy_blue_[static_cast<std::size_t>(tail)];
                if (deviation_threshold_met(red, len, p_)) return false;
                if (deviation_threshold_met(blue, len, p_)) return false;
            }
        }
        return true;
    }

    const Instance& x_;
    const FairnessParams& p_;
    bool circle_;
    int n_;
    SolveStats& stats_;
    std::vector<long long> unhappy_red_;
    std::vector<long long> unhappy_blue_;
    std::vector<int> bounds_;
};

} // namespace

SolveResult brute_force_solve(const Instance& x, const FairnessParams& params, Topology topology,
                              const OracleOptions& options) {
    const auto t0 = Clock::now();
    const int n = x.size();
    if (n > options.cap && !options.force)
        throw OracleCapExceeded("instance size " + std::to_string(n) + " exceeds the oracle cap of " +
                                std::to_string(options.cap));

    SolveResult res;
    if (params.min_size() > n) {
        res.stats.elapsed_ms = elapsed_ms_since(t0);
        return res;
    }

    // The partition's cut at position 0/n is fixed on both topologies; the
    // circle only changes which candidate groups exist (they may wrap).
    CompositionSearch search(x, params, topology == Topology::Circle, res.stats);
    if (auto bounds = search.run()) {
        Partition part(n, std::move(*bounds));
        const AuditReport check = audit(x, part, params, topology, true);
        if (!check.is_fair || check.alpha != Rational(0))
            throw std::logic_error("oracle produced a partition that fails its own audit");
        res.feasible = true;
        res.partition = std::move(part);
    }

    res.stats.elapsed_ms = elapsed_ms_since(t0);
    return res;
}

} // namespace fairpart
