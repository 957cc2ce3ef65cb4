#pragma once

#include <vector>

#include "fairpart/core.hpp"
#include "fairpart/partition.hpp"

namespace fairpart {

/// Per-point happiness of an instance under a partition, with prefix sums
/// for O(1) unhappy-count range queries after O(n) construction.
class HappinessIndex {
public:
    HappinessIndex(const Instance& x, const Partition& partition);

    Color majority_of(int interval_index) const { return majorities_.at(static_cast<std::size_t>(interval_index)); }
    bool unhappy(int position) const { return unhappy_.at(static_cast<std::size_t>(position) - 1); }

    /// Unhappy points of `color` in (i, j].
    long long unhappy_in_range(Color color, int i, int j) const {
        const auto& pre = color == Color::Red ? unhappy_red_ : unhappy_blue_;
        return pre[static_cast<std::size_t>(j)] - pre[static_cast<std::size_t>(i)];
    }

    /// Unhappy points of `color` in an interval, wrap-aware.
    long long unhappy_in(Color color, const Interval& iv) const {
        if (iv.wrap && iv.start + iv.len > n_)
            return unhappy_in_range(color, iv.start, n_) + unhappy_in_range(color, 0, iv.start + iv.len - n_);
        return unhappy_in_range(color, iv.start, iv.start + iv.len);
    }

    long long total_unhappy() const {
        return unhappy_red_.back() + unhappy_blue_.back();
    }

private:
    int n_;
    std::vector<Color> majorities_;
    std::vector<bool> unhappy_;
    std::vector<long long> unhappy_red_;
    std::vector<long long> unhappy_blue_;
};

/// A witness interval whose monochromatic unhappy points meet the deviation
/// threshold against some partition.
struct DeviatingGroup {
    Interval interval;
    Color color;
    int unhappy_count;
    int size;
};

struct IntervalStats {
    int start;
    int len;
    Color majority;
    int unhappy;
    bool allowable;
};

struct AuditReport {
    bool is_fair;
    Rational alpha;             // fraction of points in non-allowable intervals
    Topology topology;
    std::vector<DeviatingGroup> groups;
    std::vector<IntervalStats> intervals;
};

/// Enumerates every allowable candidate interval (wrapped candidates too on
/// a circle) and returns those meeting the deviation threshold, ordered by
/// (start, len, color). With `first_only` the scan stops at the first hit.
std::vector<DeviatingGroup> find_deviating_groups(const Instance& x, const Partition& partition,
                                                  const FairnessParams& params, Topology topology,
                                                  bool first_only = false);

AuditReport audit(const Instance& x, const Partition& partition, const FairnessParams& params,
                  Topology topology, bool first_only = false);

} // namespace fairpart
