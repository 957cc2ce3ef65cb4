#include "fairpart/audit.hpp"

#include <stdexcept>

namespace fairpart {

HappinessIndex::HappinessIndex(const Instance& x, const Partition& partition) : n_(x.size()) {
    if (partition.n() != n_) throw std::invalid_argument("partition length does not match instance");
    const int count = partition.interval_count();
    majorities_.reserve(static_cast<std::size_t>(count));
    unhappy_.assign(static_cast<std::size_t>(n_), false);
    unhappy_red_.assign(static_cast<std::size_t>(n_) + 1, 0);
    unhappy_blue_.assign(static_cast<std::size_t>(n_) + 1, 0);

    for (int t = 0; t < count; ++t) {
        const Interval iv = partition.interval(t);
        const Color maj = majority_color(x, iv);
        majorities_.push_back(maj);
        for (int p = iv.start + 1; p <= iv.start + iv.len; ++p)
            unhappy_[static_cast<std::size_t>(p) - 1] = x.color_at(p) != maj;
    }
    for (int p = 1; p <= n_; ++p) {
        const bool u = unhappy_[static_cast<std::size_t>(p) - 1];
        const bool red = x.color_at(p) == Color::Red;
        unhappy_red_[static_cast<std::size_t>(p)] = unhappy_red_[static_cast<std::size_t>(p) - 1] + (u && red ? 1 : 0);
        unhappy_blue_[static_cast<std::size_t>(p)] = unhappy_blue_[static_cast<std::size_t>(p) - 1] + (u && !red ? 1 : 0);
    }
}

std::vector<DeviatingGroup> find_deviating_groups(const Instance& x, const Partition& partition,
                                                  const FairnessParams& params, Topology topology,
                                                  bool first_only) {
    const HappinessIndex happiness(x, partition);
    const int n = x.size();
    const int max_len = std::min(params.max_size(), n);

    std::vector<DeviatingGroup> groups;
    for (int start = 0; start < n; ++start) {
        for (int len = params.min_size(); len <= max_len; ++len) {
            if (topology == Topology::Line && start + len > n) break;
            const Interval candidate{start, len, start + len > n};
            for (Color color : {Color::Red, Color::Blue}) {
                const long long u = happiness.unhappy_in(color, candidate);
                if (deviation_threshold_met(u, len, params)) {
                    groups.push_back(DeviatingGroup{candidate, color, static_cast<int>(u), len});
                    if (first_only) return groups;
                }
            }
        }
    }
    return groups;
}

AuditReport audit(const Instance& x, const Partition& partition, const FairnessParams& params,
                  Topology topology, bool first_only) {
    AuditReport report;
    report.topology = topology;
    report.groups = find_deviating_groups(x, partition, params, topology, first_only);
    report.is_fair = report.groups.empty();

    const HappinessIndex happiness(x, partition);
    long long outside = 0;
    for (int t = 0; t < partition.interval_count(); ++t) {
        const Interval iv = partition.interval(t);
        const Color maj = happiness.majority_of(t);
        const long long u = happiness.unhappy_in(maj == Color::Red ? Color::Blue : Color::Red, iv);
        const bool ok = is_allowable(iv, params);
        if (!ok) outside += iv.len;
        report.intervals.push_back(IntervalStats{iv.start, iv.len, maj, static_cast<int>(u), ok});
    }
    report.alpha = Rational(outside, x.size());
    return report;
}

} // namespace fairpart
