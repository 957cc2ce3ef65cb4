#include "fairpart/constructive.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace fairpart {

AlmostUniformPlan plan_almost_uniform(int n, const FairnessParams& params) {
    const int base = params.min_size();
    if (n < base)
        throw std::invalid_argument("instance shorter than the smallest allowable interval");
    const int count = n / base;
    const int remainder = n - count * base;
    const int bump = remainder > 0 ? (remainder + count - 1) / count : 0;
    const int max_size = base + bump;
    if (max_size > params.max_size())
        throw std::invalid_argument("no almost-uniform partition fits the allowable size range");
    AlmostUniformPlan plan;
    plan.base_size = base;
    plan.interval_count = count;
    plan.remainder = remainder;
    plan.max_size = max_size;
    plan.size_ratio = Rational(max_size, params.sigma());
    plan.slack = plan.size_ratio - (Rational(1) - params.epsilon());
    return plan;
}

Partition almost_uniform_partition(int n, const FairnessParams& params) {
    const AlmostUniformPlan plan = plan_almost_uniform(n, params);
    const int rounds = plan.interval_count > 0 ? plan.remainder / plan.interval_count : 0;
    const int leftover = plan.remainder - rounds * plan.interval_count;
    std::vector<int> sizes(static_cast<std::size_t>(plan.interval_count));
    for (int t = 0; t < plan.interval_count; ++t) {
        sizes[static_cast<std::size_t>(t)] = plan.base_size + rounds + (t < leftover ? 1 : 0);
        assert(sizes[static_cast<std::size_t>(t)] == plan.max_size ||
               sizes[static_cast<std::size_t>(t)] == plan.max_size - 1);
    }
    return Partition::from_sizes(sizes);
}

bool guarantee_check(int n, const FairnessParams& params) {
    const AlmostUniformPlan plan = plan_almost_uniform(n, params);
    const long long top = plan.max_size;

    // Case bounds on the unhappy mass a candidate group can collect:
    // touching at most two intervals, containing one full middle interval,
    // and (only possible once epsilon reaches 1/3) containing two.
    long long worst = top;                                             // <= 2 intervals
    worst = std::max(worst, (params.max_size() - (top - 1)) + top / 2); // one full middle
    if (params.epsilon() >= Rational(1, 3))
        worst = std::max(worst, (params.max_size() - 2 * (top - 1)) + top); // two full middles

    for (int len = params.min_size(); len <= params.max_size(); ++len)
        if (deviation_threshold_met(worst, len, params)) return false;
    return true;
}

namespace {

/// Incremental partition builder over consumed point counts. `pending`
/// points have been consumed but not yet closed into an interval.
struct Builder {
    std::vector<int> bounds{0};
    int pos = 0;
    int pending = 0;

    // Consume `extra` new points and close the open interval (pending + extra).
    void close(int extra) {
        pos += extra;
        pending = 0;
        bounds.push_back(pos);
    }

    // Carve `len` fresh points (pending must be 0) into allowable intervals
    // with the smallest residual; the residual is consumed but left open.
    // Rule: t* = ceil(len/hi) intervals as equal as possible when t*·lo fits,
    // otherwise t*-1 intervals of hi with a residual below lo.
    int carve(int len, int lo, int hi) {
        if (len <= 0) return 0;
        const int want = (len + hi - 1) / hi;
        if (static_cast<long long>(want) * lo <= len) {
            const int base = len / want;
            const int extra = len % want;
            for (int k = 0; k < want; ++k) close(base + (k < extra ? 1 : 0));
            return 0;
        }
        for (int k = 0; k + 1 < want; ++k) close(hi);
        const int residual = len - (want - 1) * hi;
        pos += residual;
        pending = residual;
        return residual;
    }

    // Carve a monochromatic piece and close any residual on its own.
    void carve_standalone(int len, int lo, int hi) {
        if (len <= 0) return;
        if (carve(len, lo, hi) > 0) close(0);
    }
};

} // namespace

AlphaPartition partition_clustered(const Instance& x, const FairnessParams& params) {
    const int lo = params.min_size();
    const int hi = params.max_size();
    const int long_run = 2 * params.sigma();
    const auto& runs = x.runs();

    Builder b;
    std::size_t i = 0;
    while (i < runs.size()) {
        if (runs[i].length >= long_run) {
            int take = 0;
            if (b.pending > 0) {
                take = lo - b.pending;
                b.close(take);
            }
            b.carve(runs[i].length - take, lo, hi);
            ++i;
            continue;
        }

        // Maximal block of short runs.
        std::size_t k = i;
        int block = 0;
        while (k < runs.size() && runs[k].length < long_run) {
            block += runs[k].length;
            ++k;
        }
        if (b.pending + block >= lo) {
            // Absorb the block head into a completion of exactly lo points,
            // then keep the remaining short runs standalone (their points
            // are all happy; oversized pieces are carved).
            int used = lo - b.pending;
            b.close(used);
            for (std::size_t r = i; r < k; ++r) {
                const int len = runs[r].length;
                if (used >= len) {
                    used -= len;
                    continue;
                }
                b.carve_standalone(len - used, lo, hi);
                used = 0;
            }
        } else {
            // Bridge: the whole block joins the open interval and is
            // completed from the next long run (or split at the end).
            b.pos += block;
            b.pending += block;
        }
        i = k;
    }

    if (b.pending > 0) {
        // Input exhausted with an open interval: split it at run boundaries
        // so every leftover piece is monochromatic (and thus all-happy).
        const int start = b.pos - b.pending;
        int edge = 0;
        for (const auto& r : runs) {
            edge += r.length;
            if (edge > start && edge < b.pos) b.bounds.push_back(edge);
        }
        b.bounds.push_back(b.pos);
    }

    Partition partition(x.size(), std::move(b.bounds));
    AlphaPartition result{std::move(partition), {}, Rational(0)};
    long long outside = 0;
    for (int t = 0; t < result.partition.interval_count(); ++t) {
        const Interval iv = result.partition.interval(t);
        if (!is_allowable(iv, params)) {
            assert(iv.len < lo);
            result.non_allowable.push_back(t);
            outside += iv.len;
        }
    }
    result.alpha = Rational(outside, x.size());
    return result;
}

} // namespace fairpart
