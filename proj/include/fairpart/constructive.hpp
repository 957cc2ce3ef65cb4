#pragma once

#include <vector>

#include "fairpart/core.hpp"
#include "fairpart/partition.hpp"

namespace fairpart {

/// Shape of the almost-uniform partition: every interval size lies in
/// {max_size-1, max_size} and the sizes sum to n.
struct AlmostUniformPlan {
    int base_size;       // smallest allowable size, the carving unit
    int interval_count;
    int remainder;       // points left after interval_count * base_size
    int max_size;        // largest produced interval size
    Rational size_ratio; // max_size / sigma
    Rational slack;      // size_ratio - (1 - epsilon)
};

/// Throws std::invalid_argument when n is too short or the extra points
/// would push intervals past the allowable maximum.
AlmostUniformPlan plan_almost_uniform(int n, const FairnessParams& params);

/// Builds the plan's partition: extra points are handed out round-robin
/// from the first interval, one per round, so sizes differ by at most one.
Partition almost_uniform_partition(int n, const FairnessParams& params);

/// Conservative certificate: true only when exact case bounds on the
/// unhappy mass of any candidate group rule out every deviation against the
/// almost-uniform partition, for every instance of length n. True implies
/// the audit of almost_uniform_partition is fair on any coloring; false
/// makes no claim either way.
bool guarantee_check(int n, const FairnessParams& params);

/// Partition in which every non-allowable interval is smaller than the
/// allowable minimum; alpha is the fraction of points those intervals hold.
struct AlphaPartition {
    Partition partition;
    std::vector<int> non_allowable; // interval indices
    Rational alpha;
};

/// Clustered-instance partitioner. Long runs (length >= 2*sigma) are carved
/// into allowable intervals with the smallest possible residual; residuals
/// are completed to exactly min_size points from the next run; regions of
/// short runs are either absorbed behind such a completion or bridged into
/// one, with leftovers kept as standalone intervals whose points are all
/// happy. The result is fair for every beta in [1/2, 1] when all runs reach
/// 2*sigma.
AlphaPartition partition_clustered(const Instance& x, const FairnessParams& params);

} // namespace fairpart
