#pragma once

#include <optional>
#include <stdexcept>

#include "fairpart/core.hpp"
#include "fairpart/partition.hpp"

namespace fairpart {

struct SolveStats {
    long long states = 0;
    long long fair4_calls = 0;
    long long elapsed_ms = 0;
};

/// Result of a feasibility solve.
struct SolveResult {
    bool feasible = false;
    std::optional<Partition> partition;
    SolveStats stats;
};

enum class Fair4Mode : std::uint8_t { Off, On, Auto };

struct SolveOptions {
    // Memoized whole-window fairness checks. Auto switches on once
    // n * (max_size - min_size)^4 reaches 1e8.
    Fair4Mode fair4_cache = Fair4Mode::Auto;
};

/// True iff no allowable sub-interval of `interval` meets the deviation
/// threshold when `interval` stands alone (its minority points unhappy).
/// Throws if the interval itself is not allowable.
bool standalone_fair(const Instance& x, const Interval& interval, const FairnessParams& params);

/// True iff no allowable candidate inside (b4, end] deviates against the
/// local partition {(b4,b3], (b3,b2], (b2,b1], (b1,end]}; duplicate
/// boundaries collapse (degenerate shorter windows). Throws when a
/// non-degenerate constituent interval is not allowable.
bool fair4(const Instance& x, int b4, int b3, int b2, int b1, int end, const FairnessParams& params);

/// Decides whether a balanced partition with no deviating group exists on a
/// line and reconstructs one when it does. Any returned partition is
/// re-audited before being handed back.
SolveResult dp_solve(const Instance& x, const FairnessParams& params, const SolveOptions& options = {});

struct OracleCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleOptions {
    int cap = 60;       // largest n accepted without force
    bool force = false;
};

/// Exhaustive oracle: enumerates every composition of n into allowable
/// parts in lexicographic boundary order and returns the first one whose
/// audit is fair. The partition cut at position 0 stays fixed on the
/// circle; only candidate groups wrap there. Throws OracleCapExceeded
/// above the cap unless forced.
SolveResult brute_force_solve(const Instance& x, const FairnessParams& params, Topology topology,
                              const OracleOptions& options = {});

} // namespace fairpart
