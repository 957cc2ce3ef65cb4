#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fairpart/core.hpp"

namespace fairpart {

/// Ordered boundary list 0 = b0 < b1 < ... < bT = n defining the contiguous
/// intervals (b(t-1), bt]. Immutable after construction.
class Partition {
public:
    Partition(int n, std::vector<int> boundaries) : n_(n), boundaries_(std::move(boundaries)) {
        if (n_ < 1) throw std::invalid_argument("partition of empty range");
        if (boundaries_.size() < 2 || boundaries_.front() != 0 || boundaries_.back() != n_)
            throw std::invalid_argument("partition boundaries must run from 0 to n");
        for (std::size_t i = 1; i < boundaries_.size(); ++i)
            if (boundaries_[i] <= boundaries_[i - 1])
                throw std::invalid_argument("partition boundaries must be strictly increasing");
    }

    static Partition from_sizes(const std::vector<int>& sizes) {
        std::vector<int> bounds{0};
        for (int s : sizes) {
            if (s < 1) throw std::invalid_argument("partition interval sizes must be positive");
            bounds.push_back(bounds.back() + s);
        }
        const int n = bounds.back();
        return Partition(n, std::move(bounds));
    }

    /// Parses the text boundary format, e.g. "0 10 20 30".
    static Partition parse_text(std::string_view text) {
        std::istringstream in{std::string(text)};
        std::vector<int> bounds;
        long long v = 0;
        while (in >> v) bounds.push_back(static_cast<int>(v));
        if (!in.eof()) throw std::invalid_argument("malformed partition boundary list");
        if (bounds.empty()) throw std::invalid_argument("empty partition boundary list");
        const int n = bounds.back();
        return Partition(n, std::move(bounds));
    }

    int n() const noexcept { return n_; }
    int interval_count() const noexcept { return static_cast<int>(boundaries_.size()) - 1; }
    const std::vector<int>& boundaries() const noexcept { return boundaries_; }

    Interval interval(int t) const {
        const auto i = static_cast<std::size_t>(t);
        if (t < 0 || i + 1 >= boundaries_.size()) throw std::out_of_range("partition interval index");
        return Interval{boundaries_[i], boundaries_[i + 1] - boundaries_[i], false};
    }

    /// Index of the interval containing 1-based position p.
    int interval_of(int p) const {
        if (p < 1 || p > n_) throw std::out_of_range("position outside partition");
        int lo = 0, hi = interval_count() - 1;
        while (lo < hi) {
            const int mid = (lo + hi) / 2;
            if (boundaries_[static_cast<std::size_t>(mid) + 1] >= p) hi = mid; else lo = mid + 1;
        }
        return lo;
    }

    std::string to_text() const {
        std::string out;
        for (std::size_t i = 0; i < boundaries_.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(boundaries_[i]);
        }
        return out;
    }

    bool operator==(const Partition& o) const = default;

private:
    int n_;
    std::vector<int> boundaries_;
};

} // namespace fairpart
