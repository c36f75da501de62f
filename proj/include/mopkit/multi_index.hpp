#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "mopkit/errors.hpp"

namespace mopkit {

// The vector n = (n_1,...,n_m) of orthogonality-condition counts.
class MultiIndex {
public:
    MultiIndex() : n_{0} {}
    explicit MultiIndex(std::vector<int> entries) : n_(std::move(entries)) {
        if (n_.empty()) throw MopkitError("MultiIndex: m >= 1 required");
        for (int v : n_)
            if (v < 0) throw MopkitError("MultiIndex: entries must be non-negative");
    }

    int m() const { return static_cast<int>(n_.size()); }
    int operator[](int j) const { return n_[static_cast<size_t>(j)]; }
    int total() const { return std::accumulate(n_.begin(), n_.end(), 0); }
    const std::vector<int>& entries() const { return n_; }

    // s(n) = (n_1, n_1+n_2, ..., |n|).
    std::vector<int> partial_sums() const {
        std::vector<int> s(n_.size());
        std::partial_sum(n_.begin(), n_.end(), s.begin());
        return s;
    }

    MultiIndex with_increment(int j, int delta = 1) const {
        auto v = n_;
        v[static_cast<size_t>(j)] += delta;
        return MultiIndex(v);
    }

    bool operator==(const MultiIndex& o) const { return n_ == o.n_; }

    std::string str() const {
        std::string out = "(";
        for (size_t i = 0; i < n_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(n_[i]);
        }
        return out + ")";
    }

private:
    std::vector<int> n_;
};

}  // namespace mopkit
