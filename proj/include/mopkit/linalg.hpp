#pragma once

#include <optional>
#include <vector>

#include "mopkit/rational.hpp"

namespace mopkit {

using CMatrix = std::vector<std::vector<ComplexRational>>;

// Fraction-free Bareiss elimination over Q(i).  Division by the previous pivot
// is exact; row swaps flip the sign.
inline ComplexRational det_bareiss(CMatrix a) {
    const size_t n = a.size();
    if (n == 0) return ComplexRational(1);
    ComplexRational sign(1);
    ComplexRational prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            size_t swap = k + 1;
            while (swap < n && a[swap][k].is_zero()) ++swap;
            if (swap == n) return ComplexRational(0);
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

// Exact solve of a square system; nullopt when singular.
inline std::optional<std::vector<ComplexRational>> solve_exact(CMatrix a,
                                                               std::vector<ComplexRational> b) {
    const size_t n = a.size();
    for (size_t k = 0; k < n; ++k) {
        size_t pivot = k;
        while (pivot < n && a[pivot][k].is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            std::swap(b[pivot], b[k]);
        }
        ComplexRational inv = ComplexRational(1) / a[k][k];
        for (size_t j = k; j < n; ++j) a[k][j] *= inv;
        b[k] *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k].is_zero()) continue;
            ComplexRational f = a[i][k];
            for (size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    return b;
}

}  // namespace mopkit
