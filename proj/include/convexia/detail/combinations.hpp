#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "convexia/graph.hpp"

namespace convexia::detail {

/// Calls `visit(mask)` for every k-subset of `pool` in lexicographic order of
/// the chosen positions. Stops early when `visit` returns true; returns
/// whether it did.
template <class Visit>
bool for_each_combination(std::span<const Vertex> pool, std::size_t k, Visit&& visit) {
    const std::size_t n = pool.size();
    if (k > n) return false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        Mask m = 0;
        for (std::size_t i : idx) m |= bit(pool[i]);
        if (visit(m)) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace convexia::detail
