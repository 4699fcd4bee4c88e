#pragma once

#include "grcone/numeric.hpp"

#include <vector>

namespace grcone {

// Visits the sum of every r-element subset of `values`, in lexicographic
// order of the index tuples (0-based, strictly increasing).
template <typename Visit>
void for_each_subset_sum(const std::vector<Int>& values, int r, Visit&& visit) {
    const int n = static_cast<int>(values.size());
    std::vector<int> index(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        index[static_cast<std::size_t>(i)] = i;
    }
    while (true) {
        Int sum = 0;
        for (int i : index) {
            sum += values[static_cast<std::size_t>(i)];
        }
        visit(sum);

        int pos = r - 1;
        while (pos >= 0 && index[static_cast<std::size_t>(pos)] == n - r + pos) {
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++index[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < r; ++i) {
            index[static_cast<std::size_t>(i)] = index[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
}

} // namespace grcone
