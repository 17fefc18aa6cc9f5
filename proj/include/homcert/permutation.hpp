#pragma once

#include <utility>
#include <vector>

namespace homcert {

/// Sign of the permutation sorting `values` ascending (+1 even, -1 odd).
/// Values must be pairwise distinct.
template <typename T>
int sort_permutation_sign(std::vector<T> values) {
    int sign = 1;
    for (size_t i = 0; i < values.size(); ++i) {
        for (size_t j = i + 1; j < values.size(); ++j) {
            if (values[j] < values[i]) {
                std::swap(values[i], values[j]);
                sign = -sign;
            }
        }
    }
    return sign;
}

/// Sign of the interleave permutation taking the concatenation (a, b) of two
/// sorted disjoint lists to their merged sorted order.
template <typename T>
int interleave_sign(const std::vector<T>& a, const std::vector<T>& b) {
    long long inversions = 0;
    for (const T& x : a) {
        for (const T& y : b) {
            if (y < x) ++inversions;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace homcert
