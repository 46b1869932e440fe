#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace leibniz {

/// A (k,q)-shuffle σ of {0, ..., k+q-1}: σ(0) < ... < σ(k-1) and
/// σ(k) < ... < σ(k+q-1). `image[i]` is σ(i).
struct Shuffle {
    std::vector<std::size_t> image;
    int sign = 1;

    bool operator==(const Shuffle&) const = default;
    auto operator<=>(const Shuffle&) const = default;
};

/// Sign of a permutation of {0, ..., n-1} by inversion count.
int permutation_sign(std::span<const std::size_t> perm);

/// All (k,q)-shuffles, generated from the k-subsets taken by the first block,
/// in lexicographic order of those subsets. There are C(k+q, k) of them.
std::vector<Shuffle> shuffles(std::size_t k, std::size_t q);

}  // namespace leibniz
