#include "leibniz/shuffle.hpp"

namespace leibniz {

int permutation_sign(std::span<const std::size_t> perm) {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

std::vector<Shuffle> shuffles(std::size_t k, std::size_t q) {
    const std::size_t total = k + q;
    std::vector<Shuffle> out;
    // `first` walks the k-subsets of {0..total-1} in lexicographic order.
    std::vector<std::size_t> first(k);
    for (std::size_t i = 0; i < k; ++i) first[i] = i;
    while (true) {
        Shuffle s;
        s.image.reserve(total);
        s.image.insert(s.image.end(), first.begin(), first.end());
        std::size_t next = 0;
        for (std::size_t v = 0; v < total; ++v) {
            if (next < k && first[next] == v) {
                ++next;
                continue;
            }
            s.image.push_back(v);
        }
        s.sign = permutation_sign(s.image);
        out.push_back(std::move(s));

        std::size_t i = k;
        while (i > 0 && first[i - 1] == total - k + (i - 1)) --i;
        if (i == 0) break;
        ++first[i - 1];
        for (std::size_t j = i; j < k; ++j) first[j] = first[j - 1] + 1;
    }
    return out;
}

}  // namespace leibniz
