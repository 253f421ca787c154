#include "modmat/matroid.hpp"

namespace modmat {

Matroid3::Matroid3(int ground_size, std::vector<Triple> nonbases) : m_(ground_size) {
    for (Triple& t : nonbases) {
        std::sort(t.begin(), t.end());
        if (t[0] == t[1] || t[1] == t[2])
            fail("InvalidArgument", "non-basis must have three distinct elements");
        if (t[0] < 0 || t[2] >= m_) fail("InvalidArgument", "non-basis element out of range");
    }
    std::sort(nonbases.begin(), nonbases.end());
    nonbases.erase(std::unique(nonbases.begin(), nonbases.end()), nonbases.end());
    nb_ = std::move(nonbases);
}

bool Matroid3::is_nonbasis(int a, int b, int c) const {
    Triple t{a, b, c};
    std::sort(t.begin(), t.end());
    return std::binary_search(nb_.begin(), nb_.end(), t);
}

Matroid3 tn_matroid(int n) {
    if (n < 3) fail("InvalidArgument", "tn_matroid requires n >= 3");
    std::vector<Triple> nb;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if ((i + j + k) % n == 0) nb.push_back({i, j, k});
    return Matroid3(n, std::move(nb));
}

Matroid3 special_matroid(SpecialMatroid which) {
    if (which == SpecialMatroid::T5prime) {
        // paper atoms 1..7, shifted to 0..6
        std::vector<Triple> nb = {{0, 5, 6}, {1, 2, 6}, {1, 3, 5}, {2, 4, 5}, {3, 4, 6}};
        return Matroid3(7, std::move(nb));
    }
    // T6': non-bases are all 3-subsets of the listed blocks (atoms 1..15).
    const std::vector<std::vector<int>> blocks = {
        {1, 12, 13},       {3, 6, 15},        {3, 8, 12},        {5, 8, 10},
        {1, 2, 3, 4, 5},   {1, 6, 7, 8, 9},   {2, 6, 10, 11, 12}, {3, 7, 10, 13, 14},
        {4, 8, 11, 13, 15}, {5, 9, 12, 14, 15}};
    std::vector<Triple> nb;
    for (const auto& blk : blocks) {
        const int s = (int)blk.size();
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j)
                for (int k = j + 1; k < s; ++k)
                    nb.push_back({blk[i] - 1, blk[j] - 1, blk[k] - 1});
    }
    return Matroid3(15, std::move(nb));
}

} // namespace modmat
