#pragma once

#include <algorithm>
#include <vector>

#include "posetlab/poset.hpp"
#include "posetlab/rng.hpp"
#include "posetlab/set_family.hpp"

namespace posetlab::testutil {

// `size` distinct masks, uniform over 2^[n]; n <= 20.
inline SetFamily random_family(int n, std::size_t size, Rng& rng) {
    std::uint64_t space = std::uint64_t{1} << n;
    size = std::min<std::size_t>(size, space);
    std::vector<mask_t> sets;
    while (sets.size() < size) {
        mask_t m = rng.below(space);
        if (std::find(sets.begin(), sets.end(), m) == sets.end()) sets.push_back(m);
    }
    return make_family(n, std::move(sets));
}

inline SetFamily random_uniform_family(int n, int k, std::size_t size, Rng& rng) {
    std::vector<mask_t> pool = full_layer(n, k).sets;
    std::size_t take = std::min(size, pool.size());
    for (std::size_t i = 0; i < take; ++i) {
        std::size_t j = i + rng.below(pool.size() - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(take);
    return make_family(n, std::move(pool));
}

// Greedy random family with no 3-chain.
inline SetFamily random_2sperner_family(int n, std::size_t target, Rng& rng) {
    SetFamily fam{n, {}};
    std::vector<int> down, up; // longest chain ending at / starting from member
    std::uint64_t space = std::uint64_t{1} << n;
    std::size_t attempts = 0, cap = target * 50 + 200;
    while (fam.size() < target && attempts++ < cap) {
        mask_t g = rng.below(space);
        if (fam.contains(g)) continue;
        int d = 0, u = 0;
        for (std::size_t i = 0; i < fam.sets.size(); ++i) {
            mask_t m = fam.sets[i];
            if (m != g && (m & g) == m) d = std::max(d, down[i]);
            if (m != g && (m & g) == g) u = std::max(u, up[i]);
        }
        if (d + u > 1) continue;
        fam.sets.push_back(g);
        std::sort(fam.sets.begin(), fam.sets.end(), canonical_less);
        down.assign(fam.size(), 1);
        up.assign(fam.size(), 1);
        for (std::size_t i = 0; i < fam.sets.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if ((fam.sets[j] & fam.sets[i]) == fam.sets[j] && fam.sets[j] != fam.sets[i])
                    down[i] = std::max(down[i], down[j] + 1);
        for (std::size_t i = fam.sets.size(); i-- > 0;)
            for (std::size_t j = fam.sets.size(); j-- > i + 1;)
                if ((fam.sets[i] & fam.sets[j]) == fam.sets[i] && fam.sets[i] != fam.sets[j])
                    up[i] = std::max(up[i], up[j] + 1);
    }
    return fam;
}

// Greedy random butterfly-free family avoiding the empty set and [n].
inline SetFamily random_butterfly_free_family(int n, std::size_t target, Rng& rng) {
    SetFamily fam{n, {}};
    std::uint64_t space = std::uint64_t{1} << n;
    std::size_t attempts = 0, cap = target * 50 + 200;
    while (fam.size() < target && attempts++ < cap) {
        mask_t g = rng.below(space);
        if (g == 0 || g == full_mask(n)) continue;
        if (fam.contains(g)) continue;
        if (creates_butterfly(fam, g)) continue;
        fam.sets.push_back(g);
        std::sort(fam.sets.begin(), fam.sets.end(), canonical_less);
    }
    return fam;
}

} // namespace posetlab::testutil
