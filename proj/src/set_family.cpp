#include "posetlab/set_family.hpp"

#include <algorithm>
#include <stdexcept>

namespace posetlab {

bool SetFamily::contains(mask_t m) const {
    auto it = std::lower_bound(sets.begin(), sets.end(), m, canonical_less);
    return it != sets.end() && *it == m;
}

SetFamily make_family(int n, std::vector<mask_t> sets) {
    if (n < 1 || n > kMaxGround) throw std::out_of_range("SetFamily: n must be in [1,63]");
    mask_t full = full_mask(n);
    for (mask_t m : sets) {
        if (m & ~full) throw std::invalid_argument("SetFamily: mask uses elements beyond n");
    }
    std::sort(sets.begin(), sets.end(), canonical_less);
    if (std::adjacent_find(sets.begin(), sets.end()) != sets.end())
        throw std::invalid_argument("SetFamily: duplicate set");
    return SetFamily{n, std::move(sets)};
}

SetFamily full_layer(int n, int k) {
    if (n < 1 || n > kMaxGround) throw std::out_of_range("full_layer: bad n");
    if (k < 0 || k > n) throw std::out_of_range("full_layer: k out of [0,n]");
    std::vector<mask_t> out;
    out.reserve(binomial(n, k));
    if (k == 0) {
        out.push_back(0);
    } else {
        // Gosper's hack walks the layer in ascending (= colex) order.
        mask_t v = (mask_t{1} << k) - 1;
        mask_t limit = full_mask(n);
        while (v <= limit) {
            out.push_back(v);
            mask_t c = v & (~v + 1);
            mask_t r = v + c;
            if (r > limit || r < v) break;
            v = (((r ^ v) >> 2) / c) | r;
        }
    }
    return SetFamily{n, std::move(out)};
}

SetFamily layer_union(int n, const std::vector<int>& ks) {
    std::vector<mask_t> out;
    std::vector<int> sorted = ks;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int k : sorted) {
        SetFamily layer = full_layer(n, k);
        out.insert(out.end(), layer.sets.begin(), layer.sets.end());
    }
    return SetFamily{n, std::move(out)};
}

SetFamily power_set(int n) {
    if (n < 1 || n > 20) throw std::out_of_range("power_set: n out of [1,20]");
    std::vector<mask_t> out;
    out.reserve(std::size_t{1} << n);
    for (mask_t m = 0; m < (mask_t{1} << n); ++m) out.push_back(m);
    std::sort(out.begin(), out.end(), canonical_less);
    return SetFamily{n, std::move(out)};
}

mask_t mask_of(std::initializer_list<int> elems) {
    mask_t m = 0;
    for (int e : elems) m |= mask_t{1} << (e - 1);
    return m;
}

std::vector<int> elements_of(mask_t m) {
    std::vector<int> out;
    while (m) {
        int b = std::countr_zero(m);
        out.push_back(b + 1);
        m &= m - 1;
    }
    return out;
}

std::vector<mask_t> submasks_of_size(mask_t m, int k) {
    std::vector<int> el = elements_of(m);
    int w = static_cast<int>(el.size());
    std::vector<mask_t> out;
    if (k < 0 || k > w) return out;
    if (k == 0) return {0};
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        mask_t s = 0;
        for (int i : idx) s |= mask_t{1} << (el[i] - 1);
        out.push_back(s);
        int p = k - 1;
        while (p >= 0 && idx[p] == w - k + p) --p;
        if (p < 0) break;
        ++idx[p];
        for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
    }
    return out;
}

std::vector<mask_t> supermasks_of_size(mask_t m, int k, int n) {
    int w = popcount(m);
    std::vector<mask_t> out;
    if (k < w || k > n) return out;
    mask_t avail = full_mask(n) & ~m;
    for (mask_t add : submasks_of_size(avail, k - w)) out.push_back(m | add);
    return out;
}

static SetFamily sorted_unique(int n, std::vector<mask_t> out) {
    std::sort(out.begin(), out.end(), canonical_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return SetFamily{n, std::move(out)};
}

SetFamily shadow(const SetFamily& F, int k) {
    if (k < 0 || k > F.n) throw std::out_of_range("shadow: k out of [0,n]");
    std::vector<mask_t> out;
    for (mask_t m : F.sets) {
        if (popcount(m) <= k) continue; // strict containment only
        for (mask_t s : submasks_of_size(m, k)) out.push_back(s);
    }
    return sorted_unique(F.n, std::move(out));
}

SetFamily shade(const SetFamily& F, int k) {
    if (k < 0 || k > F.n) throw std::out_of_range("shade: k out of [0,n]");
    std::vector<mask_t> out;
    for (mask_t m : F.sets) {
        if (popcount(m) >= k) continue;
        for (mask_t s : supermasks_of_size(m, k, F.n)) out.push_back(s);
    }
    return sorted_unique(F.n, std::move(out));
}

SetFamily shift_family(const SetFamily& F, int i, int j) {
    if (!(1 <= i && i < j && j <= F.n))
        throw std::invalid_argument("shift: need 1 <= i < j <= n (left shifts only)");
    mask_t bi = mask_t{1} << (i - 1), bj = mask_t{1} << (j - 1);
    std::vector<mask_t> out;
    out.reserve(F.sets.size());
    for (mask_t m : F.sets) {
        if ((m & bj) && !(m & bi)) {
            mask_t t = (m ^ bj) | bi;
            out.push_back(F.contains(t) ? m : t);
        } else {
            out.push_back(m);
        }
    }
    std::sort(out.begin(), out.end(), canonical_less);
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw std::logic_error("shift: internal collision");
    return SetFamily{F.n, std::move(out)};
}

bool is_left_shifted(const SetFamily& F) {
    for (int j = 2; j <= F.n; ++j) {
        mask_t bj = mask_t{1} << (j - 1);
        for (int i = 1; i < j; ++i) {
            mask_t bi = mask_t{1} << (i - 1);
            for (mask_t m : F.sets) {
                if ((m & bj) && !(m & bi) && !F.contains((m ^ bj) | bi)) return false;
            }
        }
    }
    return true;
}

Rational lubell_sum(const SetFamily& F) {
    std::uint64_t by_size[kMaxGround + 1] = {0};
    for (mask_t m : F.sets) ++by_size[popcount(m)];
    Rational total;
    for (int k = 0; k <= F.n; ++k) {
        if (!by_size[k]) continue;
        total = total + Rational(false, Natural(by_size[k]), Natural(binomial(F.n, k)));
    }
    return total;
}

int longest_chain(const SetFamily& F) {
    // canonical order is topological for strict inclusion
    std::size_t s = F.sets.size();
    std::vector<int> len(s, 1);
    int best = s ? 1 : 0;
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (F.sets[j] != F.sets[i] && (F.sets[j] & F.sets[i]) == F.sets[j])
                len[i] = std::max(len[i], len[j] + 1);
        }
        best = std::max(best, len[i]);
    }
    return best;
}

bool is_k_sperner(const SetFamily& F, int k) {
    if (k < 1) throw std::invalid_argument("is_k_sperner: k must be >= 1");
    return longest_chain(F) <= k;
}

SetFamily complement_family(const SetFamily& F) {
    mask_t full = full_mask(F.n);
    std::vector<mask_t> out;
    out.reserve(F.sets.size());
    for (mask_t m : F.sets) out.push_back(full ^ m);
    std::sort(out.begin(), out.end(), canonical_less);
    return SetFamily{F.n, std::move(out)};
}

} // namespace posetlab
