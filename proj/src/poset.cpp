#include "posetlab/poset.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace posetlab {

int Poset::relation_count() const {
    int c = 0;
    for (mask_t row : lt) c += popcount(row);
    return c;
}

Poset butterfly_poset() {
    return custom_poset(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

Poset chain_poset(int k) {
    if (k < 1) throw std::invalid_argument("chain_poset: k must be >= 1");
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i + 1 < k; ++i) rel.emplace_back(i, i + 1);
    return custom_poset(k, rel);
}

Poset vee_poset() { return custom_poset(3, {{0, 1}, {0, 2}}); }

Poset wedge_poset() { return custom_poset(3, {{1, 0}, {2, 0}}); }

Poset custom_poset(int size, const std::vector<std::pair<int, int>>& lt_pairs) {
    if (size < 1 || size > 63) throw std::invalid_argument("custom_poset: size out of [1,63]");
    Poset p;
    p.size = size;
    p.lt.assign(size, 0);
    for (auto [a, b] : lt_pairs) {
        if (a < 0 || a >= size || b < 0 || b >= size)
            throw std::invalid_argument("custom_poset: relation index out of range");
        p.lt[a] |= mask_t{1} << b;
    }
    // Warshall closure over the bitmask rows.
    for (int k = 0; k < size; ++k)
        for (int a = 0; a < size; ++a)
            if (p.less(a, k)) p.lt[a] |= p.lt[k];
    for (int a = 0; a < size; ++a)
        if (p.less(a, a)) throw std::invalid_argument("custom_poset: relation is cyclic");
    return p;
}

Poset make_poset(const std::string& name) {
    if (name == "butterfly") return butterfly_poset();
    if (name == "vee") return vee_poset();
    if (name == "wedge") return wedge_poset();
    if (name.rfind("chain:", 0) == 0) {
        int k = std::stoi(name.substr(6));
        return chain_poset(k);
    }
    throw std::invalid_argument("make_poset: unknown poset '" + name + "'");
}

static std::vector<int> linear_extension(const Poset& P) {
    std::vector<int> indeg(P.size, 0);
    for (int a = 0; a < P.size; ++a)
        for (int b = 0; b < P.size; ++b)
            if (P.less(a, b)) ++indeg[b];
    std::vector<int> order;
    std::vector<bool> done(P.size, false);
    for (int step = 0; step < P.size; ++step) {
        int pick = -1;
        for (int v = 0; v < P.size; ++v)
            if (!done[v] && indeg[v] == 0) { pick = v; break; }
        if (pick < 0) throw std::logic_error("linear_extension: cycle");
        done[pick] = true;
        order.push_back(pick);
        for (int b = 0; b < P.size; ++b)
            if (P.less(pick, b)) --indeg[b];
    }
    return order;
}

namespace {

struct Embedder {
    const std::vector<mask_t>& sets;
    const Poset& P;
    std::vector<int> order;       // linear extension
    std::vector<mask_t> image;    // by poset element
    std::vector<bool> used;       // by set index
    mask_t forced = 0;
    bool has_forced = false;
    bool forced_used = false;

    Embedder(const std::vector<mask_t>& s, const Poset& p)
        : sets(s), P(p), order(linear_extension(p)), image(p.size), used(s.size(), false) {}

    // predecessors of elem are always placed first along a linear extension
    bool feasible(int elem, mask_t m, const std::vector<bool>& placed) const {
        for (int q = 0; q < P.size; ++q) {
            if (!placed[q]) continue;
            if (P.less(q, elem) && !((image[q] & m) == image[q] && image[q] != m)) return false;
        }
        return true;
    }

    bool search(std::size_t t, std::vector<bool>& placed) {
        if (t == order.size()) return !has_forced || forced_used;
        int elem = order[t];
        for (std::size_t i = 0; i < sets.size(); ++i) {
            if (used[i]) continue;
            if (!feasible(elem, sets[i], placed)) continue;
            used[i] = true;
            placed[elem] = true;
            image[elem] = sets[i];
            bool was = forced_used;
            if (has_forced && sets[i] == forced) forced_used = true;
            if (search(t + 1, placed)) return true;
            forced_used = was;
            placed[elem] = false;
            used[i] = false;
        }
        return false;
    }

    std::uint64_t count_all(std::size_t t, std::vector<bool>& placed) {
        if (t == order.size()) return 1;
        int elem = order[t];
        std::uint64_t total = 0;
        for (std::size_t i = 0; i < sets.size(); ++i) {
            if (used[i]) continue;
            if (!feasible(elem, sets[i], placed)) continue;
            used[i] = true;
            placed[elem] = true;
            image[elem] = sets[i];
            total += count_all(t + 1, placed);
            placed[elem] = false;
            used[i] = false;
        }
        return total;
    }
};

} // namespace

bool contains_poset(const SetFamily& F, const Poset& P) {
    if (static_cast<std::size_t>(P.size) > F.sets.size()) return false;
    Embedder e(F.sets, P);
    std::vector<bool> placed(P.size, false);
    return e.search(0, placed);
}

bool contains_poset_using(const SetFamily& F, const Poset& P, mask_t forced) {
    std::vector<mask_t> sets = F.sets;
    if (std::find(sets.begin(), sets.end(), forced) == sets.end()) sets.push_back(forced);
    if (sets.size() < static_cast<std::size_t>(P.size)) return false;
    Embedder e(sets, P);
    e.forced = forced;
    e.has_forced = true;
    std::vector<bool> placed(P.size, false);
    return e.search(0, placed);
}

Natural count_copies(const SetFamily& F, const Poset& P) {
    int p = P.size;
    std::size_t s = F.sets.size();
    if (static_cast<std::size_t>(p) > s) return Natural{};
    std::vector<std::size_t> idx(p);
    for (int i = 0; i < p; ++i) idx[i] = i;
    std::vector<mask_t> sub(p);
    std::uint64_t copies = 0;
    while (true) {
        for (int i = 0; i < p; ++i) sub[i] = F.sets[idx[i]];
        SetFamily S{F.n, sub}; // already canonical (subsequence of a canonical list)
        if (contains_poset(S, P)) ++copies;
        int t = p - 1;
        while (t >= 0 && idx[t] == s - p + t) --t;
        if (t < 0) break;
        ++idx[t];
        for (int q = t + 1; q < p; ++q) idx[q] = idx[q - 1] + 1;
    }
    return Natural{copies};
}

std::uint64_t count_injections(const SetFamily& F, const Poset& P) {
    if (static_cast<std::size_t>(P.size) > F.sets.size()) return 0;
    Embedder e(F.sets, P);
    std::vector<bool> placed(P.size, false);
    return e.count_all(0, placed);
}

std::vector<std::uint32_t> subset_count_table(const SetFamily& F) {
    if (F.n > 24) throw scale_error("subset_count_table: n > 24");
    std::size_t words = std::size_t{1} << F.n;
    std::vector<std::uint32_t> cnt(words, 0);
    for (mask_t m : F.sets) ++cnt[m];
    for (int b = 0; b < F.n; ++b) {
        mask_t bit = mask_t{1} << b;
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (long long m = 0; m < static_cast<long long>(words); ++m) {
            if (m & static_cast<long long>(bit)) cnt[m] += cnt[m ^ bit];
        }
    }
    return cnt;
}

// Common strict subsets of two family members, for the top-pair sum: with
// cnt = subset_count_table, |L(C,D)| = cnt[C&D] - [C<=D] - [D<=C].
static inline std::uint64_t common_below(const std::vector<std::uint32_t>& cnt, mask_t c, mask_t d) {
    mask_t inter = c & d;
    std::uint64_t v = cnt[inter];
    if (inter == c) --v;
    if (inter == d) --v;
    return v;
}

Natural count_butterflies(const SetFamily& F) {
    std::size_t s = F.sets.size();
    if (s < 4) return Natural{};
    unsigned __int128 total = 0;
    if (F.n <= 22) {
        std::vector<std::uint32_t> cnt = subset_count_table(F);
        const mask_t* sets = F.sets.data();
#ifdef _OPENMP
#pragma omp parallel
#endif
        {
            unsigned __int128 local = 0;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 16) nowait
#endif
            for (long long i = 0; i < static_cast<long long>(s); ++i) {
                for (std::size_t j = i + 1; j < s; ++j) {
                    std::uint64_t v = common_below(cnt, sets[i], sets[j]);
                    local += (unsigned __int128)v * (v - 1) / 2;
                }
            }
#ifdef _OPENMP
#pragma omp critical
#endif
            total += local;
        }
    } else {
        const mask_t* sets = F.sets.data();
#ifdef _OPENMP
#pragma omp parallel
#endif
        {
            unsigned __int128 local = 0;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 4) nowait
#endif
            for (long long i = 0; i < static_cast<long long>(s); ++i) {
                for (std::size_t j = i + 1; j < s; ++j) {
                    mask_t inter = sets[i] & sets[j];
                    std::uint64_t v = 0;
                    for (mask_t a : F.sets)
                        if ((a & inter) == a) ++v;
                    if (inter == sets[i]) --v;
                    if (inter == sets[j]) --v;
                    local += (unsigned __int128)v * (v - 1) / 2;
                }
            }
#ifdef _OPENMP
#pragma omp critical
#endif
            total += local;
        }
    }
    return Natural::from_u128(total);
}

Natural count_butterflies_serial(const SetFamily& F) {
    std::size_t s = F.sets.size();
    unsigned __int128 total = 0;
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = i + 1; j < s; ++j) {
            mask_t c = F.sets[i], d = F.sets[j];
            std::uint64_t v = 0;
            for (mask_t a : F.sets) {
                bool below_c = (a & c) == a && a != c;
                bool below_d = (a & d) == a && a != d;
                if (below_c && below_d) ++v;
            }
            total += (unsigned __int128)v * (v - 1) / 2;
        }
    }
    return Natural::from_u128(total);
}

Natural count_chains(const SetFamily& F, int k) {
    if (k < 1) throw std::invalid_argument("count_chains: k must be >= 1");
    std::size_t s = F.sets.size();
    if (static_cast<std::size_t>(k) > s) return Natural{};
    // dp[v][t] = chains of t sets ending at v; canonical order is topological.
    std::vector<std::vector<unsigned __int128>> dp(s, std::vector<unsigned __int128>(k + 1, 0));
    unsigned __int128 total = 0;
    for (std::size_t i = 0; i < s; ++i) {
        dp[i][1] = 1;
        for (std::size_t j = 0; j < i; ++j) {
            if (F.sets[j] != F.sets[i] && (F.sets[j] & F.sets[i]) == F.sets[j]) {
                for (int t = 2; t <= k; ++t) dp[i][t] += dp[j][t - 1];
            }
        }
        total += dp[i][k];
    }
    return Natural::from_u128(total);
}

Natural count_vees(const SetFamily& F) {
    // each vee image set has a unique element strictly below the other two
    std::size_t s = F.sets.size();
    if (s < 3) return Natural{};
    unsigned __int128 total = 0;
    if (F.n <= 22) {
        std::vector<std::uint32_t> cnt = subset_count_table(F);
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = i + 1; j < s; ++j)
                total += common_below(cnt, F.sets[i], F.sets[j]);
    } else {
        for (std::size_t i = 0; i < s; ++i) {
            for (std::size_t j = i + 1; j < s; ++j) {
                mask_t inter = F.sets[i] & F.sets[j];
                for (mask_t a : F.sets)
                    if ((a & inter) == a && a != F.sets[i] && a != F.sets[j]) ++total;
            }
        }
    }
    return Natural::from_u128(total);
}

Natural count_wedges(const SetFamily& F) { return count_vees(complement_family(F)); }

Natural count_butterflies_with_pivot(const SetFamily& base, mask_t g) {
    if (base.contains(g)) throw std::invalid_argument("pivot: g already in base");
    unsigned __int128 total = 0;
    // g in the top pair
    for (mask_t d : base.sets) {
        mask_t inter = g & d;
        std::uint64_t v = 0;
        for (mask_t a : base.sets)
            if ((a & inter) == a && a != d) ++v; // a != g holds since g is outside base
        total += (unsigned __int128)v * (v - 1) / 2;
    }
    // g a bottom: for every top pair above g, each other common bottom completes a copy
    std::vector<mask_t> sup;
    for (mask_t c : base.sets)
        if ((g & c) == g && g != c) sup.push_back(c);
    for (std::size_t i = 0; i < sup.size(); ++i) {
        for (std::size_t j = i + 1; j < sup.size(); ++j) {
            mask_t inter = sup[i] & sup[j];
            for (mask_t a : base.sets)
                if ((a & inter) == a && a != sup[i] && a != sup[j]) ++total;
        }
    }
    return Natural::from_u128(total);
}

bool creates_butterfly(const SetFamily& base, mask_t g) {
    if (base.contains(g)) throw std::invalid_argument("creates_butterfly: g already in base");
    for (mask_t d : base.sets) {
        mask_t inter = g & d;
        int v = 0;
        for (mask_t a : base.sets) {
            if ((a & inter) == a && a != d && ++v == 2) return true;
        }
    }
    std::vector<mask_t> sup;
    for (mask_t c : base.sets)
        if ((g & c) == g && g != c) sup.push_back(c);
    for (std::size_t i = 0; i < sup.size(); ++i) {
        for (std::size_t j = i + 1; j < sup.size(); ++j) {
            mask_t inter = sup[i] & sup[j];
            for (mask_t a : base.sets)
                if ((a & inter) == a && a != sup[i] && a != sup[j]) return true;
        }
    }
    return false;
}

SetFamily middle_sets(const SetFamily& F) {
    std::vector<mask_t> out;
    for (mask_t m : F.sets) {
        bool has_sub = false, has_sup = false;
        for (mask_t a : F.sets) {
            if (a == m) continue;
            if ((a & m) == a) has_sub = true;
            else if ((a & m) == m) has_sup = true;
            if (has_sub && has_sup) break;
        }
        if (has_sub && has_sup) out.push_back(m);
    }
    return SetFamily{F.n, std::move(out)};
}

Rational improved_lym_sum(const SetFamily& F) {
    mask_t full = full_mask(F.n);
    if (F.contains(0) || F.contains(full))
        throw std::invalid_argument("improved_lym_sum: empty set or [n] present");
    SetFamily M = middle_sets(F);
    std::uint64_t plain[kMaxGround + 1] = {0};
    std::uint64_t mid[kMaxGround + 1] = {0};
    for (mask_t m : F.sets) ++plain[popcount(m)];
    for (mask_t m : M.sets) {
        int k = popcount(m);
        --plain[k];
        ++mid[k];
    }
    long long n = F.n;
    Rational total;
    for (int k = 0; k <= F.n; ++k) {
        std::uint64_t c = binomial(F.n, k);
        if (plain[k]) total = total + Rational(false, Natural(plain[k]), Natural(c));
        if (mid[k]) {
            // 1 + ((k-1)(n-k-1) - 1)/(k(n-k)), over C(n,k); may dip below 1
            long long wn = k * (n - k) + (k - 1) * (n - k - 1) - 1;
            std::uint64_t wd = static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(n - k);
            Rational weight(wn, wd);
            total = total + weight * Rational(false, Natural(mid[k]), Natural(c));
        }
    }
    return total;
}

} // namespace posetlab
