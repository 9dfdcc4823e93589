#include "posetlab/extremal.hpp"

#include <algorithm>
#include <stdexcept>

namespace posetlab {

std::uint64_t sigma(int n, int k) {
    if (n < 1 || n > kMaxGround) throw std::out_of_range("sigma: bad n");
    if (k < 1 || k > n) throw std::out_of_range("sigma: k out of [1,n]");
    std::uint64_t total = 0;
    int base = (n - k) / 2;
    for (int i = 1; i <= k; ++i) total += binomial(n, base + i);
    return total;
}

std::uint64_t f_n(int n) {
    if (n < 1) throw std::out_of_range("f_n: n must be >= 1");
    std::uint64_t h = static_cast<std::uint64_t>((n + 1) / 2);
    return (h + 1) * (h * (h - 1) / 2);
}

std::vector<SetFamily> sigma_star(int n, int k) {
    if (n < 1 || n > kMaxGround) throw std::out_of_range("sigma_star: bad n");
    if (k < 1 || k > n) throw std::out_of_range("sigma_star: k out of [1,n]");
    int lo = (n - k) / 2;      // floor
    int hi = (n - k + 1) / 2;  // ceil
    std::vector<int> a, b;
    for (int i = 1; i <= k; ++i) a.push_back(lo + i);
    for (int i = 0; i <= k - 1; ++i) b.push_back(hi + i);
    std::vector<SetFamily> out;
    out.push_back(layer_union(n, a));
    if (a != b) out.push_back(layer_union(n, b));
    return out;
}

static int max_pair_inter(const SetFamily& F) {
    if (F.sets.size() < 2) return -1;
    int best = 0;
    for (std::size_t i = 0; i < F.sets.size(); ++i)
        for (std::size_t j = i + 1; j < F.sets.size(); ++j)
            best = std::max(best, popcount(F.sets[i] & F.sets[j]));
    return best;
}

CodeLayer residue_code_layer(int n, int w) {
    if (n < 1 || n > kMaxGround) throw std::out_of_range("residue_code_layer: bad n");
    if (w < 1 || w > n) throw std::out_of_range("residue_code_layer: w out of [1,n]");
    SetFamily layer = full_layer(n, w);
    std::vector<std::vector<mask_t>> classes(n);
    for (mask_t m : layer.sets) {
        int sum = 0;
        for (int e : elements_of(m)) sum += e;
        classes[sum % n].push_back(m);
    }
    std::size_t best = 0;
    for (int c = 1; c < n; ++c)
        if (classes[c].size() > classes[best].size()) best = c;
    CodeLayer out;
    out.w = w;
    out.members = make_family(n, std::move(classes[best]));
    out.max_pair_intersection = max_pair_inter(out.members);
    return out;
}

CodeLayer greedy_code_layer(int n, int w, std::uint64_t target) {
    if (n < 1 || n > kMaxGround) throw std::out_of_range("greedy_code_layer: bad n");
    if (w < 1 || w > n) throw std::out_of_range("greedy_code_layer: w out of [1,n]");
    SetFamily layer = full_layer(n, w); // ascending masks = colex order within a layer
    std::vector<mask_t> chosen;
    for (mask_t cand : layer.sets) {
        if (chosen.size() >= target) break;
        bool ok = true;
        for (mask_t m : chosen) {
            if (popcount(m & cand) > w - 2) { ok = false; break; }
        }
        if (ok) chosen.push_back(cand);
    }
    CodeLayer out;
    out.w = w;
    out.members = make_family(n, std::move(chosen));
    out.max_pair_intersection = max_pair_inter(out.members);
    return out;
}

SetFamily build_construction(int n, std::uint64_t extra, CodeStrategy strategy) {
    if (n < 2 || n > kMaxGround) throw std::out_of_range("build_construction: n out of [2,63]");
    int h = (n + 1) / 2;
    std::vector<mask_t> sets;
    for (int k : {h - 1, h}) {
        SetFamily layer = full_layer(n, k);
        sets.insert(sets.end(), layer.sets.begin(), layer.sets.end());
    }
    if (extra > 0) {
        if (h + 1 > n)
            throw capacity_error("build_construction: no layer above the middle", 0);
        CodeLayer code = strategy == CodeStrategy::residue
                             ? residue_code_layer(n, h + 1)
                             : greedy_code_layer(n, h + 1, extra);
        if (code.members.size() < extra)
            throw capacity_error("build_construction: strategy supplies only " +
                                     std::to_string(code.members.size()) + " sets",
                                 code.members.size());
        sets.insert(sets.end(), code.members.sets.begin(), code.members.sets.begin() + extra);
    }
    return make_family(n, std::move(sets));
}

} // namespace posetlab
