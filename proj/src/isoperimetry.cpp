#include "posetlab/isoperimetry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "posetlab/poset.hpp"
#include "posetlab/report.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace posetlab {

static void require_uniform(const SetFamily& F, int k, const char* who) {
    if (k < 0 || k > F.n) throw std::out_of_range(std::string(who) + ": k out of [0,n]");
    for (mask_t m : F.sets)
        if (popcount(m) != k) throw std::invalid_argument(std::string(who) + ": family is not k-uniform");
}

std::uint64_t hamming_edges(const SetFamily& F, int k) {
    require_uniform(F, k, "hamming_edges");
    std::size_t s = F.sets.size();
    const mask_t* sets = F.sets.data();
    std::uint64_t total = 0;
#ifdef _OPENMP
#pragma omp parallel
#endif
    {
        std::uint64_t local = 0;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 16) nowait
#endif
        for (long long i = 0; i < static_cast<long long>(s); ++i)
            for (std::size_t j = i + 1; j < s; ++j)
                if (popcount(sets[i] & sets[j]) == k - 1) ++local;
#ifdef _OPENMP
#pragma omp critical
#endif
        total += local;
    }
    return total;
}

std::uint64_t hamming_edges_serial(const SetFamily& F, int k) {
    require_uniform(F, k, "hamming_edges");
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < F.sets.size(); ++i)
        for (std::size_t j = i + 1; j < F.sets.size(); ++j)
            if (popcount(F.sets[i] & F.sets[j]) == k - 1) ++total;
    return total;
}

HarperVector harper_vector(mask_t s, int n, int k) {
    if (n < 1 || n > kMaxGround) throw std::out_of_range("harper_vector: bad n");
    if (s & ~full_mask(n)) throw std::invalid_argument("harper_vector: set exceeds ground set");
    if (popcount(s) != k) throw std::invalid_argument("harper_vector: |S| != k");
    HarperVector v;
    v.y.reserve(k);
    int j = 1;
    for (int e : elements_of(s)) v.y.push_back(e - j++);
    return v;
}

int rank_of(const HarperVector& v) {
    int r = 0;
    for (int e : v.y) r += e;
    return r;
}

bool is_downset_encoding(const SetFamily& F, int k) {
    require_uniform(F, k, "is_downset_encoding");
    if (k == 0) return true;
    std::vector<std::vector<int>> ys;
    ys.reserve(F.sets.size());
    for (mask_t m : F.sets) ys.push_back(harper_vector(m, F.n, k).y);
    std::sort(ys.begin(), ys.end());
    auto present = [&](const std::vector<int>& y) {
        return std::binary_search(ys.begin(), ys.end(), y);
    };
    // closed under covers: lowering one coordinate keeps the vector nondecreasing
    for (const auto& y : ys) {
        std::vector<int> t = y;
        for (int i = 0; i < k; ++i) {
            if (t[i] == 0) continue;
            if (i > 0 && t[i - 1] > t[i] - 1) continue;
            --t[i];
            if (!present(t)) return false;
            ++t[i];
        }
    }
    return true;
}

std::uint64_t edges_via_rank(const SetFamily& F, int k) {
    require_uniform(F, k, "edges_via_rank");
    if (!is_left_shifted(F))
        throw std::invalid_argument("edges_via_rank: family is not left shifted");
    std::uint64_t total = 0;
    for (mask_t m : F.sets) total += rank_of(harper_vector(m, F.n, k));
    return total;
}

BoundReport isoperi_check(const SetFamily& F, int k, double delta) {
    require_uniform(F, k, "isoperi_check");
    if (delta < 0) throw std::invalid_argument("isoperi_check: delta must be >= 0");
    double m = static_cast<double>(F.sets.size());
    int a = static_cast<int>(std::floor(delta * F.n));
    int b = static_cast<int>(std::floor(delta * F.n / 2.0));
    double cap = b < 1 ? 1.0 : gen_binom(static_cast<double>(a), b); // C(a,0) = 1
    double lhs = static_cast<double>(hamming_edges(F, k));
    BoundReport r;
    r.name = "isoperi";
    r.params = {{"n", format_real(F.n)},
                {"k", format_real(k)},
                {"delta", format_real(delta)},
                {"m", format_real(m)},
                {"hypothesis", "m < C(floor(delta n), floor(delta n / 2))"}};
    r.lhs = lhs;
    r.rhs = delta * m * F.n * F.n;
    bool hyp = m < cap;
    r.verdict = !hyp ? Verdict::hypothesis_not_met
                     : (lhs <= r.rhs ? Verdict::holds : Verdict::violated);
    return r;
}

double union_lower_bound(int l, int u) {
    if (l < 0 || u < 0) throw std::invalid_argument("union_lower_bound: negative argument");
    if (l > u) throw hypothesis_error("union_lower_bound: requires l <= u");
    return l * (2.0 * u - l) / 2.0;
}

static CensusResult census_impl(const SetFamily& layer_family, int k, CensusMode mode,
                                double epsilon, bool parallel) {
    require_uniform(layer_family, k, "bad_superset_census");
    int n = layer_family.n;
    if (k >= n) throw std::out_of_range("bad_superset_census: need k < n");
    if (n > 24) throw scale_error("bad_superset_census: n > 24");

    CensusResult res;
    res.mode = mode;
    res.k = k;
    res.epsilon = epsilon;
    res.missing = binomial(n, k) - layer_family.sets.size();
    double m = static_cast<double>(res.missing);
    double threshold = mode == CensusMode::sqrt_bound ? (k + 1) - 2.0 * std::sqrt(m)
                                                      : (1.0 - epsilon) * k;

    std::vector<std::uint64_t> bad(n + 1, 0);
    std::size_t words = std::size_t{1} << n;
    if (parallel) {
        std::vector<std::uint32_t> cnt = subset_count_table(layer_family);
#ifdef _OPENMP
#pragma omp parallel
#endif
        {
            std::vector<std::uint64_t> local(n + 1, 0);
#ifdef _OPENMP
#pragma omp for schedule(static) nowait
#endif
            for (long long g = 0; g < static_cast<long long>(words); ++g) {
                int l = popcount(static_cast<mask_t>(g));
                if (l >= k + 1 && static_cast<double>(cnt[g]) < threshold) ++local[l];
            }
#ifdef _OPENMP
#pragma omp critical
#endif
            for (int l = 0; l <= n; ++l) bad[l] += local[l];
        }
    } else {
        for (std::size_t g = 0; g < words; ++g) {
            int l = popcount(static_cast<mask_t>(g));
            if (l < k + 1) continue;
            std::uint64_t have = 0;
            for (mask_t f : layer_family.sets)
                if ((f & g) == f) ++have;
            if (static_cast<double>(have) < threshold) ++bad[l];
        }
    }

    bool sqrt_hyp = res.missing <= static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(k);
    for (int l = k + 1; l <= n; ++l) {
        CensusReport row;
        row.layer = l;
        row.threshold = threshold;
        row.bad_count = bad[l];
        if (mode == CensusMode::sqrt_bound && l == k + 1) {
            row.bound = std::sqrt(m);
            row.verdict = !sqrt_hyp ? Verdict::hypothesis_not_met
                                    : (row.bad_count <= *row.bound ? Verdict::holds : Verdict::violated);
        }
        res.layers.push_back(row);
        res.cumulative_bad += bad[l];
    }
    res.first_layer_bad = bad[k + 1];
    if (mode == CensusMode::sqrt_bound) {
        res.cumulative_bound = 2.0 * std::sqrt(m);
        res.cumulative_verdict = !sqrt_hyp
                                     ? Verdict::hypothesis_not_met
                                     : (res.cumulative_bad <= *res.cumulative_bound ? Verdict::holds
                                                                                    : Verdict::violated);
    }
    return res;
}

CensusResult bad_superset_census(const SetFamily& layer_family, int k, CensusMode mode,
                                 double epsilon) {
    return census_impl(layer_family, k, mode, epsilon, true);
}

CensusResult bad_superset_census_serial(const SetFamily& layer_family, int k, CensusMode mode,
                                        double epsilon) {
    return census_impl(layer_family, k, mode, epsilon, false);
}

} // namespace posetlab
