// Benchmark: OpenMP kernels against the serial references, with a result
// equality check. `--quick` shrinks the inputs for smoke runs.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "posetlab/extremal.hpp"
#include "posetlab/isoperimetry.hpp"
#include "posetlab/poset.hpp"
#include "posetlab/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace posetlab;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

SetFamily drop_random(const SetFamily& F, std::size_t keep, Rng& rng) {
    std::vector<mask_t> sets = F.sets;
    while (sets.size() > keep) {
        sets.erase(sets.begin() + static_cast<long>(rng.below(sets.size())));
    }
    return make_family(F.n, std::move(sets));
}

void report(const char* kernel, const char* input, double serial_ms, double parallel_ms, bool equal) {
    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("%-18s %-28s threads=%d serial=%9.2fms parallel=%9.2fms speedup=%5.2fx equal=%s\n",
                kernel, input, threads, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, equal ? "yes" : "NO");
}

} // namespace

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i)
        if (!std::strcmp(argv[i], "--quick")) quick = true;

    Rng rng(42);
    bool all_equal = true;

    {
        // serial reference is cubic in |F|; sizes keep it in seconds
        int n = quick ? 10 : 12;
        std::uint64_t extra = quick ? 2 : 40;
        SetFamily fam = build_construction(n, extra, CodeStrategy::residue);
        std::string label = "construction n=" + std::to_string(n) + " |F|=" + std::to_string(fam.size());
        auto t0 = std::chrono::steady_clock::now();
        Natural serial = count_butterflies_serial(fam);
        double t_serial = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        Natural parallel = count_butterflies(fam);
        double t_parallel = ms_since(t0);
        bool equal = serial == parallel;
        all_equal &= equal;
        report("count_butterflies", label.c_str(), t_serial, t_parallel, equal);
    }

    {
        int n = quick ? 10 : 16;
        int k = n / 2;
        SetFamily layer = full_layer(n, k);
        SetFamily fam = drop_random(layer, quick ? 150 : 9000, rng);
        std::string label = "layer n=" + std::to_string(n) + " |F|=" + std::to_string(fam.size());
        auto t0 = std::chrono::steady_clock::now();
        std::uint64_t serial = hamming_edges_serial(fam, k);
        double t_serial = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        std::uint64_t parallel = hamming_edges(fam, k);
        double t_parallel = ms_since(t0);
        bool equal = serial == parallel;
        all_equal &= equal;
        report("hamming_edges", label.c_str(), t_serial, t_parallel, equal);
    }

    {
        int n = quick ? 12 : 16;
        int k = n / 2;
        SetFamily layer = full_layer(n, k);
        SetFamily fam = drop_random(layer, layer.size() - (quick ? 9 : 36), rng);
        std::string label = "census n=" + std::to_string(n) + " m=" +
                            std::to_string(layer.size() - fam.size());
        auto t0 = std::chrono::steady_clock::now();
        CensusResult serial = bad_superset_census_serial(fam, k, CensusMode::sqrt_bound);
        double t_serial = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        CensusResult parallel = bad_superset_census(fam, k, CensusMode::sqrt_bound);
        double t_parallel = ms_since(t0);
        bool equal = serial.cumulative_bad == parallel.cumulative_bad &&
                     serial.first_layer_bad == parallel.first_layer_bad;
        all_equal &= equal;
        report("bad_superset", label.c_str(), t_serial, t_parallel, equal);
    }

    return all_equal ? 0 : 1;
}
