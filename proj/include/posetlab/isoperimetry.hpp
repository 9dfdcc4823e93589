#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "posetlab/bounds.hpp"
#include "posetlab/set_family.hpp"

namespace posetlab {

// Edges of the Hamming graph H(n,k) spanned by a k-uniform family:
// unordered pairs meeting in exactly k-1 elements.
std::uint64_t hamming_edges(const SetFamily& F, int k);        // parallel
std::uint64_t hamming_edges_serial(const SetFamily& F, int k); // reference kept for testing

// Gap encoding of a k-set: y(j) = (index of the j-th smallest element) - j.
// Entries are nondecreasing and bounded by n-k.
struct HarperVector {
    std::vector<int> y;
    bool operator==(const HarperVector& o) const { return y == o.y; }
};

HarperVector harper_vector(mask_t s, int n, int k);
int rank_of(const HarperVector& y);

// True iff the encoded vectors form a downset of the coordinatewise order on
// nondecreasing vectors; coincides with is_left_shifted on k-uniform families.
bool is_downset_encoding(const SetFamily& F, int k);

// Sum of vector ranks; equals hamming_edges for left-shifted families, and the
// function refuses families that are not left shifted.
std::uint64_t edges_via_rank(const SetFamily& F, int k);

// e(F) <= delta |F| n^2 whenever |F| < C(floor(delta n), floor(delta n / 2));
// reports hypothesis-not-met when the size condition fails.
BoundReport isoperi_check(const SetFamily& F, int k, double delta);

// l(2u-l)/2, valid for l <= u: a floor on the union of l u-sets that pairwise
// meet in at most one element.
double union_lower_bound(int l, int u);

enum class CensusMode { epsilon, sqrt_bound };

struct CensusReport {
    int layer = 0;
    double threshold = 0.0;
    std::uint64_t bad_count = 0;
    std::optional<double> bound;
    Verdict verdict = Verdict::unevaluated;
};

// Census of supersets seeing too little of a layer-k family. For every layer
// l in [k+1, n], a set G is bad when |{F in F_layer : F strictly below G}|
// falls below the mode's threshold: (1-eps)k, or k+1-2*sqrt(m) where
// m = C(n,k) - |F_layer|. In sqrt mode the first layer is bounded by sqrt(m)
// (needs m <= k^2) and the total over all layers by 2*sqrt(m); the epsilon
// mode's o(m) bound is asymptotic and left unevaluated.
struct CensusResult {
    CensusMode mode = CensusMode::epsilon;
    int k = 0;
    std::uint64_t missing = 0;
    double epsilon = 0.0;
    std::vector<CensusReport> layers;
    std::uint64_t first_layer_bad = 0;
    std::uint64_t cumulative_bad = 0;
    std::optional<double> cumulative_bound;
    Verdict cumulative_verdict = Verdict::unevaluated;
};

CensusResult bad_superset_census(const SetFamily& layer_family, int k, CensusMode mode,
                                 double epsilon = 0.0);
CensusResult bad_superset_census_serial(const SetFamily& layer_family, int k, CensusMode mode,
                                        double epsilon = 0.0);

} // namespace posetlab
