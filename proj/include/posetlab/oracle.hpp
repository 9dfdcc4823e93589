#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "posetlab/bounds.hpp"
#include "posetlab/poset.hpp"

namespace posetlab {

// A family achieving a searched optimum, with enough context to re-check it.
struct Witness {
    enum class Kind { max_free, min_copies };
    Kind kind = Kind::max_free;
    SetFamily family;
    Natural objective;
    bool heuristic = false; // true when the search was budgeted, not exhaustive
};

// Maximum-size P-free family in 2^[n] via include-first branch and bound over
// the canonical subset order. Exhaustive for n <= 5; beyond that the node
// budget caps the search and the witness is flagged heuristic. Ties go to the
// lexicographically least canonical family.
Witness max_p_free(int n, const Poset& P, std::uint64_t node_budget = 50'000'000);

struct MinCopiesOptions {
    bool allow_large = false;     // required for the n = 5 sweep
    std::string checkpoint_path;  // optional JSONL resume/merge file
    std::uint64_t chunk = 1 << 18; // ranks per work item / checkpoint record
};

// Minimum copy count over all size-`size` families in 2^[n], by ranked
// enumeration of combinations with incremental butterfly updates (generic
// posets are recounted per family). n <= 4 runs freely; n = 5 needs
// allow_large; larger n is refused.
Witness min_copies(int n, int size, const Poset& P, const MinCopiesOptions& opt = {});

// For E = 0..e_max: the two-layer-plus-code construction must hit E*f(n)
// butterflies exactly, and seeded random E-set supersets of an extremal
// two-layer family must stay at or above it.
std::vector<BoundReport> audit_prop1(int n, int e_max, std::uint64_t seed, int trials_per_e = 20);

} // namespace posetlab
