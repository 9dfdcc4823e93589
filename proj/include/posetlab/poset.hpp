#pragma once

#include <string>
#include <utility>
#include <vector>

#include "posetlab/bignum.hpp"
#include "posetlab/set_family.hpp"

namespace posetlab {

// Finite strict partial order; lt[a] has bit b set iff a < b. Transitively
// closed, irreflexive by construction.
struct Poset {
    int size = 0;
    std::vector<mask_t> lt;

    bool less(int a, int b) const { return (lt[a] >> b) & 1; }
    int relation_count() const;
    bool operator==(const Poset& o) const { return size == o.size && lt == o.lt; }
};

Poset butterfly_poset();       // a,b < c,d
Poset chain_poset(int k);      // total order on k elements, k >= 1
Poset vee_poset();             // one element below two others
Poset wedge_poset();           // one element above two others
// Arbitrary relation pairs (a,b) meaning a < b; closed transitively, rejected if cyclic.
Poset custom_poset(int size, const std::vector<std::pair<int, int>>& lt_pairs);
// "butterfly" | "chain:k" | "vee" | "wedge"
Poset make_poset(const std::string& name);

// Weak (non-induced) containment: an injection P -> F with p < q  =>  image(p)
// strictly included in image(q). Backtracks along a linear extension of P.
bool contains_poset(const SetFamily& F, const Poset& P);
// Same, but some image must equal `forced` (which need not be in F).
bool contains_poset_using(const SetFamily& F, const Poset& P, mask_t forced);

// Copies = distinct image sets. Reference counter: enumerates |P|-subsets of F
// and tests each for an order-preserving bijection. Exponential; the oracle
// against which the per-poset fast paths are checked.
Natural count_copies(const SetFamily& F, const Poset& P);

// Order-preserving injections P -> F, counted directly (cross-check value:
// butterflies have exactly 4 injections per copy).
std::uint64_t count_injections(const SetFamily& F, const Poset& P);

// Fast paths (production): exact image-set counts.
Natural count_butterflies(const SetFamily& F);        // parallel
Natural count_butterflies_serial(const SetFamily& F); // reference kept for testing
Natural count_chains(const SetFamily& F, int k);      // DP in popcount order
Natural count_vees(const SetFamily& F);
Natural count_wedges(const SetFamily& F);

// Butterfly image sets S with g in S and S\{g} inside base; g must not be in base.
Natural count_butterflies_with_pivot(const SetFamily& base, mask_t g);
// Existence-only variant with early exit (for free-family generators and search).
bool creates_butterfly(const SetFamily& base, mask_t g);

// cnt[m] = number of members of F weakly contained in m, for all m < 2^n.
// Requires n <= 24.
std::vector<std::uint32_t> subset_count_table(const SetFamily& F);

// Members of F having both a strict subset and a strict superset inside F.
SetFamily middle_sets(const SetFamily& F);

// Weighted Lubell sum: plain terms outside the middle family, and weight
// 1 + ((|M|-1)(n-|M|-1) - 1)/(|M|(n-|M|)) on middles. Exact; requires that
// neither the empty set nor [n] belongs to F.
Rational improved_lym_sum(const SetFamily& F);

} // namespace posetlab
