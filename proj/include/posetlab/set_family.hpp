#pragma once

#include <initializer_list>
#include <vector>

#include "posetlab/bignum.hpp"
#include "posetlab/common.hpp"

namespace posetlab {

// Canonical order on subsets of [n]: ascending by (popcount, colex value).
// For masks of equal popcount, colex order coincides with numeric order.
inline bool canonical_less(mask_t a, mask_t b) {
    int pa = popcount(a), pb = popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
}

// A duplicate-free family of subsets of [n], always kept in canonical order.
struct SetFamily {
    int n = 1;
    std::vector<mask_t> sets;

    std::size_t size() const { return sets.size(); }
    bool contains(mask_t m) const;
    bool operator==(const SetFamily& o) const { return n == o.n && sets == o.sets; }
};

// Validates (1 <= n <= 63, masks within [n], no duplicates) and sorts canonically.
SetFamily make_family(int n, std::vector<mask_t> sets);

SetFamily full_layer(int n, int k);
SetFamily layer_union(int n, const std::vector<int>& ks);
SetFamily power_set(int n); // n <= 20

mask_t mask_of(std::initializer_list<int> elems); // 1-based elements
std::vector<int> elements_of(mask_t m);           // 1-based, ascending

// All k-element submasks / supermasks (within [n]) of m, ascending.
std::vector<mask_t> submasks_of_size(mask_t m, int k);
std::vector<mask_t> supermasks_of_size(mask_t m, int k, int n);

// { G : |G| = k, G strictly below some member }.
SetFamily shadow(const SetFamily& F, int k);
// { G in binom([n],k) : G strictly above some member }.
SetFamily shade(const SetFamily& F, int k);

// Setwise left shift: F -> F\{j} u {i} when j in F, i not in F and the image
// is not already present; requires 1 <= i < j <= n. Preserves family size.
SetFamily shift_family(const SetFamily& F, int i, int j);
bool is_left_shifted(const SetFamily& F);

// Sum of 1/C(n,|F|) over the family, exact.
Rational lubell_sum(const SetFamily& F);

// Number of sets in a longest chain under strict inclusion (0 for empty F).
int longest_chain(const SetFamily& F);
bool is_k_sperner(const SetFamily& F, int k);

SetFamily complement_family(const SetFamily& F);

} // namespace posetlab
