#pragma once

#include <cstdint>
#include <vector>

#include "posetlab/set_family.hpp"

namespace posetlab {

// Maximum size of a k-Sperner family in 2^[n]: sum of the k largest
// consecutive binomials around the middle.
std::uint64_t sigma(int n, int k);

// Marginal butterfly cost of one extra set on a two-middle-layer family:
// (ceil(n/2)+1) * C(ceil(n/2), 2).
std::uint64_t f_n(int n);

// The extremal layer-union families of size sigma(n,k): one family when n+k
// is odd, two otherwise.
std::vector<SetFamily> sigma_star(int n, int k);

// A w-uniform family whose members pairwise intersect in at most w-2 elements
// (a distance-4 constant-weight code).
struct CodeLayer {
    int w = 0;
    SetFamily members;
    int max_pair_intersection = -1; // -1 when fewer than two members
};

// Largest residue class { S : sum of elements of S == c (mod n) } within
// layer w, ties broken by smallest c. Two w-sets meeting in w-1 elements have
// different element sums mod n, so the pairwise-intersection bound holds by
// construction and the class size is at least C(n,w)/n.
CodeLayer residue_code_layer(int n, int w);

// Colex scan of layer w admitting each set that meets all admitted sets in
// at most w-2 elements; stops at `target` members or layer exhaustion.
CodeLayer greedy_code_layer(int n, int w, std::uint64_t target);

enum class CodeStrategy { residue, greedy };

// Layers ceil(n/2)-1 and ceil(n/2), plus `extra` sets of size ceil(n/2)+1
// with pairwise intersections below ceil(n/2). Throws capacity_error (naming
// the achievable maximum) when the strategy cannot supply `extra` sets.
SetFamily build_construction(int n, std::uint64_t extra, CodeStrategy strategy);

} // namespace posetlab
