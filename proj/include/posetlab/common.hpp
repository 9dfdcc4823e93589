#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace posetlab {

// A subset of [n] as a machine word; element e (1-based) lives at bit e-1.
using mask_t = std::uint64_t;

constexpr int kMaxGround = 63;

inline int popcount(mask_t m) { return std::popcount(m); }

inline mask_t full_mask(int n) {
    return n >= 64 ? ~mask_t{0} : ((mask_t{1} << n) - 1);
}

// C(n,k), exact for 0 <= n <= 63 (fits in 64 bits since C(63,31) < 2^63).
constexpr std::uint64_t binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    return static_cast<std::uint64_t>(r);
}

// A requested construction size exceeds what the strategy can deliver.
struct capacity_error : std::runtime_error {
    std::size_t capacity;
    capacity_error(const std::string& what, std::size_t cap)
        : std::runtime_error(what), capacity(cap) {}
};

// An exhaustive sweep is infeasible without an explicit override.
struct scale_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An inequality's side condition cannot hold for these arguments at all.
struct hypothesis_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Verdict { holds, violated, hypothesis_not_met, unevaluated };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::violated: return "violated";
        case Verdict::hypothesis_not_met: return "hypothesis-not-met";
        case Verdict::unevaluated: return "unevaluated";
    }
    return "?";
}

} // namespace posetlab
