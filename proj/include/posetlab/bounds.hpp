#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posetlab/common.hpp"

namespace posetlab {

// Evaluated inequality: named RHS, optionally a measured LHS, the inputs it
// was evaluated at, and a verdict. `m` counts can exceed 2^64 on the large
// end of the parameter grids, so they travel as doubles (exact below 2^53).
struct BoundReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    std::optional<double> lhs;
    double rhs = 0.0;
    Verdict verdict = Verdict::unevaluated;

    std::string param(const std::string& key) const;
};

// Real-argument binomial x(x-1)...(x-l+1)/l!, compensated products; agrees
// with the integer binomial to ~1 ulp for integer x.
double gen_binom(double x, int l);

// Unique root x >= l-1 of gen_binom(x,l) = m; bisection to 1e-12 relative.
// x_of(l,0) = l-1 by convention.
double x_of(int l, double m);

// gen_binom(x_of(l,m), l-1) - m, with g_of(l,0) = 0. The identity form
// ((2l-x-1)/(x-l+1)) m is exposed separately as a cross-check route.
double g_of(int l, double m);
double g_of_ratio(int l, double m);

// Certified lower bound on the (l-1)-shadow of any m-member l-uniform family.
// Zero at m = 0 (the x-based formula would give C(l-1,l-1) = 1 there).
double lovasz_shadow_lb(int l, double m);

// One report per monotonicity/superadditivity item of the x/g property grid,
// plus both thresholds for the g >= 2m item: the algebraically exact
// x <= (4l-3)/3 ("vi") and the off-by-one literal x <= 4l/3 ("vi-literal",
// which genuinely fails at l=3, m=4).
std::vector<BoundReport> prop_change_report(int l, double m, double m1);

enum class StabilityBound { weakstab, spernerstab, butterflystab_4, butterflystab_6, cor_butt };

StabilityBound stability_from_name(const std::string& name);
const char* stability_name(StabilityBound b);

// Formula-only RHS of the named stability inequality at (n, m); hypotheses are
// recorded in params, never enforced. A measured LHS, when given, sets the
// verdict; otherwise the report stays unevaluated.
BoundReport stability_rhs(StabilityBound name, int n, double m,
                          std::optional<double> lhs = std::nullopt);

} // namespace posetlab
