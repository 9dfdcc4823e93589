#include "posetlab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "posetlab/extremal.hpp"
#include "posetlab/report.hpp"

namespace posetlab {

std::string BoundReport::param(const std::string& key) const {
    for (const auto& [k, v] : params)
        if (k == key) return v;
    return {};
}

double gen_binom(double x, int l) {
    if (l < 1) throw std::invalid_argument("gen_binom: l must be >= 1");
    // compensated product: p carries the running value, e the accumulated
    // rounding residue (exact residuals via fma)
    double p = 1.0, e = 0.0;
    for (int i = 0; i < l; ++i) {
        double f = x - i;
        double p1 = p * f;
        double err = std::fma(p, f, -p1);
        e = e * f + err;
        double d = i + 1;
        double p2 = p1 / d;
        double rem = std::fma(-p2, d, p1);
        e = (e + rem) / d;
        p = p2;
    }
    return p + e;
}

double x_of(int l, double m) {
    if (l < 1) throw std::invalid_argument("x_of: l must be >= 1");
    if (m < 0) throw std::invalid_argument("x_of: m must be >= 0");
    if (m == 0) return l - 1;
    double lo = l - 1;
    double hi = static_cast<double>(l) + m; // gen_binom(l+m, l) >= m+1 > m
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (gen_binom(mid, l) < m) lo = mid;
        else hi = mid;
        if (hi - lo <= 1e-12 * std::max(1.0, hi)) break;
    }
    return 0.5 * (lo + hi);
}

double g_of(int l, double m) {
    if (m == 0) return 0.0;
    double x = x_of(l, m);
    if (l == 1) return 1.0 - m; // C(x,0) = 1
    return gen_binom(x, l - 1) - m;
}

double g_of_ratio(int l, double m) {
    if (m == 0) return 0.0;
    double x = x_of(l, m);
    return (2.0 * l - x - 1.0) / (x - l + 1.0) * m;
}

double lovasz_shadow_lb(int l, double m) {
    if (m == 0) return 0.0;
    double x = x_of(l, m);
    if (l == 1) return 1.0;
    return gen_binom(x, l - 1);
}

static Verdict check(bool hypothesis, bool ok) {
    if (!hypothesis) return Verdict::hypothesis_not_met;
    return ok ? Verdict::holds : Verdict::violated;
}

static std::string fmt(double v) { return format_real(v); }

std::vector<BoundReport> prop_change_report(int l, double m, double m1) {
    if (l < 1) throw std::invalid_argument("prop_change_report: l must be >= 1");
    if (m < 0 || m1 < 0 || m1 > m) throw std::invalid_argument("prop_change_report: need 0 <= m1 <= m");
    double x = x_of(l, m);
    double g = g_of(l, m);
    const double tol = 1e-9 * std::max({1.0, std::abs(g), m});

    std::vector<BoundReport> out;
    auto add = [&](const std::string& name, double lhs, double rhs, bool lhs_ge_rhs,
                   bool hypothesis, const std::string& hyp) {
        BoundReport r;
        r.name = name;
        r.params = {{"l", fmt(l)}, {"m", fmt(m)}, {"m1", fmt(m1)}, {"x", fmt(x)}, {"hypothesis", hyp}};
        r.lhs = lhs;
        r.rhs = rhs;
        bool ok = lhs_ge_rhs ? (lhs >= rhs - tol) : (lhs <= rhs + tol);
        r.verdict = check(hypothesis, ok);
        out.push_back(std::move(r));
    };

    // x carries the bisection's 1e-12 relative error, so threshold tests on x
    // get relative slack
    auto x_below = [&](double thr) { return x <= thr + 1e-9 * std::max(1.0, thr); };

    // (i) x monotone in l
    add("i", x, x_of(l + 1, m), false, m <= gen_binom(2.0 * l, l), "m <= C(2l,l)");
    // (ii) g nonnegative below the zero of the ratio form
    add("ii", g, 0.0, true, x_below(2.0 * l - 1.0), "x <= 2l-1");
    // (iii) superadditivity of g in m
    add("iii", g_of(l, m1) + g_of(l, m - m1), g, true, x_below(2.0 * l - 1.0),
        "m1+m2 = m and x(l,m) <= 2l-1");
    // (iv) g monotone in l
    add("iv", g, g_of(l + 1, m), false, m <= gen_binom(2.0 * l - 1.0, l), "m <= C(2l-1,l)");
    // (v) g increasing in m; concrete form of the large-l statement with
    // eps = 1/2: the underlying polynomial peaks at x = (l-1)(2l-1)/l, and
    // 1.5l stays below that for l >= 6
    add("v", g_of(l, m + 1), g, true, l >= 6 && m + 1 <= gen_binom(1.5 * l, l),
        "l >= 6 (eps = 1/2) and m+1 <= C(1.5l,l)");
    // (vi) g >= 2m under the exact threshold
    add("vi", g, 2.0 * m, true, x_below((4.0 * l - 3.0) / 3.0), "x <= (4l-3)/3");
    // same item under the literal threshold; fails at l=3, m=4
    add("vi-literal", g, 2.0 * m, true, x_below(4.0 * l / 3.0), "x <= 4l/3 (literal)");
    return out;
}

StabilityBound stability_from_name(const std::string& name) {
    if (name == "weakstab") return StabilityBound::weakstab;
    if (name == "spernerstab") return StabilityBound::spernerstab;
    if (name == "butterflystab_4") return StabilityBound::butterflystab_4;
    if (name == "butterflystab_6") return StabilityBound::butterflystab_6;
    if (name == "cor_butt") return StabilityBound::cor_butt;
    throw std::invalid_argument("stability_rhs: unknown bound '" + name + "'");
}

const char* stability_name(StabilityBound b) {
    switch (b) {
        case StabilityBound::weakstab: return "weakstab";
        case StabilityBound::spernerstab: return "spernerstab";
        case StabilityBound::butterflystab_4: return "butterflystab_4";
        case StabilityBound::butterflystab_6: return "butterflystab_6";
        case StabilityBound::cor_butt: return "cor_butt";
    }
    return "?";
}

BoundReport stability_rhs(StabilityBound name, int n, double m, std::optional<double> lhs) {
    if (n < 1) throw std::invalid_argument("stability_rhs: n must be >= 1");
    if (m < 0) throw std::invalid_argument("stability_rhs: m must be >= 0");
    double s = static_cast<double>(sigma(n, std::min(n, 2)));
    BoundReport r;
    r.name = stability_name(name);
    r.params = {{"n", fmt(n)}, {"m", fmt(m)}};
    switch (name) {
        case StabilityBound::weakstab:
            r.rhs = s - 1.9 * m / n;
            r.params.emplace_back("hypothesis", "2-Sperner; >= m sets missing from / outside the middle layers");
            break;
        case StabilityBound::spernerstab:
            r.rhs = s - g_of((n + 1) / 2 + 1, m);
            r.params.emplace_back("hypothesis",
                                  "2-Sperner; m <= C((1-eps)n, floor(n/2)); every extremal family misses >= m sets");
            break;
        case StabilityBound::butterflystab_4:
            r.rhs = s - m / 4.0;
            r.params.emplace_back("hypothesis", "butterfly-free; log m = o(n)");
            r.params.emplace_back("note", "companion variants quote m/6 and m/2 for the same bound");
            break;
        case StabilityBound::butterflystab_6:
            r.rhs = s - m / 6.0;
            r.params.emplace_back("hypothesis", "butterfly-free; m = o(C(n/2 + log n, n/2))");
            r.params.emplace_back("note", "companion variants quote m/4 and m/2 for the same bound");
            break;
        case StabilityBound::cor_butt:
            r.rhs = s - m / 3.0;
            r.params.emplace_back("hypothesis",
                                  "butterfly-free; empty set and ground set absent; m = |middle family|; n >= 8");
            break;
    }
    r.lhs = lhs;
    if (lhs) r.verdict = *lhs <= r.rhs ? Verdict::holds : Verdict::violated;
    return r;
}

} // namespace posetlab
