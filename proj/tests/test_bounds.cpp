#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "posetlab/bounds.hpp"
#include "posetlab/extremal.hpp"
#include "test_util.hpp"

using namespace posetlab;
using namespace posetlab::testutil;

namespace {
const BoundReport& row(const std::vector<BoundReport>& rs, const std::string& name) {
    for (const auto& r : rs)
        if (r.name == name) return r;
    throw std::logic_error("missing row " + name);
}
} // namespace

TEST_CASE("gen_binom examples and integer cross-check") {
    CHECK(gen_binom(4.0, 2) == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(gen_binom(3.5, 2) == doctest::Approx(4.375).epsilon(1e-14));
    for (int l = 1; l <= 8; ++l) CHECK(gen_binom(l - 1.0, l) == 0.0);
    for (int n = 0; n <= 60; ++n) {
        for (int l = 1; l <= n; ++l) {
            double exact = static_cast<double>(binomial(n, l));
            CHECK(gen_binom(n, l) == doctest::Approx(exact).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(gen_binom(2.0, 0), std::invalid_argument);
}

TEST_CASE("x_of examples") {
    CHECK(x_of(2, 3) == doctest::Approx(3.0).epsilon(1e-11));
    CHECK(x_of(3, 4) == doctest::Approx(4.0).epsilon(1e-11));
    // independent quadratic-formula value for x(x-1)/2 = 4
    CHECK(x_of(2, 4) == doctest::Approx((1.0 + std::sqrt(33.0)) / 2.0).epsilon(1e-11));
    for (int l = 1; l <= 10; ++l) CHECK(x_of(l, 0) == doctest::Approx(l - 1.0));
}

TEST_CASE("x_of monotonicity") {
    for (int l = 2; l <= 12; ++l) {
        double prev = x_of(l, 1);
        for (double m : {2.0, 5.0, 17.0, 120.0, 3000.0}) {
            double x = x_of(l, m);
            CHECK(x > prev);
            prev = x;
        }
    }
}

TEST_CASE("g_of examples and the two algebraic routes") {
    CHECK(g_of(2, 3) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(g_of(3, 4) == doctest::Approx(2.0).epsilon(1e-9));
    for (int l = 1; l <= 10; ++l) CHECK(g_of(l, 0) == 0.0);
    for (int l = 2; l <= 30; ++l) {
        for (double m : {1.0, 2.0, 7.0, 50.0, 900.0, 40000.0}) {
            double a = g_of(l, m);
            double b = g_of_ratio(l, m);
            CHECK(a == doctest::Approx(b).epsilon(1e-9));
        }
    }
}

TEST_CASE("lovasz_shadow_lb examples") {
    CHECK(lovasz_shadow_lb(3, 4) == doctest::Approx(6.0).epsilon(1e-11));
    CHECK(lovasz_shadow_lb(2, 1) == doctest::Approx(2.0).epsilon(1e-11));
    CHECK(lovasz_shadow_lb(3, 10) == doctest::Approx(10.0).epsilon(1e-11));
    CHECK(lovasz_shadow_lb(3, 0) == 0.0); // empty family has an empty shadow
}

TEST_CASE("lovasz_shadow_lb never exceeds a real shadow") {
    Rng rng(3001);
    for (int t = 0; t < 150; ++t) {
        int n = static_cast<int>(rng.range(2, 10));
        int k = static_cast<int>(rng.range(1, n));
        SetFamily f = random_uniform_family(n, k, rng.range(0, 25), rng);
        double lb = lovasz_shadow_lb(k, static_cast<double>(f.size()));
        CHECK(lb <= static_cast<double>(shadow(f, k - 1).size()) + 1e-9);
    }
}

TEST_CASE("shade bound through complementation") {
    // Sperner families in the lower half: the shade of G at k+1 is bounded
    // below by the shadow bound applied with l = n-k.
    Rng rng(3002);
    for (int t = 0; t < 100; ++t) {
        int n = static_cast<int>(rng.range(4, 10));
        int k = static_cast<int>(rng.range(1, (n + 1) / 2));
        SetFamily f = random_uniform_family(n, k, rng.range(1, 20), rng);
        double lb = lovasz_shadow_lb(n - k, static_cast<double>(f.size()));
        CHECK(lb <= static_cast<double>(shade(f, k + 1).size()) + 1e-9);
    }
}

TEST_CASE("property grid rows at the worked points") {
    auto r23 = prop_change_report(2, 3, 1);
    CHECK(row(r23, "ii").verdict == Verdict::holds); // x = 3 <= 3, g = 0
    CHECK(*row(r23, "ii").lhs == doctest::Approx(0.0).epsilon(1e-9));

    auto r31 = prop_change_report(3, 1, 0);
    const BoundReport& vi = row(r31, "vi");
    CHECK(vi.verdict == Verdict::holds); // x = 3 <= (4*3-3)/3 = 3, g = 2 = 2m
    CHECK(*vi.lhs == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(vi.rhs == doctest::Approx(2.0));

    auto r34 = prop_change_report(3, 4, 2);
    CHECK(row(r34, "vi").verdict == Verdict::hypothesis_not_met); // x = 4 > 3
    const BoundReport& lit = row(r34, "vi-literal");
    CHECK(lit.verdict == Verdict::violated); // x = 4 <= 4 but g = 2 < 8
    CHECK(*lit.lhs == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(lit.rhs == doctest::Approx(8.0));
}

TEST_CASE("property grid rows hold inside their hypotheses") {
    for (int l : {3, 5, 9, 17, 33}) {
        for (double m : {1.0, 3.0, 20.0, 400.0}) {
            auto rows = prop_change_report(l, m, std::floor(m / 2));
            for (const auto& r : rows) {
                if (r.name == "vi-literal") continue;
                CHECK(r.verdict != Verdict::violated);
            }
        }
    }
}

TEST_CASE("stability_rhs values") {
    BoundReport w = stability_rhs(StabilityBound::weakstab, 10, 5);
    CHECK(w.rhs == doctest::Approx(static_cast<double>(sigma(10, 2)) - 1.9 * 5 / 10));
    CHECK(w.verdict == Verdict::unevaluated);

    BoundReport c = stability_rhs(StabilityBound::cor_butt, 8, 6);
    CHECK(c.rhs == doctest::Approx(static_cast<double>(sigma(8, 2)) - 2.0));

    BoundReport b4 = stability_rhs(StabilityBound::butterflystab_4, 9, 12);
    BoundReport b6 = stability_rhs(StabilityBound::butterflystab_6, 9, 12);
    CHECK(b6.rhs - b4.rhs == doctest::Approx(1.0)); // 12/4 - 12/6

    BoundReport s = stability_rhs(StabilityBound::spernerstab, 12, 9);
    CHECK(s.rhs == doctest::Approx(static_cast<double>(sigma(12, 2)) - g_of(12 / 2 + 1, 9)));

    BoundReport held = stability_rhs(StabilityBound::weakstab, 10, 5, 100.0);
    CHECK(held.verdict == Verdict::holds);
    BoundReport broken = stability_rhs(StabilityBound::weakstab, 10, 5, 1e6);
    CHECK(broken.verdict == Verdict::violated);

    CHECK_THROWS_AS(stability_from_name("nope"), std::invalid_argument);
    CHECK(stability_from_name("butterflystab_6") == StabilityBound::butterflystab_6);
}

TEST_CASE("stability reports record their hypotheses verbatim") {
    BoundReport b4 = stability_rhs(StabilityBound::butterflystab_4, 9, 12);
    CHECK(b4.param("hypothesis") == "butterfly-free; log m = o(n)");
    BoundReport b6 = stability_rhs(StabilityBound::butterflystab_6, 9, 12);
    CHECK(b6.param("hypothesis") == "butterfly-free; m = o(C(n/2 + log n, n/2))");
    CHECK(!b6.param("note").empty());
    CHECK(!b4.param("note").empty());
}
