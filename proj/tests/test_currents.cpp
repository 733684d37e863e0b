#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "diracac/currents.hpp"
#include "diracac/spectrum.hpp"

using namespace diracac;

namespace {
const Background kMink = Background::minkowski();
}

TEST_CASE("aligned spin-orbit carries no current") {
    PhysicalParams p;
    p.mu_lambda = 0.3;
    CHECK(level_current(kMink, p, {0, 2, +1}) == 0.0);   // zeta > 0, s = +1
    CHECK(level_current(kMink, p, {1, -3, -1}) == 0.0);  // zeta < 0, s = -1
}

TEST_CASE("worked anti-aligned value 1/(pi sqrt 3)") {
    PhysicalParams p;
    p.mu_lambda = 0.5;
    const double got = level_current(kMink, p, {0, -1, +1});
    CHECK(got == doctest::Approx(1.0 / (std::numbers::pi * std::sqrt(3.0)))
                     .epsilon(1e-14));
    // and the sign structure: contribution is +m w/(pi eta E) there
    const double e = energy_level(kMink, p, {0, -1, +1}).energy;
    CHECK(got == doctest::Approx(1.0 / (std::numbers::pi * e)).epsilon(1e-14));
    CHECK(got > 0.0);
}

TEST_CASE("zeta = 0 is a declared singularity") {
    PhysicalParams p;
    CHECK_THROWS_WITH_AS(level_current(kMink, p, {0, 0, +1}),
                         doctest::Contains("singular at zeta=0"),
                         std::domain_error);
}

TEST_CASE("finite-difference check") {
    PhysicalParams p;
    p.mu_lambda = 0.5;
    const FdCheck smooth = fd_current_check(kMink, p, {0, -1, +1});
    CHECK(smooth.rel_err < 1e-6);

    const FdCheck aligned = fd_current_check(kMink, p, {0, 1, +1});
    CHECK(aligned.analytic == 0.0);
    CHECK(aligned.numeric == 0.0);
    CHECK(aligned.rel_err == 0.0);

    // bracket straddling the kink: zeta = 5e-7 with step 1e-6
    PhysicalParams tiny;
    tiny.mu_lambda = 5e-7;
    CHECK_THROWS_WITH_AS(fd_current_check(kMink, tiny, {0, 0, +1}, 1e-6),
                         doctest::Contains("straddles kink"),
                         std::runtime_error);
    CHECK_THROWS_AS(fd_current_check(kMink, p, {0, -1, +1}, 0.0),
                    std::invalid_argument);
}

TEST_CASE("random smooth points: analytic matches central difference") {
    std::mt19937_64 rng(2718);
    std::uniform_real_distribution<double> dmu(-2.0, 2.0), deta(0.1, 1.0),
        dm(0.3, 2.5), dk(-1.5, 1.5), dchi(-1.0, 1.0);
    std::uniform_int_distribution<int> dl(-4, 4), dn(0, 3);
    int checked = 0;
    while (checked < 300) {
        Background bg;
        switch (rng() % 3) {
            case 0: bg = kMink; break;
            case 1: bg = Background::cosmic_string(deta(rng)); break;
            default:
                bg = Background::cosmic_dislocation(deta(rng), dchi(rng));
        }
        PhysicalParams p{dm(rng), dm(rng), dmu(rng), dk(rng)};
        if (bg.kind != BackgroundKind::CosmicDislocation) p.k = 0.5;
        const QuantumNumbers qn{dn(rng), dl(rng), checked % 2 ? +1 : -1};
        const double zeta = effective_zeta(bg, qn, p).value;
        if (std::fabs(zeta) < 1e-5) continue;
        const FdCheck fd = fd_current_check(bg, p, qn);
        CHECK(fd.rel_err < 1e-6);
        ++checked;
    }
}

TEST_CASE("total current over explicit level sets") {
    PhysicalParams p;
    p.mu_lambda = 0.3;

    const CurrentReport empty = total_current(kMink, p, {});
    CHECK(empty.total == 0.0);
    CHECK(empty.contributions.empty());

    const CurrentReport one = total_current(kMink, p, {{0, -1, +1}});
    REQUIRE(one.contributions.size() == 1);
    CHECK(one.total == one.contributions[0].contribution);
    CHECK(one.total == level_current(kMink, p, {0, -1, +1}));

    // the 6 levels n=0, l in -3..-1, s = +-1: finite difference of the summed
    // energies agrees with the summed analytic currents
    std::vector<QuantumNumbers> set;
    for (int l = -3; l <= -1; ++l)
        for (int s : {+1, -1}) set.push_back({0, l, s});
    const CurrentReport report = total_current(kMink, p, set);
    CHECK(report.excluded.empty());

    const double step = 1e-6;
    double sum_up = 0.0, sum_down = 0.0;
    for (const QuantumNumbers& qn : set) {
        PhysicalParams up = p, down = p;
        up.mu_lambda += step;
        down.mu_lambda -= step;
        sum_up += energy_level(kMink, up, qn).energy;
        sum_down += energy_level(kMink, down, qn).energy;
    }
    const double numeric =
        -(sum_up - sum_down) / (2.0 * 2.0 * std::numbers::pi * step);
    CHECK(report.total == doctest::Approx(numeric).epsilon(1e-6));
}

TEST_CASE("levels on the kink are excluded, not dropped silently") {
    PhysicalParams p;  // mu_lambda = 0: l = 0, s = +1 sits exactly on zeta = 0
    std::vector<QuantumNumbers> set{{0, 0, +1}, {0, -1, +1}};
    const CurrentReport report = total_current(kMink, p, set);
    REQUIRE(report.excluded.size() == 1);
    CHECK(report.excluded[0].l == 0);
    REQUIRE(report.contributions.size() == 1);
    CHECK(report.contributions[0].qn.l == -1);
}

TEST_CASE("current inherits the spectrum periodicity") {
    PhysicalParams p;
    p.mu_lambda = 0.3;
    PhysicalParams shifted = p;
    shifted.mu_lambda += 1.0;

    // window {l_min..l_max} at mu and the window shifted by s at mu+1
    for (int s : {+1, -1}) {
        std::vector<QuantumNumbers> window, moved;
        for (int l = -3; l <= 2; ++l) {
            window.push_back({1, l, s});
            moved.push_back({1, l + s, s});
        }
        const CurrentReport base = total_current(kMink, p, moved);
        const CurrentReport wrap = total_current(kMink, shifted, window);
        CHECK(wrap.total == doctest::Approx(base.total).epsilon(1e-12));
    }
}
