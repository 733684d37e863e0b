#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "diracac/kernels.hpp"

using namespace diracac;

namespace {

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n,
                                  double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> v(n);
    for (double& x : v) x = dist(rng);
    return v;
}

}  // namespace

TEST_CASE("sturm count against the discrete Laplacian spectrum") {
    // d = 2/h^2, e = -1/h^2 has eigenvalues (2 - 2 cos(k pi/(N+1)))/h^2.
    const int n = 513;
    const double h = 0.01;
    const double inv_h2 = 1.0 / (h * h);
    std::vector<double> diag(n, 2.0 * inv_h2);
    std::vector<double> eigs(n);
    for (int k = 1; k <= n; ++k)
        eigs[k - 1] =
            (2.0 - 2.0 * std::cos(k * std::numbers::pi / (n + 1))) * inv_h2;

    for (int k : {1, 2, 17, 256, 512, 513}) {
        const double below = 0.5 * (eigs[k - 1] + (k < n ? eigs[k] : eigs[k - 1] + 1.0));
        int count = 0;
        kernels::sturm_count_batch(diag, inv_h2 * inv_h2, {&below, 1},
                                   {&count, 1});
        CHECK(count == k);
    }
    const double under_all = eigs[0] * 0.5;
    int count = -1;
    kernels::sturm_count_batch(diag, inv_h2 * inv_h2, {&under_all, 1},
                               {&count, 1});
    CHECK(count == 0);
}

TEST_CASE("scalar and dispatched backends agree bit for bit") {
    std::mt19937_64 rng(20240811);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t n = 64 + rep * 37;
        const auto diag = random_vector(rng, n, -5.0, 50.0);
        const double e2 = std::uniform_real_distribution<double>(0.1, 9.0)(rng);
        const auto shifts = random_vector(rng, 4 + rep % 7, -10.0, 60.0);

        std::vector<int> ref(shifts.size()), got(shifts.size());
        kernels::scalar::sturm_count_batch(diag, e2, shifts, ref);
        kernels::sturm_count_batch(diag, e2, shifts, got);
        CHECK(ref == got);

        const auto coeffs = random_vector(rng, 1 + rep % 9, -2.0, 2.0);
        const auto x = random_vector(rng, n, 0.0, 30.0);
        std::vector<double> pref(n), pgot(n);
        kernels::scalar::horner_batch(coeffs, x, pref);
        kernels::horner_batch(coeffs, x, pgot);
        CHECK(pref == pgot);

        const auto a = random_vector(rng, n, -1.0, 1.0);
        const auto b = random_vector(rng, n, -1.0, 1.0);
        CHECK(kernels::scalar::dot(a, b) == kernels::dot(a, b));
    }
}

#if DIRACAC_HAVE_AVX2_KERNELS
TEST_CASE("avx2 variants are bit-identical to the scalar reference") {
    if (!kernels::avx2_supported()) {
        MESSAGE("AVX2 not available on this host; skipping");
        return;
    }
    std::mt19937_64 rng(777);
    for (int rep = 0; rep < 30; ++rep) {
        const std::size_t n = 63 + rep * 11;  // deliberately odd sizes
        const auto diag = random_vector(rng, n, -5.0, 50.0);
        const double e2 = std::uniform_real_distribution<double>(0.1, 9.0)(rng);
        const auto shifts = random_vector(rng, 1 + rep % 9, -10.0, 60.0);

        std::vector<int> ref(shifts.size()), got(shifts.size());
        kernels::scalar::sturm_count_batch(diag, e2, shifts, ref);
        kernels::avx2::sturm_count_batch(diag, e2, shifts, got);
        CHECK(ref == got);

        const auto coeffs = random_vector(rng, 1 + rep % 12, -2.0, 2.0);
        const auto x = random_vector(rng, n, 0.0, 30.0);
        std::vector<double> pref(n), pgot(n);
        kernels::scalar::horner_batch(coeffs, x, pref);
        kernels::avx2::horner_batch(coeffs, x, pgot);
        for (std::size_t i = 0; i < n; ++i) CHECK(pref[i] == pgot[i]);

        const auto a = random_vector(rng, n, -1.0, 1.0);
        const auto b = random_vector(rng, n, -1.0, 1.0);
        CHECK(kernels::scalar::dot(a, b) == kernels::avx2::dot(a, b));
    }
}
#endif

TEST_CASE("horner evaluates the plain power sum") {
    const std::vector<double> coeffs{1.0, -2.0, 0.5};  // 1 - 2x + x^2/2
    const std::vector<double> x{0.0, 1.0, 2.0};
    std::vector<double> out(3);
    kernels::horner_batch(coeffs, x, out);
    CHECK(out[0] == doctest::Approx(1.0));
    CHECK(out[1] == doctest::Approx(-0.5));
    CHECK(out[2] == doctest::Approx(-1.0));
}

TEST_CASE("dot matches a straightforward sum") {
    std::mt19937_64 rng(3);
    const auto a = random_vector(rng, 1001, -1.0, 1.0);
    const auto b = random_vector(rng, 1001, -1.0, 1.0);
    double plain = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) plain += a[i] * b[i];
    CHECK(kernels::dot(a, b) == doctest::Approx(plain).epsilon(1e-13));
}
