#include "diracac/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <string_view>

namespace diracac::kernels {

namespace {

// Smallest admissible pivot magnitude; pivots closer to zero are replaced by
// -pivmin so the negative-pivot count stays monotone in the shift.
inline double pivot_floor(double offdiag_sq) {
    return std::numeric_limits<double>::min() * std::max(1.0, offdiag_sq);
}

inline int sturm_count_one(std::span<const double> diag, double e2, double x,
                           double pivmin) {
    int count = 0;
    double q = diag[0] - x;
    if (std::fabs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < diag.size(); ++i) {
        q = (diag[i] - x) - e2 / q;
        if (std::fabs(q) < pivmin) q = -pivmin;
        if (q < 0.0) ++count;
    }
    return count;
}

}  // namespace

namespace scalar {

void sturm_count_batch(std::span<const double> diag, double offdiag_sq,
                       std::span<const double> shifts, std::span<int> counts) {
    const double pivmin = pivot_floor(offdiag_sq);
    for (std::size_t s = 0; s < shifts.size(); ++s)
        counts[s] = sturm_count_one(diag, offdiag_sq, shifts[s], pivmin);
}

void horner_batch(std::span<const double> coeffs, std::span<const double> x,
                  std::span<double> out) {
    if (coeffs.empty()) {
        for (std::size_t i = 0; i < x.size(); ++i) out[i] = 0.0;
        return;
    }
    const std::size_t deg = coeffs.size() - 1;
    // Compensated Horner: the rounding error of every product and sum is
    // recovered (TwoProd via fma, TwoSum) and accumulated alongside, which
    // keeps alternating polynomials accurate even when the terms cancel by
    // many orders of magnitude.
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double xi = x[i];
        double acc = coeffs[deg];
        double err = 0.0;
        for (std::size_t j = deg; j-- > 0;) {
            const double prod = acc * xi;
            const double prod_err = std::fma(acc, xi, -prod);
            const double sum = prod + coeffs[j];
            const double t = sum - prod;
            const double sum_err = (prod - (sum - t)) + (coeffs[j] - t);
            acc = sum;
            err = std::fma(err, xi, prod_err + sum_err);
        }
        out[i] = acc + err;
    }
}

double dot(std::span<const double> a, std::span<const double> b) {
    double p[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i)
        p[i & 3] = std::fma(a[i], b[i], p[i & 3]);
    return (p[0] + p[1]) + (p[2] + p[3]);
}

}  // namespace scalar

namespace {

struct Dispatch {
    void (*sturm)(std::span<const double>, double, std::span<const double>,
                  std::span<int>);
    void (*horner)(std::span<const double>, std::span<const double>,
                   std::span<double>);
    double (*dotp)(std::span<const double>, std::span<const double>);
    const char* name;
};

Dispatch pick_backend() {
#if DIRACAC_HAVE_AVX2_KERNELS
    bool want_avx2 = avx2_supported();
    if (const char* env = std::getenv("DIRAC_AC_KERNELS")) {
        std::string_view v(env);
        if (v == "scalar") want_avx2 = false;
        else if (v == "avx2") want_avx2 = true;
    }
    if (want_avx2)
        return {&avx2::sturm_count_batch, &avx2::horner_batch, &avx2::dot,
                "avx2"};
#endif
    return {&scalar::sturm_count_batch, &scalar::horner_batch, &scalar::dot,
            "scalar"};
}

const Dispatch& backend() {
    static const Dispatch d = pick_backend();
    return d;
}

}  // namespace

void sturm_count_batch(std::span<const double> diag, double offdiag_sq,
                       std::span<const double> shifts, std::span<int> counts) {
    backend().sturm(diag, offdiag_sq, shifts, counts);
}

void horner_batch(std::span<const double> coeffs, std::span<const double> x,
                  std::span<double> out) {
    backend().horner(coeffs, x, out);
}

double dot(std::span<const double> a, std::span<const double> b) {
    return backend().dotp(a, b);
}

const char* active_backend() { return backend().name; }

}  // namespace diracac::kernels
