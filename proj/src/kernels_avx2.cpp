// AVX2 kernel variants. Compiled with -mavx2 -mfma; only ever called after the
// runtime CPU probe. Per lane these execute the same IEEE operation sequence
// as the scalar reference, so results are bit-identical.

#include "diracac/kernels.hpp"

#if DIRACAC_HAVE_AVX2_KERNELS

#include <immintrin.h>

#include <cmath>
#include <limits>

namespace diracac::kernels {

bool avx2_supported() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

namespace avx2 {

void sturm_count_batch(std::span<const double> diag, double offdiag_sq,
                       std::span<const double> shifts, std::span<int> counts) {
    const double pivmin =
        std::numeric_limits<double>::min() * std::max(1.0, offdiag_sq);
    const __m256d vpiv = _mm256_set1_pd(pivmin);
    const __m256d vneg_piv = _mm256_set1_pd(-pivmin);
    const __m256d ve2 = _mm256_set1_pd(offdiag_sq);
    const __m256d vone = _mm256_set1_pd(1.0);
    const __m256d vzero = _mm256_setzero_pd();
    const __m256d abs_mask =
        _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));

    std::size_t s = 0;
    for (; s + 4 <= shifts.size(); s += 4) {
        const __m256d vx = _mm256_loadu_pd(&shifts[s]);
        __m256d q = _mm256_sub_pd(_mm256_set1_pd(diag[0]), vx);
        __m256d small =
            _mm256_cmp_pd(_mm256_and_pd(q, abs_mask), vpiv, _CMP_LT_OQ);
        q = _mm256_blendv_pd(q, vneg_piv, small);
        __m256d cnt =
            _mm256_and_pd(_mm256_cmp_pd(q, vzero, _CMP_LT_OQ), vone);
        for (std::size_t i = 1; i < diag.size(); ++i) {
            q = _mm256_sub_pd(_mm256_sub_pd(_mm256_set1_pd(diag[i]), vx),
                              _mm256_div_pd(ve2, q));
            small = _mm256_cmp_pd(_mm256_and_pd(q, abs_mask), vpiv, _CMP_LT_OQ);
            q = _mm256_blendv_pd(q, vneg_piv, small);
            cnt = _mm256_add_pd(
                cnt, _mm256_and_pd(_mm256_cmp_pd(q, vzero, _CMP_LT_OQ), vone));
        }
        alignas(32) double lanes[4];
        _mm256_store_pd(lanes, cnt);
        for (int lane = 0; lane < 4; ++lane)
            counts[s + lane] = static_cast<int>(lanes[lane]);
    }
    if (s < shifts.size())
        scalar::sturm_count_batch(diag, offdiag_sq, shifts.subspan(s),
                                  counts.subspan(s));
}

void horner_batch(std::span<const double> coeffs, std::span<const double> x,
                  std::span<double> out) {
    if (coeffs.empty()) {
        for (std::size_t i = 0; i < x.size(); ++i) out[i] = 0.0;
        return;
    }
    const std::size_t deg = coeffs.size() - 1;
    std::size_t i = 0;
    for (; i + 4 <= x.size(); i += 4) {
        const __m256d vx = _mm256_loadu_pd(&x[i]);
        __m256d acc = _mm256_set1_pd(coeffs[deg]);
        __m256d err = _mm256_setzero_pd();
        for (std::size_t j = deg; j-- > 0;) {
            const __m256d cj = _mm256_set1_pd(coeffs[j]);
            const __m256d prod = _mm256_mul_pd(acc, vx);
            const __m256d prod_err = _mm256_fmsub_pd(acc, vx, prod);
            const __m256d sum = _mm256_add_pd(prod, cj);
            const __m256d t = _mm256_sub_pd(sum, prod);
            const __m256d sum_err =
                _mm256_add_pd(_mm256_sub_pd(prod, _mm256_sub_pd(sum, t)),
                              _mm256_sub_pd(cj, t));
            acc = sum;
            err = _mm256_fmadd_pd(err, vx, _mm256_add_pd(prod_err, sum_err));
        }
        _mm256_storeu_pd(&out[i], _mm256_add_pd(acc, err));
    }
    if (i < x.size())
        scalar::horner_batch(coeffs, x.subspan(i), out.subspan(i));
}

double dot(std::span<const double> a, std::span<const double> b) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= a.size(); i += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(&a[i]), _mm256_loadu_pd(&b[i]),
                              acc);
    alignas(32) double p[4];
    _mm256_store_pd(p, acc);
    for (; i < a.size(); ++i) p[i & 3] = std::fma(a[i], b[i], p[i & 3]);
    return (p[0] + p[1]) + (p[2] + p[3]);
}

}  // namespace avx2
}  // namespace diracac::kernels

#endif  // DIRACAC_HAVE_AVX2_KERNELS
