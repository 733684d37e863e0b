#pragma once

#include <cstddef>
#include <span>

// Data-parallel inner loops shared by the eigensolver and the grid samplers.
// Each kernel has a scalar reference implementation and an AVX2 variant that
// performs the identical operation sequence per lane, so both backends return
// bit-identical results; the equivalence tests assert exactly that.
//
// The backend is picked once at startup from a CPU probe and can be forced
// with DIRAC_AC_KERNELS=scalar|avx2.

namespace diracac::kernels {

// Number of eigenvalues of the symmetric tridiagonal matrix with diagonal
// `diag` and constant off-diagonal e (e*e = offdiag_sq) strictly below each
// shift, via the negative-pivot count of the Sturm factorization.
void sturm_count_batch(std::span<const double> diag, double offdiag_sq,
                       std::span<const double> shifts, std::span<int> counts);

// out[i] = coeffs[0] + coeffs[1]*x[i] + ... by Horner with fused multiply-add.
void horner_batch(std::span<const double> coeffs, std::span<const double> x,
                  std::span<double> out);

// sum_i a[i]*b[i], accumulated in four interleaved partials (the AVX2 lane
// layout) and combined as (p0+p1)+(p2+p3).
double dot(std::span<const double> a, std::span<const double> b);

const char* active_backend();  // "scalar" or "avx2"

namespace scalar {
void sturm_count_batch(std::span<const double> diag, double offdiag_sq,
                       std::span<const double> shifts, std::span<int> counts);
void horner_batch(std::span<const double> coeffs, std::span<const double> x,
                  std::span<double> out);
double dot(std::span<const double> a, std::span<const double> b);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define DIRACAC_HAVE_AVX2_KERNELS 1
bool avx2_supported();
namespace avx2 {
void sturm_count_batch(std::span<const double> diag, double offdiag_sq,
                       std::span<const double> shifts, std::span<int> counts);
void horner_batch(std::span<const double> coeffs, std::span<const double> x,
                  std::span<double> out);
double dot(std::span<const double> a, std::span<const double> b);
}  // namespace avx2
#endif

}  // namespace diracac::kernels
