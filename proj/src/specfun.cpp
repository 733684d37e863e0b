#include "diracac/specfun.hpp"

#include <cmath>
#include <stdexcept>

#include "diracac/kernels.hpp"

namespace diracac {

namespace {

constexpr double kOverflowGuardX = 700.0;
constexpr double kIntegerTol = 1e-9;
constexpr double kTermTol = 1e-16;
constexpr int kMaxTerms = 10000;

void check_b(double b) {
    if (!(b > 0.0)) throw std::domain_error("kummer: b must be positive");
}

// Double-double scalar: value = hi + lo with |lo| <= ulp(hi)/2. The
// alternating polynomial amplifies coefficient noise by the ratio of the term
// sizes to the value (up to ~1e9 on the tested lattice), so the coefficient
// recurrence has to carry roughly twice a double's precision.
struct DD {
    double hi = 0.0;
    double lo = 0.0;
};

inline DD two_sum(double a, double b) {
    const double s = a + b;
    const double t = s - a;
    return {s, (a - (s - t)) + (b - t)};
}

inline DD two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DD dd_renorm(double hi, double lo) {
    const double s = hi + lo;
    return {s, lo - (s - hi)};
}

inline DD dd_mul(DD a, DD b) {
    DD p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return dd_renorm(p.hi, p.lo);
}

inline DD dd_mul(DD a, double b) {
    DD p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return dd_renorm(p.hi, p.lo);
}

inline DD dd_sub(DD a, DD b) {
    DD s = two_sum(a.hi, -b.hi);
    s.lo += a.lo - b.lo;
    return dd_renorm(s.hi, s.lo);
}

inline DD dd_div(DD a, DD b) {
    const double q1 = a.hi / b.hi;
    const DD r = dd_sub(a, dd_mul(b, q1));
    const double q2 = (r.hi + r.lo) / b.hi;
    return dd_renorm(q1, q2);
}

struct SplitCoeffs {
    std::vector<double> hi;
    std::vector<double> lo;
};

// Ascending coefficients of M(-n,b,x) as hi/lo pairs.
SplitCoeffs split_coeffs(int n, double b) {
    if (n < 0) throw std::domain_error("kummer_polynomial: n must be >= 0");
    check_b(b);
    SplitCoeffs out;
    out.hi.resize(static_cast<std::size_t>(n) + 1);
    out.lo.resize(static_cast<std::size_t>(n) + 1);
    out.hi[0] = 1.0;
    out.lo[0] = 0.0;
    DD acc{1.0, 0.0};
    for (int j = 0; j < n; ++j) {
        const DD denom = dd_mul(two_sum(b, j), j + 1.0);
        acc = dd_div(dd_mul(acc, static_cast<double>(j - n)), denom);
        out.hi[j + 1] = acc.hi;
        out.lo[j + 1] = acc.lo;
    }
    return out;
}

}  // namespace

std::vector<double> kummer_polynomial_coeffs(int n, double b) {
    return split_coeffs(n, b).hi;
}

void kummer_polynomial_batch(int n, double b, std::span<const double> x,
                             std::span<double> out) {
    const SplitCoeffs c = split_coeffs(n, b);
    kernels::horner_batch(c.hi, x, out);
    std::vector<double> tail(x.size());
    kernels::horner_batch(c.lo, x, tail);
    for (std::size_t i = 0; i < x.size(); ++i) out[i] += tail[i];
}

double kummer_polynomial(int n, double b, double x) {
    double out = 0.0;
    kummer_polynomial_batch(n, b, std::span<const double>(&x, 1),
                            std::span<double>(&out, 1));
    return out;
}

double kummer_1f1(const KummerArgs& args) {
    check_b(args.b);
    if (args.x < 0.0) throw std::domain_error("kummer: x must be >= 0");
    if (args.x > kOverflowGuardX)
        throw std::overflow_error("kummer: x exceeds overflow guard (700)");

    // a arrives from exact integer arithmetic in this artifact; the tolerance
    // only absorbs float noise.
    const double nearest = std::round(args.a);
    if (nearest <= 0.0 && std::fabs(args.a - nearest) <= kIntegerTol)
        return kummer_polynomial(static_cast<int>(-nearest), args.b, args.x);

    double sum = 1.0;
    double term = 1.0;
    int quiet = 0;
    for (int j = 0; j < kMaxTerms; ++j) {
        term *= (args.a + j) / (args.b + j) * args.x / (j + 1.0);
        sum += term;
        if (std::fabs(term) < kTermTol * std::fabs(sum)) {
            if (++quiet >= 3) return sum;
        } else {
            quiet = 0;
        }
    }
    throw std::runtime_error("kummer: series did not converge in 10000 terms");
}

}  // namespace diracac
