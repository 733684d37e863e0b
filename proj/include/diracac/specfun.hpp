#pragma once

#include <span>
#include <vector>

namespace diracac {

struct KummerArgs {
    double a;  // first parameter
    double b;  // second parameter, > 0 in every use here
    double x;  // argument, >= 0
};

/// Confluent hypergeometric function M(a,b,x) by direct series summation.
/// Dispatches to the terminating polynomial when a is a non-positive integer
/// (tolerance 1e-9). Throws std::domain_error for b <= 0 or x < 0 and
/// std::overflow_error for x beyond the overflow guard (x > 700).
double kummer_1f1(const KummerArgs& args);

/// The degree-n polynomial M(-n,b,x), evaluated by Horner recurrence.
double kummer_polynomial(int n, double b, double x);

/// Ascending power-series coefficients of M(-n,b,x).
std::vector<double> kummer_polynomial_coeffs(int n, double b);

/// M(-n,b,x[i]) for a whole batch of arguments (one Horner sweep per point).
void kummer_polynomial_batch(int n, double b, std::span<const double> x,
                             std::span<double> out);

}  // namespace diracac
