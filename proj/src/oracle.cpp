#include "diracac/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "diracac/kernels.hpp"
#include "diracac/parallel.hpp"

namespace diracac {

namespace {

void check_grid(const RadialGrid& grid) {
    if (!(grid.rho_max > 0.0))
        throw std::invalid_argument("rho_max must be positive");
    if (grid.points < 64)
        throw std::invalid_argument("grid too coarse (need >= 64 points)");
}

// Discrete second difference of i^nu divided by i^nu. Using this in place of
// h^2*(nu^2 - nu)/r^2 makes the stencil annihilate the exact r^nu behaviour
// at the origin; the plain coefficient loses two orders of convergence for
// nu < 1 (|zeta/eta| < 1/2). Direct powers for small i, a cancellation-safe
// series beyond.
double centrifugal_coeff(double nu, int i) {
    if (i < 64) {
        const double ip = std::pow(static_cast<double>(i), nu);
        return (std::pow(static_cast<double>(i - 1), nu) - 2.0 * ip +
                std::pow(static_cast<double>(i + 1), nu)) /
               ip;
    }
    const double x2 = 1.0 / (static_cast<double>(i) * static_cast<double>(i));
    const double c2 = nu * (nu - 1.0);
    const double c4 = c2 * (nu - 2.0) * (nu - 3.0) / 12.0;
    const double c6 = c4 * (nu - 4.0) * (nu - 5.0) / 30.0;
    const double c8 = c6 * (nu - 6.0) * (nu - 7.0) / 56.0;
    return x2 * (c2 + x2 * (c4 + x2 * (c6 + x2 * c8)));
}

}  // namespace

RadialGrid default_grid(double m_omega, int points) {
    if (!(m_omega > 0.0))
        throw std::invalid_argument("m*omega must be positive");
    return {10.0 / std::sqrt(m_omega), points};
}

RadialOperator discretize_radial(double zeta_over_eta, double m_omega,
                                 const RadialGrid& grid) {
    if (!(m_omega > 0.0))
        throw std::invalid_argument("m*omega must be positive");
    check_grid(grid);

    const double h = grid.rho_max / (grid.points + 1);
    const double inv_h2 = 1.0 / (h * h);
    const double nu = std::fabs(zeta_over_eta) + 0.5;

    RadialOperator op;
    op.h = h;
    op.offdiag = -inv_h2;
    op.offdiag_sq = inv_h2 * inv_h2;
    op.diag.resize(grid.points);
    for (int i = 1; i <= grid.points; ++i) {
        const double r = i * h;
        op.diag[i - 1] = (2.0 + centrifugal_coeff(nu, i)) * inv_h2 +
                         (m_omega * r) * (m_omega * r);
    }
    return op;
}

std::vector<double> oracle_eigenvalues(double zeta_over_eta, double m_omega,
                                       int count, const RadialGrid& grid) {
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    const RadialOperator op = discretize_radial(zeta_over_eta, m_omega, grid);
    if (count * 8 > grid.points)
        throw std::invalid_argument("count too large for this grid");

    const auto [dmin_it, dmax_it] =
        std::minmax_element(op.diag.begin(), op.diag.end());
    const double radius = 2.0 * std::fabs(op.offdiag);
    double lo = *dmin_it - radius;
    double hi = *dmax_it + radius;
    const double slack = 1e-12 * (hi - lo);
    lo -= slack;
    hi += slack;

    {
        int below_hi = 0;
        kernels::sturm_count_batch(op.diag, op.offdiag_sq, {&hi, 1},
                                   {&below_hi, 1});
        if (below_hi < count)
            throw std::runtime_error("failed to bracket eigenvalue " +
                                     std::to_string(below_hi));
    }

    std::vector<double> lower(count, lo), upper(count, hi);
    std::vector<double> mid(count);
    std::vector<int> below(count);
    const double eps = std::numeric_limits<double>::epsilon();
    for (int iter = 0; iter < 200; ++iter) {
        bool done = true;
        for (int j = 0; j < count; ++j) {
            mid[j] = 0.5 * (lower[j] + upper[j]);
            if (upper[j] - lower[j] >
                4.0 * eps * std::max(std::fabs(lower[j]), std::fabs(upper[j])))
                done = false;
        }
        if (done) break;
        kernels::sturm_count_batch(op.diag, op.offdiag_sq, mid, below);
        for (int j = 0; j < count; ++j) {
            if (below[j] >= j + 1)
                upper[j] = mid[j];
            else
                lower[j] = mid[j];
        }
    }

    std::vector<double> eigs(count);
    for (int j = 0; j < count; ++j) eigs[j] = 0.5 * (lower[j] + upper[j]);
    std::sort(eigs.begin(), eigs.end());
    return eigs;
}

double richardson_refine(double coarse, double fine, int order) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    // Additive form of (2^order fine - coarse)/(2^order - 1): exact fixed
    // point when coarse == fine.
    const double factor = std::ldexp(1.0, order);
    return fine + (fine - coarse) / (factor - 1.0);
}

std::vector<ValidationPoint> run_validation_lattice(int count,
                                                    int coarse_points,
                                                    bool corrupt_bracket) {
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    static constexpr double kZetaOverEta[] = {0.0,  0.25, -0.25, 0.5,
                                              -0.5, 0.75, -0.75, 1.5};
    static constexpr double kMOmega[] = {0.5, 1.0, 2.0};
    constexpr int kNumC = 8, kNumW = 3;

    std::vector<ValidationPoint> points(
        static_cast<std::size_t>(kNumC * kNumW * count));
    parallel_for(kNumC * kNumW, [&](std::size_t task) {
        const double c = kZetaOverEta[task / kNumW];
        const double mw = kMOmega[task % kNumW];
        const RadialGrid coarse = default_grid(mw, coarse_points);
        const RadialGrid fine = default_grid(mw, 2 * coarse_points);
        const std::vector<double> ec = oracle_eigenvalues(c, mw, count, coarse);
        const std::vector<double> ef = oracle_eigenvalues(c, mw, count, fine);
        for (int j = 0; j < count; ++j) {
            ValidationPoint& p = points[task * count + j];
            p.zeta_over_eta = c;
            p.m_omega = mw;
            p.j = j;
            p.beta_oracle = richardson_refine(ec[j], ef[j]);
            p.beta_analytic =
                corrupt_bracket ? 4.0 * mw * (j + std::fabs(c) / 2.0)
                                : 4.0 * mw * (j + std::fabs(c) / 2.0 + 0.5);
            p.rel_err = std::fabs(p.beta_oracle - p.beta_analytic) /
                        std::fabs(p.beta_analytic);
            p.tol = std::fabs(c) < 0.5 ? 1e-4 : 1e-6;
            p.pass = p.rel_err <= p.tol;
            p.coarse_points = coarse.points;
            p.fine_points = fine.points;
        }
    });
    return points;
}

}  // namespace diracac
