#pragma once

#include <vector>

namespace diracac {

// Uniform radial grid with Dirichlet walls: interior nodes r_i = i*h,
// i = 1..points, h = rho_max/(points+1).
struct RadialGrid {
    double rho_max = 0.0;
    int points = 0;
};

/// rho_max = 10/sqrt(m*omega), which pushes the Gaussian weight at the wall
/// below 1e-43.
RadialGrid default_grid(double m_omega, int points = 2048);

// Symmetric tridiagonal discretization of
//   -d^2/dr^2 + [(zeta/eta)^2 - 1/4]/r^2 + (m omega)^2 r^2
// acting on u = sqrt(r) R(r). All off-diagonals equal -1/h^2.
struct RadialOperator {
    std::vector<double> diag;
    double offdiag = 0.0;     // -1/h^2
    double offdiag_sq = 0.0;  // 1/h^4
    double h = 0.0;
};

RadialOperator discretize_radial(double zeta_over_eta, double m_omega,
                                 const RadialGrid& grid);

/// Lowest `count` eigenvalues (ascending) via Sturm-sequence bisection;
/// deterministic. Throws when an eigenvalue cannot be bracketed, naming the
/// offending index.
std::vector<double> oracle_eigenvalues(double zeta_over_eta, double m_omega,
                                       int count, const RadialGrid& grid);

/// (2^order*fine - coarse)/(2^order - 1); `fine` computed at half the step.
double richardson_refine(double coarse, double fine, int order = 2);

struct ValidationPoint {
    double zeta_over_eta = 0.0;
    double m_omega = 0.0;
    int j = 0;
    double beta_analytic = 0.0;
    double beta_oracle = 0.0;  // Richardson-refined
    double rel_err = 0.0;
    double tol = 0.0;
    bool pass = false;
    int coarse_points = 0;
    int fine_points = 0;
};

/// Runs the cross-validation lattice
///   zeta/eta in {0, +-0.25, +-0.5, +-0.75, 1.5} x m*omega in {0.5, 1, 2},
/// eigenvalue indices j = 0..count-1, grids (coarse_points, 2*coarse_points),
/// against beta = 4 m omega (j + |zeta/eta|/2 + 1/2). Gates: 1e-6 relative,
/// relaxed to 1e-4 for the near-singular |zeta/eta| < 1/2 points.
/// `corrupt_bracket` drops the +1/2 from the analytic formula (harness
/// self-test hook).
std::vector<ValidationPoint> run_validation_lattice(
    int count = 4, int coarse_points = 2048, bool corrupt_bracket = false);

}  // namespace diracac
