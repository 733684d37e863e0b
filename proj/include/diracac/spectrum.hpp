#pragma once

#include <span>
#include <utility>
#include <vector>

#include "diracac/model.hpp"

namespace diracac {

struct EnergyLevel {
    QuantumNumbers qn;
    double zeta = 0.0;
    double beta = 0.0;    // radial eigenvalue, 4*m*omega*(n + |zeta|/(2 eta) + 1/2)
    double energy = 0.0;  // positive branch
};

struct LevelTable {
    Background bg;
    PhysicalParams params;
    int n_max = 0;
    int l_min = 0, l_max = 0;
    std::vector<int> spins;
    std::vector<EnergyLevel> levels;  // ascending energy, ties by (n,l,s)
};

/// Radial eigenvalue from the series-termination condition
/// |zeta|/(2 eta) + 1/2 - beta/(4 m omega) = -n.
double quantization_beta(int n, double zeta, double eta, double m, double omega);

/// E^2 = m^2 + k^2 + 4 m omega [n + (|zeta| - s zeta)/(2 eta)], one arithmetic
/// path for every background (eta = 1 in Minkowski).
double energy_squared(const Background& bg, const PhysicalParams& params,
                      const QuantumNumbers& qn);

EnergyLevel energy_level(const Background& bg, const PhysicalParams& params,
                         const QuantumNumbers& qn);

/// One level per (n,l,s) in the window; empty window gives an empty table.
LevelTable enumerate_levels(const Background& bg, const PhysicalParams& params,
                            int n_max, int l_min, int l_max,
                            std::span<const int> spins);

/// Clusters energies by an absolute tolerance on E^2 and returns
/// (representative energy, multiplicity) pairs in ascending energy order.
std::vector<std::pair<double, int>> degeneracy_map(const LevelTable& table,
                                                   double tol = 1e-10);

/// Whether E_{n,l}(mu_lambda + s*direction) equals E_{n,l+direction}(mu_lambda)
/// to 1e-12 relative. The phase shift couples to the spin through s.
bool periodicity_check(const Background& bg, const PhysicalParams& params,
                       const QuantumNumbers& qn, int direction);

}  // namespace diracac
