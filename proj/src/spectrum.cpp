#include "diracac/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace diracac {

double quantization_beta(int n, double zeta, double eta, double m,
                         double omega) {
    if (n < 0) throw std::invalid_argument("radial n must be >= 0");
    if (!(eta > 0.0) || eta > 1.0)
        throw std::invalid_argument("eta out of range (need 0 < eta <= 1)");
    if (!(m > 0.0) || !(omega > 0.0))
        throw std::invalid_argument("m and omega must be positive");
    return 4.0 * m * omega * (n + std::fabs(zeta) / (2.0 * eta) + 0.5);
}

double energy_squared(const Background& bg, const PhysicalParams& params,
                      const QuantumNumbers& qn) {
    validate_params(params);
    const double zeta = effective_zeta(bg, qn, params).value;
    // |zeta| - s*zeta is grouped before dividing so aligned levels (s*zeta =
    // |zeta|) collapse to the same double exactly.
    const double bracket =
        qn.n + (std::fabs(zeta) - qn.s * zeta) / (2.0 * bg.eta);
    return params.mass * params.mass + params.k * params.k +
           4.0 * params.mass * params.omega * bracket;
}

EnergyLevel energy_level(const Background& bg, const PhysicalParams& params,
                         const QuantumNumbers& qn) {
    EnergyLevel lvl;
    lvl.qn = qn;
    lvl.energy = std::sqrt(energy_squared(bg, params, qn));
    lvl.zeta = effective_zeta(bg, qn, params).value;
    lvl.beta =
        quantization_beta(qn.n, lvl.zeta, bg.eta, params.mass, params.omega);
    return lvl;
}

LevelTable enumerate_levels(const Background& bg, const PhysicalParams& params,
                            int n_max, int l_min, int l_max,
                            std::span<const int> spins) {
    validate_background(bg);
    validate_params(params);
    for (int s : spins)
        if (s != 1 && s != -1)
            throw std::invalid_argument("spin s must be +1 or -1");

    LevelTable table;
    table.bg = bg;
    table.params = params;
    table.n_max = n_max;
    table.l_min = l_min;
    table.l_max = l_max;
    table.spins.assign(spins.begin(), spins.end());

    for (int n = 0; n <= n_max; ++n)
        for (int l = l_min; l <= l_max; ++l)
            for (int s : spins)
                table.levels.push_back(energy_level(bg, params, {n, l, s}));

    std::sort(table.levels.begin(), table.levels.end(),
              [](const EnergyLevel& a, const EnergyLevel& b) {
                  return std::tie(a.energy, a.qn.n, a.qn.l, a.qn.s) <
                         std::tie(b.energy, b.qn.n, b.qn.l, b.qn.s);
              });
    return table;
}

std::vector<std::pair<double, int>> degeneracy_map(const LevelTable& table,
                                                   double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    std::vector<std::pair<double, int>> clusters;
    double cluster_e2 = 0.0;
    for (const EnergyLevel& lvl : table.levels) {
        const double e2 = lvl.energy * lvl.energy;
        if (!clusters.empty() && std::fabs(e2 - cluster_e2) <= tol) {
            ++clusters.back().second;
        } else {
            clusters.emplace_back(lvl.energy, 1);
            cluster_e2 = e2;
        }
    }
    return clusters;
}

bool periodicity_check(const Background& bg, const PhysicalParams& params,
                       const QuantumNumbers& qn, int direction) {
    if (direction != 1 && direction != -1)
        throw std::invalid_argument("direction must be +1 or -1");
    PhysicalParams shifted = params;
    shifted.mu_lambda += qn.s * direction;
    QuantumNumbers moved = qn;
    moved.l += direction;
    const double e_phase = energy_level(bg, shifted, qn).energy;
    const double e_orbit = energy_level(bg, params, moved).energy;
    return std::fabs(e_phase - e_orbit) <=
           1e-12 * std::max(std::fabs(e_phase), std::fabs(e_orbit));
}

}  // namespace diracac
