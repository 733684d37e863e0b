#include "diracac/currents.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "diracac/spectrum.hpp"

namespace diracac {

namespace {
constexpr double kZetaFloor = 1e-12;
}

double level_current(const Background& bg, const PhysicalParams& params,
                     const QuantumNumbers& qn) {
    const EnergyLevel lvl = energy_level(bg, params, qn);
    if (std::fabs(lvl.zeta) <= kZetaFloor)
        throw std::domain_error("phase-derivative singular at zeta=0");
    const double sign = lvl.zeta > 0.0 ? 1.0 : -1.0;
    // + 0.0 turns the aligned case's -0 into a plain 0
    return -(params.mass * params.omega / (2.0 * std::numbers::pi * bg.eta)) *
               (qn.s * sign - 1.0) / lvl.energy +
           0.0;
}

CurrentReport total_current(const Background& bg, const PhysicalParams& params,
                            std::vector<QuantumNumbers> levels) {
    std::sort(levels.begin(), levels.end(),
              [](const QuantumNumbers& a, const QuantumNumbers& b) {
                  return std::tie(a.n, a.l, a.s) < std::tie(b.n, b.l, b.s);
              });
    CurrentReport report;
    report.mu_lambda = params.mu_lambda;
    for (const QuantumNumbers& qn : levels) {
        const EnergyLevel lvl = energy_level(bg, params, qn);
        if (std::fabs(lvl.zeta) <= kZetaFloor) {
            report.excluded.push_back(qn);
            continue;
        }
        LevelCurrent row;
        row.qn = qn;
        row.zeta = lvl.zeta;
        row.energy = lvl.energy;
        row.contribution = level_current(bg, params, qn);
        report.total += row.contribution;
        report.contributions.push_back(row);
    }
    return report;
}

FdCheck fd_current_check(const Background& bg, const PhysicalParams& params,
                         const QuantumNumbers& qn, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("step must be positive");

    FdCheck out;
    out.analytic = level_current(bg, params, qn);

    const double zeta = effective_zeta(bg, qn, params).value;
    const double z_minus = zeta - qn.s * step;
    const double z_plus = zeta + qn.s * step;
    if (z_minus == 0.0 || z_plus == 0.0 || std::signbit(z_minus) != std::signbit(z_plus))
        throw std::runtime_error("derivative bracket straddles kink");

    PhysicalParams up = params, down = params;
    up.mu_lambda += step;
    down.mu_lambda -= step;
    const double e_up = energy_level(bg, up, qn).energy;
    const double e_down = energy_level(bg, down, qn).energy;
    out.numeric = -(e_up - e_down) / (2.0 * 2.0 * std::numbers::pi * step);
    out.rel_err = std::fabs(out.analytic - out.numeric) /
                  std::max(std::fabs(out.analytic), 1e-300);
    return out;
}

}  // namespace diracac
