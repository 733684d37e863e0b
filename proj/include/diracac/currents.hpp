#pragma once

#include <vector>

#include "diracac/model.hpp"

namespace diracac {

struct LevelCurrent {
    QuantumNumbers qn;
    double zeta = 0.0;
    double energy = 0.0;
    double contribution = 0.0;  // energy per unit phase
};

struct CurrentReport {
    double mu_lambda = 0.0;
    std::vector<LevelCurrent> contributions;   // (n,l,s) lexicographic
    std::vector<QuantumNumbers> excluded;      // levels with zeta = 0
    double total = 0.0;
};

/// Per-level persistent spin current -dE/dphi_AC
///   = -(m omega / (2 pi eta)) (s*sign(zeta) - 1) / E,
/// zero whenever s and zeta are aligned. Throws std::domain_error at zeta = 0
/// (the phase derivative has a kink there).
double level_current(const Background& bg, const PhysicalParams& params,
                     const QuantumNumbers& qn);

/// Sums level_current over an explicit, finite level set in (n,l,s)
/// lexicographic order. Levels sitting on the zeta = 0 kink are reported as
/// excluded, not silently dropped.
CurrentReport total_current(const Background& bg, const PhysicalParams& params,
                            std::vector<QuantumNumbers> levels);

struct FdCheck {
    double analytic = 0.0;
    double numeric = 0.0;
    double rel_err = 0.0;
};

/// Central finite difference of the level energy over mu_lambda (phase step
/// 2 pi * step) against the analytic derivative. Throws when the bracket
/// straddles the zeta = 0 kink.
FdCheck fd_current_check(const Background& bg, const PhysicalParams& params,
                         const QuantumNumbers& qn, double step = 1e-6);

}  // namespace diracac
