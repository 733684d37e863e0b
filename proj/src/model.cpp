#include "diracac/model.hpp"

#include <numbers>
#include <stdexcept>

namespace diracac {

double ac_phase(double mu_lambda) {
    return 2.0 * std::numbers::pi * mu_lambda;
}

const Background& validate_background(const Background& bg) {
    if (!(bg.eta > 0.0) || bg.eta > 1.0)
        throw std::invalid_argument("eta out of range (need 0 < eta <= 1)");
    switch (bg.kind) {
        case BackgroundKind::Minkowski:
            if (bg.eta != 1.0)
                throw std::invalid_argument(
                    "eta must be 1 for the minkowski background");
            if (bg.chi != 0.0)
                throw std::invalid_argument(
                    "chi only valid for the dislocation background");
            break;
        case BackgroundKind::CosmicString:
            if (bg.chi != 0.0)
                throw std::invalid_argument(
                    "chi only valid for the dislocation background");
            break;
        case BackgroundKind::CosmicDislocation:
            break;
    }
    return bg;
}

void validate_params(const PhysicalParams& params) {
    if (!(params.mass > 0.0))
        throw std::invalid_argument("mass must be positive");
    if (!(params.omega > 0.0))
        throw std::invalid_argument("omega must be positive");
}

void validate_quantum_numbers(const QuantumNumbers& qn) {
    if (qn.n < 0) throw std::invalid_argument("radial n must be >= 0");
    if (qn.s != 1 && qn.s != -1)
        throw std::invalid_argument("spin s must be +1 or -1");
}

ZetaValue effective_zeta(const Background& bg, const QuantumNumbers& qn,
                         const PhysicalParams& params) {
    validate_background(bg);
    validate_quantum_numbers(qn);
    return {qn.l + 0.5 * (1 - qn.s) + 0.5 * qn.s * (1.0 - bg.eta) -
            bg.chi * params.k + qn.s * params.mu_lambda};
}

}  // namespace diracac
