#pragma once

namespace diracac {

enum class BackgroundKind { Minkowski, CosmicString, CosmicDislocation };

// Conical background: eta is the deficit-angle parameter, chi the torsion
// (Burgers-vector) parameter. Minkowski fixes eta = 1, chi = 0; the string
// keeps chi = 0; eta > 1 is rejected everywhere.
struct Background {
    BackgroundKind kind = BackgroundKind::Minkowski;
    double eta = 1.0;
    double chi = 0.0;

    static Background minkowski() { return {BackgroundKind::Minkowski, 1.0, 0.0}; }
    static Background cosmic_string(double eta) {
        return {BackgroundKind::CosmicString, eta, 0.0};
    }
    static Background cosmic_dislocation(double eta, double chi) {
        return {BackgroundKind::CosmicDislocation, eta, chi};
    }
};

// Natural units (hbar = c = 1) throughout. mu_lambda is the signed product of
// the dipole moment and the line charge density; k is the axial wavenumber,
// a continuous label fixed per run.
struct PhysicalParams {
    double mass = 1.0;
    double omega = 1.0;
    double mu_lambda = 0.0;
    double k = 0.0;
};

struct QuantumNumbers {
    int n = 0;   // radial, >= 0
    int l = 0;   // orbital, j = l + 1/2
    int s = +1;  // spin projection, +1 or -1
};

struct ZetaValue {
    double value = 0.0;
};

/// Geometric phase acquired per loop: phi_AC = 2*pi*mu_lambda, the sign of
/// mu_lambda carrying the orientation.
double ac_phase(double mu_lambda);

/// Throws std::invalid_argument when the background violates its invariants
/// ("eta out of range", chi on a non-dislocation kind, ...).
const Background& validate_background(const Background& bg);

void validate_params(const PhysicalParams& params);
void validate_quantum_numbers(const QuantumNumbers& qn);

/// Effective angular parameter controlling the centrifugal term:
///   zeta = l + (1-s)/2 + s(1-eta)/2 - chi*k + s*mu_lambda.
/// One arithmetic path for all backgrounds, so the dislocation(chi=0) ->
/// string -> Minkowski(eta=1) limit chain holds bit-for-bit.
ZetaValue effective_zeta(const Background& bg, const QuantumNumbers& qn,
                         const PhysicalParams& params);

}  // namespace diracac
