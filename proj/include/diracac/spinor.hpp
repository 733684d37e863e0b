#pragma once

#include <array>
#include <complex>
#include <vector>

#include "diracac/model.hpp"
#include "diracac/oracle.hpp"

namespace diracac {

// Fixed evaluation point for the (t, phi, z) phase factors. They are applied
// when exporting full components; the stored radial amplitudes and the
// residual evaluation are phase-free per-mode quantities.
struct GaugePhase {
    double t = 0.0;
    double phi = 0.0;
    double z = 0.0;
};

// Radial amplitudes of the four spinor components (phi+, phi-, xi+, xi-) on
// the interior grid nodes. Components 0 and 2 carry the angular factor
// e^{i l phi}, components 1 and 3 carry e^{i (l+1) phi}; all share
// e^{-i E t} e^{i k z}.
struct SpinorField {
    Background bg;
    PhysicalParams params;
    QuantumNumbers qn;
    RadialGrid grid;
    GaugePhase at;
    double energy = 0.0;
    double zeta = 0.0;
    double norm_constant = 1.0;
    std::array<std::vector<std::complex<double>>, 4> comps;
};

/// Radial profile R(rho) = e^{-tau/2} tau^{|zeta|/(2 eta)} M(-n, |zeta|/eta + 1, tau)
/// with tau = m omega rho^2. R(0) = 1 for zeta = 0 and 0 otherwise.
double radial_wavefunction(const Background& bg, const PhysicalParams& params,
                           const QuantumNumbers& qn, double rho);

/// Builds the positive-energy spinor for (n, l, s) on the grid. s = +1 selects
/// the parallel solution (phi- = 0), s = -1 the anti-parallel one (phi+ = 0).
/// Lower components carry 1/(E+m); the n >= 1 part brings in the shifted
/// Kummer term M(-n+1, |zeta|/eta + 2, tau).
SpinorField build_spinor(const Background& bg, const PhysicalParams& params,
                         const QuantumNumbers& qn, const RadialGrid& grid,
                         GaugePhase at = {});

/// Max pointwise residual of the two coupled first-order equations (radial
/// derivative by 4th-order central differences, 5% of nodes dropped at each
/// end), relative to the max component magnitude over the same nodes.
double dirac_residual(const SpinorField& field, const Background& bg,
                      const PhysicalParams& params);

/// Fixes the constant C so that the density integrates to 1/(2 pi) per unit
/// z-length against the measure eta rho drho (composite Simpson on the grid).
/// Idempotent and invariant under input rescaling.
SpinorField normalize(SpinorField field);

/// Sign changes of the leading upper component across the grid; equals the
/// radial quantum number n.
int count_radial_nodes(const SpinorField& field);

/// Phase factor of component c (0..3) at the field's gauge point.
std::complex<double> component_phase(const SpinorField& field, int comp);

}  // namespace diracac
