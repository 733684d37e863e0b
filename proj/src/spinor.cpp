#include "diracac/spinor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "diracac/kernels.hpp"
#include "diracac/specfun.hpp"
#include "diracac/spectrum.hpp"

namespace diracac {

namespace {

using complexd = std::complex<double>;

// Composite Simpson over equally spaced samples f_0..f_K (K intervals). An
// odd K is closed with the 3/8 rule on the last three intervals.
double simpson(const std::vector<double>& f, double h) {
    const std::size_t k = f.size() - 1;
    const std::size_t even_end = (k % 2 == 0) ? k : k - 3;
    double s = 0.0;
    for (std::size_t i = 0; i + 2 <= even_end; i += 2)
        s += f[i] + 4.0 * f[i + 1] + f[i + 2];
    s *= h / 3.0;
    if (k % 2 != 0)
        s += 3.0 * h / 8.0 *
             (f[k - 3] + 3.0 * f[k - 2] + 3.0 * f[k - 1] + f[k]);
    return s;
}

struct RadialProfiles {
    std::vector<double> rho;
    std::vector<double> main;   // e^{-tau/2} tau^{alpha/2} M(-n,   b,   tau)
    std::vector<double> shift;  // e^{-tau/2} tau^{alpha/2} M(-n+1, b+1, tau)
};

RadialProfiles sample_profiles(double m_omega, double alpha, int n,
                               const RadialGrid& grid) {
    const double h = grid.rho_max / (grid.points + 1);
    const std::size_t np = static_cast<std::size_t>(grid.points);
    RadialProfiles p;
    p.rho.resize(np);
    std::vector<double> tau(np);
    for (std::size_t i = 0; i < np; ++i) {
        p.rho[i] = (i + 1) * h;
        tau[i] = m_omega * p.rho[i] * p.rho[i];
    }
    p.main.resize(np);
    kummer_polynomial_batch(n, alpha + 1.0, tau, p.main);
    if (n >= 1) {
        p.shift.resize(np);
        kummer_polynomial_batch(n - 1, alpha + 2.0, tau, p.shift);
    }
    for (std::size_t i = 0; i < np; ++i) {
        const double envelope =
            std::exp(-0.5 * tau[i]) * std::pow(tau[i], 0.5 * alpha);
        p.main[i] *= envelope;
        if (n >= 1) p.shift[i] *= envelope;
    }
    return p;
}

}  // namespace

double radial_wavefunction(const Background& bg, const PhysicalParams& params,
                           const QuantumNumbers& qn, double rho) {
    validate_params(params);
    if (rho < 0.0) throw std::domain_error("rho must be >= 0");
    const double zeta = effective_zeta(bg, qn, params).value;
    const double alpha = std::fabs(zeta) / bg.eta;
    const double tau = params.mass * params.omega * rho * rho;
    return std::exp(-0.5 * tau) * std::pow(tau, 0.5 * alpha) *
           kummer_polynomial(qn.n, alpha + 1.0, tau);
}

SpinorField build_spinor(const Background& bg, const PhysicalParams& params,
                         const QuantumNumbers& qn, const RadialGrid& grid,
                         GaugePhase at) {
    if (grid.points < 64)
        throw std::invalid_argument("grid too coarse (need >= 64 points)");
    if (!(grid.rho_max > 0.0))
        throw std::invalid_argument("rho_max must be positive");

    const EnergyLevel lvl = energy_level(bg, params, qn);
    const double ep_m = lvl.energy + params.mass;
    if (!(ep_m > 1e-12))
        throw std::domain_error("E + m vanishes; no positive-branch spinor");

    const double m_omega = params.mass * params.omega;
    const double a_ang = lvl.zeta / bg.eta;  // zeta/eta
    const double alpha = std::fabs(a_ang);
    const double b = alpha + 1.0;
    const int n = qn.n;

    const RadialProfiles p = sample_profiles(m_omega, alpha, n, grid);
    const std::size_t np = p.rho.size();

    SpinorField field;
    field.bg = bg;
    field.params = params;
    field.qn = qn;
    field.grid = grid;
    field.at = at;
    field.energy = lvl.energy;
    field.zeta = lvl.zeta;
    field.norm_constant = 1.0;
    for (auto& c : field.comps) c.assign(np, complexd{});

    // The equation couples the main profile's derivative to the lower pair;
    // the oscillator piece of the derivative cancels against the coupling
    // term, leaving the (zeta -+ |zeta|)/(eta rho) part plus the shifted
    // Kummer term with weight 2 n m omega rho / (|zeta|/eta + 1).
    for (std::size_t i = 0; i < np; ++i) {
        const double rho = p.rho[i];
        const double shift_term =
            n >= 1 ? 2.0 * m_omega * rho * n / b * p.shift[i] : 0.0;
        if (qn.s == +1) {
            field.comps[0][i] = p.main[i];
            field.comps[2][i] = params.k * p.main[i] / ep_m;
            field.comps[3][i] =
                complexd{0.0, 1.0} *
                ((a_ang - alpha) / rho * p.main[i] + shift_term) / ep_m;
        } else {
            field.comps[1][i] = p.main[i];
            field.comps[3][i] = -params.k * p.main[i] / ep_m;
            field.comps[2][i] =
                complexd{0.0, 1.0} *
                (-(a_ang + alpha) / rho * p.main[i] + shift_term) / ep_m;
        }
    }
    return field;
}

double dirac_residual(const SpinorField& field, const Background& bg,
                      const PhysicalParams& params) {
    const int np = field.grid.points;
    if (np < 256)
        throw std::invalid_argument(
            "grid too coarse for residual (need >= 256 nodes)");
    for (const auto& c : field.comps)
        if (static_cast<int>(c.size()) != np)
            throw std::invalid_argument("field/grid size mismatch");

    const double h = field.grid.rho_max / (np + 1);
    const double eta = bg.eta;
    const double mu = params.mu_lambda;
    const double m_omega = params.mass * params.omega;
    const double e = field.energy;
    const double m = params.mass;
    const double k = params.k;
    const double lp = field.qn.l;
    const double lm = field.qn.l + 1.0;

    const int skip = std::max(2, static_cast<int>(0.05 * np));
    double scale = 0.0;
    for (const auto& c : field.comps)
        for (int i = skip; i < np - skip; ++i)
            scale = std::max(scale, std::abs(c[i]));
    if (scale == 0.0) throw std::runtime_error("empty field");

    auto deriv = [&](const std::vector<complexd>& f, int i) {
        return (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) /
               (12.0 * h);
    };

    const complexd iu{0.0, 1.0};
    double worst = 0.0;
    for (int i = skip; i < np - skip; ++i) {
        const double rho = (i + 1) * h;
        const double inv_er = 1.0 / (eta * rho);
        const double d8 = -0.5 * (1.0 - eta) * inv_er + mu * inv_er -
                          m_omega * rho;
        const double d9 = -0.5 * (1.0 - eta) * inv_er - mu * inv_er +
                          m_omega * rho;
        const complexd c0 = field.comps[0][i], c1 = field.comps[1][i];
        const complexd c2 = field.comps[2][i], c3 = field.comps[3][i];
        const complexd r1 = (e - m) * c0 +
                            iu * (deriv(field.comps[3], i) +
                                  (d8 + lm * inv_er) * c3) -
                            k * c2;
        const complexd r2 = (e - m) * c1 +
                            iu * (deriv(field.comps[2], i) +
                                  (d8 - lp * inv_er) * c2) +
                            k * c3;
        const complexd r3 = (e + m) * c2 +
                            iu * (deriv(field.comps[1], i) +
                                  (d9 + lm * inv_er) * c1) -
                            k * c0;
        const complexd r4 = (e + m) * c3 +
                            iu * (deriv(field.comps[0], i) +
                                  (d9 - lp * inv_er) * c0) +
                            k * c1;
        worst = std::max({worst, std::abs(r1), std::abs(r2), std::abs(r3),
                          std::abs(r4)});
    }
    return worst / scale;
}

SpinorField normalize(SpinorField field) {
    const std::size_t np = field.comps[0].size();
    const double h = field.grid.rho_max / (field.grid.points + 1);

    // Density against the measure eta*rho*drho, sampled on [0, rho_max] with
    // zero values at both walls (the integrand carries a factor rho and the
    // Gaussian kills the outer wall).
    std::vector<double> density(np + 2, 0.0);
    for (std::size_t i = 0; i < np; ++i) {
        double mag2 = 0.0;
        for (const auto& c : field.comps) mag2 += std::norm(c[i]);
        density[i + 1] = field.bg.eta * ((i + 1) * h) * mag2;
    }
    const double integral = simpson(density, h);
    if (!(integral > 0.0)) throw std::runtime_error("zero-norm field");

    const double target = 1.0 / (2.0 * std::numbers::pi);
    const double scale = std::sqrt(target / integral);
    for (auto& c : field.comps)
        for (auto& v : c) v *= scale;
    field.norm_constant *= scale;
    return field;
}

int count_radial_nodes(const SpinorField& field) {
    const auto& lead = field.comps[field.qn.s == +1 ? 0 : 1];
    double peak = 0.0;
    for (const auto& v : lead) peak = std::max(peak, std::fabs(v.real()));
    if (peak == 0.0) throw std::runtime_error("empty field");

    const double floor = 1e-9 * peak;
    int changes = 0;
    double prev = 0.0;
    for (const auto& v : lead) {
        const double x = v.real();
        if (std::fabs(x) < floor) continue;
        if (prev != 0.0 && std::signbit(x) != std::signbit(prev)) ++changes;
        prev = x;
    }
    return changes;
}

std::complex<double> component_phase(const SpinorField& field, int comp) {
    if (comp < 0 || comp > 3) throw std::invalid_argument("component index");
    const double l_ang =
        (comp == 0 || comp == 2) ? field.qn.l : field.qn.l + 1.0;
    const double arg = -field.energy * field.at.t + field.params.k * field.at.z +
                       l_ang * field.at.phi;
    return std::polar(1.0, arg);
}

}  // namespace diracac
