// master_eq.hpp — weak-coupling phase-destroying master equation in the
// interaction picture, a fixed-step RK4 integrator for it, and the eigenbasis
// dephasing reference solution driven by an accumulated coefficient gamma(t)

#pragma once

#include "kerr/fock.hpp"
#include "kerr/reservoir.hpp"
#include "kerr/types.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>

namespace kerr::master_eq {

// which fluctuation coefficient multiplies the double commutator:
// second_moment uses <V_R^2> as printed; variance uses <V_R^2> - <V_R>^2,
// which reproduces the exact short-time decay rate 1/tau_D^2
enum class DiffusionForm { variance, second_moment };

struct MasterEqParams {
    double v1 = 0.0;  // <V_R>
    double v2 = 0.0;  // <V_R^2>
    DiffusionForm form = DiffusionForm::variance;
    double hbar = 1.0;  // natural units throughout
};

inline MasterEqParams make_params(double v1, double v2, DiffusionForm form = DiffusionForm::variance) {
    if (!(v2 >= v1 * v1 - 1e-12))
        throw std::invalid_argument("make_params: second moment must dominate squared mean");
    return MasterEqParams{v1, v2, form, 1.0};
}

// moments from the reservoir's exact thermal statistics; rejects x = 0, where
// the weak-coupling expansion has no finite moments
inline MasterEqParams from_reservoir(const reservoir::SpectralDistribution& s,
                                     const reservoir::ReservoirParams& p,
                                     DiffusionForm form = DiffusionForm::variance) {
    return make_params(reservoir::vr_moment1(s, p), reservoir::vr_moment2(s, p), form);
}

// coefficient D of the t * delta^2 decay term
inline double diffusion_coefficient(const MasterEqParams& p) {
    return p.form == DiffusionForm::second_moment ? p.v2 : p.v2 - p.v1 * p.v1;
}

// d rho_{m,m'} / dt = [-i v1 (m - m')/hbar - D t (m - m')^2/hbar^2] rho_{m,m'};
// diagonal entries are exact fixed points
inline ComplexMatrix eid_rhs(const fock::DensityMatrix& rho, const MasterEqParams& p, double t) {
    if (rho.dims.size() != 1) throw std::invalid_argument("eid_rhs: single-mode state required");
    if (!(t >= 0.0)) throw std::invalid_argument("eid_rhs: t must be >= 0");
    const double d_coef = diffusion_coefficient(p);
    const Eigen::Index n = rho.dim();
    ComplexMatrix out(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        for (Eigen::Index r = 0; r < n; ++r) {
            const double delta = double(r - c);
            const Complex rate(-d_coef * t * delta * delta / (p.hbar * p.hbar),
                               -p.v1 * delta / p.hbar);
            out(r, c) = rate * rho.entries(r, c);
        }
    }
    return out;
}

namespace detail {

inline void rk4_step(fock::DensityMatrix& rho, const MasterEqParams& p, double t, double h) {
    fock::DensityMatrix probe = rho;
    const ComplexMatrix k1 = eid_rhs(rho, p, t);
    probe.entries = rho.entries + (0.5 * h) * k1;
    const ComplexMatrix k2 = eid_rhs(probe, p, t + 0.5 * h);
    probe.entries = rho.entries + (0.5 * h) * k2;
    const ComplexMatrix k3 = eid_rhs(probe, p, t + 0.5 * h);
    probe.entries = rho.entries + h * k3;
    const ComplexMatrix k4 = eid_rhs(probe, p, t + h);
    rho.entries += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace detail

// classical fixed-step 4th-order integration from 0 to t_end; a short final
// step absorbs any remainder of t_end / dt
inline fock::DensityMatrix eid_integrate(const fock::DensityMatrix& rho0, const MasterEqParams& p,
                                         double t_end, double dt) {
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw std::invalid_argument("eid_integrate: dt must be finite and > 0");
    if (!(t_end >= 0.0) || !std::isfinite(t_end))
        throw std::invalid_argument("eid_integrate: t_end must be finite and >= 0");
    fock::DensityMatrix rho = rho0;
    const long long n_full = static_cast<long long>(std::floor(t_end / dt));
    for (long long i = 0; i < n_full; ++i) detail::rk4_step(rho, p, double(i) * dt, dt);
    const double rem = t_end - double(n_full) * dt;
    if (rem > dt * 1e-12) detail::rk4_step(rho, p, double(n_full) * dt, rem);
    return rho;
}

// elementwise closed form rho_{m,m'}(t) = rho0 exp(-i v1 delta t/hbar - D delta^2 t^2 / (2 hbar^2))
inline fock::DensityMatrix eid_analytic(const fock::DensityMatrix& rho0, const MasterEqParams& p, double t) {
    if (rho0.dims.size() != 1) throw std::invalid_argument("eid_analytic: single-mode state required");
    const double d_coef = diffusion_coefficient(p);
    fock::DensityMatrix out = rho0;
    const Eigen::Index n = rho0.dim();
    for (Eigen::Index c = 0; c < n; ++c) {
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r == c) continue;
            const double delta = double(r - c);
            const double damping = std::exp(-0.5 * d_coef * delta * delta * t * t / (p.hbar * p.hbar));
            out.entries(r, c) *= std::polar(damping, -p.v1 * delta * t / p.hbar);
        }
    }
    return out;
}

// dephasing in a fixed eigenbasis {E_n} with accumulated damping gamma(t),
// gamma(0) = 0 and nondecreasing
struct SidParams {
    Eigen::VectorXd energies;
    std::function<double(double)> gamma;
    double hbar = 1.0;
};

inline SidParams make_sid_params(Eigen::VectorXd energies, std::function<double(double)> gamma) {
    if (energies.size() == 0) throw std::invalid_argument("make_sid_params: energies required");
    if (!gamma) throw std::invalid_argument("make_sid_params: gamma required");
    if (std::abs(gamma(0.0)) > 1e-12) throw std::invalid_argument("make_sid_params: gamma(0) must be 0");
    return SidParams{std::move(energies), std::move(gamma), 1.0};
}

// rho(t)_{n,n'} = rho0_{n,n'} e^{-i (E_n - E_n') t/hbar} exp(-gamma(t) (E_n - E_n')^2/hbar^2)
inline fock::DensityMatrix sid_solution(const fock::DensityMatrix& rho0, const SidParams& p, double t) {
    if (rho0.dims.size() != 1) throw std::invalid_argument("sid_solution: single-mode state required");
    if (p.energies.size() < rho0.dim())
        throw std::invalid_argument("sid_solution: energies do not cover the state dimension");
    const double g = p.gamma(t);
    fock::DensityMatrix out = rho0;
    const Eigen::Index n = rho0.dim();
    for (Eigen::Index c = 0; c < n; ++c) {
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r == c) continue;
            const double de = (p.energies[r] - p.energies[c]) / p.hbar;
            out.entries(r, c) *= std::polar(std::exp(-g * de * de), -de * t);
        }
    }
    return out;
}

// closed-form purity P(t) = sum |rho_{n,n'}|^2 exp(-2 gamma(t) (E_n - E_n')^2/hbar^2)
inline double sid_purity(const fock::DensityMatrix& rho0, const SidParams& p, double t) {
    if (rho0.dims.size() != 1) throw std::invalid_argument("sid_purity: single-mode state required");
    if (p.energies.size() < rho0.dim())
        throw std::invalid_argument("sid_purity: energies do not cover the state dimension");
    const double g = p.gamma(t);
    const Eigen::Index n = rho0.dim();
    double acc = 0.0;
    for (Eigen::Index c = 0; c < n; ++c) {
        for (Eigen::Index r = 0; r < n; ++r) {
            const double de = (p.energies[r] - p.energies[c]) / p.hbar;
            acc += std::norm(rho0.entries(r, c)) * std::exp(-2.0 * g * de * de);
        }
    }
    return acc;
}

}  // namespace kerr::master_eq
