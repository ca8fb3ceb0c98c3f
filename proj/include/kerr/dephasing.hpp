// dephasing.hpp — characteristic function C_{m,m'}(t) of the cross-Kerr thermal
// reservoir: log-domain magnitude, phase, short-time Gaussian law, decoherence
// time, long-time lower bound, and critical temperature

#pragma once

#include "kerr/reservoir.hpp"
#include "kerr/types.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace kerr::dephasing {

struct CharacteristicKernel {
    reservoir::SpectralDistribution spectrum;
    reservoir::ReservoirParams params;
};

inline CharacteristicKernel make_kernel(reservoir::SpectralDistribution s, reservoir::ReservoirParams p) {
    if (s.n_modes() != p.n_modes)
        throw std::invalid_argument("make_kernel: spectrum and params disagree on mode count");
    return CharacteristicKernel{std::move(s), std::move(p)};
}

namespace detail {

inline void require_valid_args(double x, double t, const char* fn) {
    if (!(x > 0.0))
        throw std::invalid_argument(std::string(fn) + ": thermal state undefined for x <= 0");
    if (!(t >= 0.0)) throw std::invalid_argument(std::string(fn) + ": t must be >= 0");
}

// ln prod_k [1 + sin^2(rates_k u / 2) / sinh^2(x/2)]^{-1}.
// rates holds the per-mode phase velocities; u is the accumulated argument
// (delta * t for one mode, t with premixed rates for two). Summation order is
// fixed ascending k so results do not depend on threading or vector width.
inline double log_abs_sq_rates(const RealArray& rates, double x, double u) {
    const double sh = std::sinh(0.5 * x);
    const double inv_sh2 = 1.0 / (sh * sh);
    double acc = 0.0;
    for (Eigen::Index k = 0; k < rates.size(); ++k) {
        const double s = std::sin(0.5 * rates[k] * u);
        acc += std::log1p(s * s * inv_sh2);
    }
    return 0.0 - acc;  // keeps +0.0 for the undamped case
}

// arg prod_k (1 - q)/(1 - q e^{-i rates_k u}) with q = e^{-x};
// each per-mode argument already lies in (-pi/2, pi/2) for q < 1
inline double phase_rates(const RealArray& rates, double x, double u) {
    const double q = std::exp(-x);
    double acc = 0.0;
    for (Eigen::Index k = 0; k < rates.size(); ++k) {
        const double th = rates[k] * u;
        acc -= std::atan2(q * std::sin(th), 1.0 - q * std::cos(th));
    }
    return acc;
}

}  // namespace detail

// ln |C_{m,m'}(t)|^2 for delta = m - m'; always <= 0, exactly 0 for delta = 0.
// Stays representable where the product itself would underflow (ln|C|^2 ~ -1e4).
inline double log_abs_sq(const CharacteristicKernel& k, long delta, double t) {
    detail::require_valid_args(k.params.x, t, "log_abs_sq");
    if (delta == 0) return 0.0;
    return detail::log_abs_sq_rates(k.spectrum.couplings, k.params.x, double(delta) * t);
}

// accumulated argument of C_{m,m'}(t)
inline double phase(const CharacteristicKernel& k, long delta, double t) {
    detail::require_valid_args(k.params.x, t, "phase");
    if (delta == 0) return 0.0;
    return detail::phase_rates(k.spectrum.couplings, k.params.x, double(delta) * t);
}

// C_{m,m'}(t) = prod_k (1 - e^{-x}) / (1 - e^{-x} e^{-i delta g_k t}); |C| <= 1.
// Magnitude is assembled in the log domain and exponentiated at the end.
inline Complex char_fn(const CharacteristicKernel& k, long delta, double t) {
    detail::require_valid_args(k.params.x, t, "char_fn");
    if (delta == 0) return Complex(1.0, 0.0);
    const double u = double(delta) * t;
    const double lm = 0.5 * detail::log_abs_sq_rates(k.spectrum.couplings, k.params.x, u);
    const double ph = detail::phase_rates(k.spectrum.couplings, k.params.x, u);
    return std::polar(std::exp(lm), ph);
}

// tau_D = 2 sinh(x/2) / G: state-independent scale of the Gaussian coherence decay
inline double decoherence_time(const CharacteristicKernel& k) {
    if (!(k.params.x > 0.0))
        throw std::invalid_argument("decoherence_time: x must be > 0");
    return 2.0 * std::sinh(0.5 * k.params.x) / reservoir::coupling_norm(k.spectrum);
}

// short-time law |C_{m,m'}|^2 ~ exp(-delta^2 t^2 / tau_D^2)
inline double gaussian_approx(const CharacteristicKernel& k, long delta, double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("gaussian_approx: t must be >= 0");
    const double z = double(delta) * t / decoherence_time(k);
    return std::exp(-z * z);
}

// ln of the all-time floor [sinh^2(x/2) / (1 + sinh^2(x/2))]^N
inline double log_lower_bound_abs_sq(const reservoir::ReservoirParams& p) {
    if (!(p.x > 0.0))
        throw std::invalid_argument("log_lower_bound_abs_sq: x must be > 0");
    const double sh = std::sinh(0.5 * p.x);
    return -double(p.n_modes) * std::log1p(1.0 / (sh * sh));
}

// floor itself; may underflow to 0 for hot or large reservoirs (log form above)
inline double lower_bound_abs_sq(const reservoir::ReservoirParams& p) {
    return std::exp(log_lower_bound_abs_sq(p));
}

// x_crit(N) = 2 asinh(1 / sqrt(2^{1/N} - 1)): where the floor crosses 1/2,
// separating partial from accentuated decoherence
inline double critical_beta(int n_modes) {
    if (n_modes < 1) throw std::invalid_argument("critical_beta: n_modes must be >= 1");
    return 2.0 * std::asinh(1.0 / std::sqrt(std::expm1(std::log(2.0) / double(n_modes))));
}

}  // namespace kerr::dephasing
