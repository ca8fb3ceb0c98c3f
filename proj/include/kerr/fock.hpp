// fock.hpp — truncated Fock-space states, density matrices, and purity

#pragma once

#include "kerr/types.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace kerr::fock {

// raised when a requested amplitude tail cannot fit under the hard cap
class TruncationOverflow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// bounds memory for adversarial alpha
inline constexpr int kAmpHardCap = 512;

// amplitudes p(0..n_max) of a pure single-mode state, renormalized at construction
struct PhotonDistribution {
    ComplexVector amps;

    int n_max() const { return static_cast<int>(amps.size()) - 1; }
};

// truncated Fock-basis density matrix over the product basis of 1 or 2 modes;
// for two modes, entry index is ma * dims[1] + mb
struct DensityMatrix {
    std::vector<Eigen::Index> dims;
    ComplexMatrix entries;

    Eigen::Index dim() const { return entries.rows(); }
};

inline Eigen::Index product_index(const DensityMatrix& rho, Eigen::Index ma, Eigen::Index mb) {
    return ma * rho.dims[1] + mb;
}

namespace detail {

inline PhotonDistribution renormalized(ComplexVector amps) {
    double norm2 = 0.0;
    for (Eigen::Index n = 0; n < amps.size(); ++n) norm2 += std::norm(amps[n]);
    if (!(norm2 > 0.0)) throw std::invalid_argument("PhotonDistribution: zero norm");
    amps /= std::sqrt(norm2);
    return PhotonDistribution{std::move(amps)};
}

// log-polar amplitude of the even coherent superposition, safe for any alpha:
// p(n) = 2 e^{-|a|^2/2} alpha^n / sqrt(n!) / sqrt(2 (1 + e^{-2|a|^2})), even n
inline Complex cat_amp(Complex alpha, int n, double log_norm) {
    const double a2 = std::norm(alpha);
    const double la = 0.5 * std::log(a2);  // ln|alpha|
    const double ph = std::arg(alpha);
    double log_fact = 0.0;
    for (int j = 2; j <= n; ++j) log_fact += std::log(double(j));
    const double lm = std::log(2.0) - 0.5 * a2 + double(n) * la - 0.5 * log_fact - 0.5 * log_norm;
    return std::polar(std::exp(lm), double(n) * ph);
}

}  // namespace detail

// even coherent superposition of +/- alpha; n_max is the first even level at
// which the discarded tail mass falls below tail_tol, and the kept amplitudes
// are renormalized. Uses the closed-form normalization 2 (1 + e^{-2|alpha|^2}).
inline PhotonDistribution cat_state(Complex alpha, double tail_tol = 1e-12, int amp_cap = kAmpHardCap) {
    if (!(tail_tol > 0.0) || tail_tol > 1e-6)
        throw std::invalid_argument("cat_state: tail_tol must lie in (0, 1e-6]");
    if (std::norm(alpha) == 0.0) {  // covers underflowing |alpha|^2 as well
        ComplexVector amps(1);
        amps[0] = 1.0;
        return PhotonDistribution{std::move(amps)};
    }
    const double a2 = std::norm(alpha);
    const double log_norm = std::log(2.0 * (1.0 + std::exp(-2.0 * a2)));
    std::vector<Complex> amps;
    double cum = 0.0;
    double log_fact = 0.0;  // ln n!
    int n_max = -1;
    for (int n = 0; n <= amp_cap; ++n) {
        if (n >= 2) log_fact += std::log(double(n));
        if (n % 2 == 1) {
            amps.emplace_back(0.0, 0.0);
            continue;
        }
        const double lw = 2.0 * std::log(2.0) - a2 + double(n) * std::log(a2) - log_fact - log_norm;
        cum += std::exp(lw);
        amps.push_back(detail::cat_amp(alpha, n, log_norm));
        if (1.0 - cum < tail_tol) {
            n_max = n;
            break;
        }
    }
    if (n_max < 0)
        throw TruncationOverflow("cat_state: |alpha| = " + std::to_string(std::abs(alpha)) +
                                 " needs more than " + std::to_string(amp_cap) + " levels");
    ComplexVector v(n_max + 1);
    for (int n = 0; n <= n_max; ++n) v[n] = amps[static_cast<std::size_t>(n)];
    return detail::renormalized(std::move(v));
}

// cat amplitudes truncated at an explicit n_max, for truncation-convergence studies
inline PhotonDistribution cat_state_with_cutoff(Complex alpha, int n_max) {
    if (n_max < 0 || n_max > kAmpHardCap) throw std::invalid_argument("cat_state_with_cutoff: bad n_max");
    if (std::norm(alpha) == 0.0) return cat_state(alpha);
    const double a2 = std::norm(alpha);
    const double log_norm = std::log(2.0 * (1.0 + std::exp(-2.0 * a2)));
    ComplexVector v = ComplexVector::Zero(n_max + 1);
    for (int n = 0; n <= n_max; n += 2) v[n] = detail::cat_amp(alpha, n, log_norm);
    return detail::renormalized(std::move(v));
}

// p(m1) = p(m2) = 1/sqrt(2)
inline PhotonDistribution fock_superposition(int m1, int m2) {
    if (m1 == m2) throw std::invalid_argument("fock_superposition: indices must differ");
    if (m1 < 0 || m2 < 0) throw std::invalid_argument("fock_superposition: indices must be >= 0");
    const int top = std::max(m1, m2);
    if (top > kAmpHardCap) throw TruncationOverflow("fock_superposition: index above hard cap");
    ComplexVector v = ComplexVector::Zero(top + 1);
    v[m1] = 1.0 / std::numbers::sqrt2;
    v[m2] = 1.0 / std::numbers::sqrt2;
    return PhotonDistribution{std::move(v)};
}

// rho_{m,m'} = p(m) conj(p(m'))
inline DensityMatrix density_from_pure(const PhotonDistribution& d) {
    DensityMatrix rho;
    rho.dims = {d.amps.size()};
    rho.entries = d.amps * d.amps.adjoint();
    return rho;
}

// Tr[rho^2] = sum |rho_{m,m'}|^2 for Hermitian rho; fixed ascending order
inline double purity(const DensityMatrix& rho) {
    double acc = 0.0;
    for (Eigen::Index c = 0; c < rho.entries.cols(); ++c)
        for (Eigen::Index r = 0; r < rho.entries.rows(); ++r) acc += std::norm(rho.entries(r, c));
    return acc;
}

// |p(n)|^2 in ascending n
inline std::vector<double> weights(const PhotonDistribution& d) {
    std::vector<double> w(static_cast<std::size_t>(d.amps.size()));
    for (Eigen::Index n = 0; n < d.amps.size(); ++n) w[static_cast<std::size_t>(n)] = std::norm(d.amps[n]);
    return w;
}

// checks the density-matrix contract: square shape matching dims, Hermiticity,
// unit trace, and nonnegative real diagonal
inline void validate(const DensityMatrix& rho, double herm_tol = 1e-12, double trace_tol = 1e-10) {
    if (rho.dims.empty() || rho.dims.size() > 2)
        throw std::invalid_argument("DensityMatrix: dims must list 1 or 2 modes");
    Eigen::Index expect = 1;
    for (Eigen::Index d : rho.dims) expect *= d;
    if (rho.entries.rows() != expect || rho.entries.cols() != expect)
        throw std::invalid_argument("DensityMatrix: entries shape does not match dims");
    double trace = 0.0;
    for (Eigen::Index m = 0; m < expect; ++m) {
        const Complex diag = rho.entries(m, m);
        if (std::abs(diag.imag()) > herm_tol || diag.real() < -1e-12)
            throw std::invalid_argument("DensityMatrix: diagonal must be real and >= -1e-12");
        trace += diag.real();
        for (Eigen::Index mp = 0; mp < expect; ++mp) {
            if (std::abs(rho.entries(m, mp) - std::conj(rho.entries(mp, m))) > herm_tol)
                throw std::invalid_argument("DensityMatrix: not Hermitian within tolerance");
        }
    }
    if (std::abs(trace - 1.0) > trace_tol)
        throw std::invalid_argument("DensityMatrix: trace deviates from 1 beyond tolerance");
}

}  // namespace kerr::fock
