// bipartite.hpp — two system modes sharing the reservoir: joint characteristic
// function, exact evolution, pair decoherence times, partial transpose, negativity

#pragma once

#include "kerr/dephasing.hpp"
#include "kerr/fock.hpp"
#include "kerr/types.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kerr::bipartite {

struct BipartiteKernel {
    reservoir::SpectralDistribution spectrum_a;
    reservoir::SpectralDistribution spectrum_b;
    reservoir::ReservoirParams params;
    double omega_a = 0.0;
    double omega_b = 0.0;
    double g_ab = 0.0;  // diagonal intra-system coupling; exactly unitary
};

inline BipartiteKernel make_kernel(reservoir::SpectralDistribution a, reservoir::SpectralDistribution b,
                                   reservoir::ReservoirParams p, double omega_a = 0.0,
                                   double omega_b = 0.0, double g_ab = 0.0) {
    if (a.n_modes() != b.n_modes() || a.n_modes() != p.n_modes)
        throw std::invalid_argument("make_kernel: spectra and params disagree on mode count");
    return BipartiteKernel{std::move(a), std::move(b), std::move(p), omega_a, omega_b, g_ab};
}

namespace detail {

// per-mode phase velocities da*g_ak + db*g_bk of the joint coherence (da, db)
inline RealArray combined_rates(const BipartiteKernel& k, long da, long db) {
    return double(da) * k.spectrum_a.couplings + double(db) * k.spectrum_b.couplings;
}

}  // namespace detail

// ln |C(da, db; t)|^2, sharing the single-mode log-domain core
inline double log_abs_sq2(const BipartiteKernel& k, long da, long db, double t) {
    dephasing::detail::require_valid_args(k.params.x, t, "log_abs_sq2");
    if (da == 0 && db == 0) return 0.0;
    return dephasing::detail::log_abs_sq_rates(detail::combined_rates(k, da, db), k.params.x, t);
}

// C(da, db; t) = prod_k (1 - e^{-x}) / (1 - e^{-x} e^{-i (da g_ak + db g_bk) t});
// reduces to the single-mode characteristic function when db = 0
inline Complex char_fn2(const BipartiteKernel& k, long da, long db, double t) {
    dephasing::detail::require_valid_args(k.params.x, t, "char_fn2");
    if (da == 0 && db == 0) return Complex(1.0, 0.0);
    const RealArray rates = detail::combined_rates(k, da, db);
    const double lm = 0.5 * dephasing::detail::log_abs_sq_rates(rates, k.params.x, t);
    const double ph = dephasing::detail::phase_rates(rates, k.params.x, t);
    return std::polar(std::exp(lm), ph);
}

// entry ((ma,mb),(ma',mb')) *= C(da, db; t) e^{-i da omega_a t} e^{-i db omega_b t}
//                              e^{-i (ma mb - ma' mb') g_ab t}
// with da = ma - ma', db = mb - mb'; diagonal entries stay untouched bit for bit
inline fock::DensityMatrix evolve2(const fock::DensityMatrix& rho0, const BipartiteKernel& k, double t) {
    if (rho0.dims.size() != 2) throw std::invalid_argument("evolve2: two-mode state required");
    if (!(t >= 0.0)) throw std::invalid_argument("evolve2: t must be >= 0");
    const Eigen::Index na = rho0.dims[0];
    const Eigen::Index nb = rho0.dims[1];
    if (rho0.entries.rows() != na * nb || rho0.entries.cols() != na * nb)
        throw std::invalid_argument("evolve2: entries shape does not match dims");

    // characteristic factors per (da, db), conjugate-mirrored onto (-da, -db)
    ComplexMatrix table(2 * na - 1, 2 * nb - 1);
    for (Eigen::Index da = 0; da < na; ++da) {
        for (Eigen::Index db = -(nb - 1); db < nb; ++db) {
            if (da == 0 && db < 0) continue;
            Complex f = char_fn2(k, long(da), long(db), t);
            f *= std::polar(1.0, -double(da) * k.omega_a * t - double(db) * k.omega_b * t);
            table(na - 1 + da, nb - 1 + db) = f;
            table(na - 1 - da, nb - 1 - db) = std::conj(f);
        }
    }

    fock::DensityMatrix out = rho0;
    for (Eigen::Index ma = 0; ma < na; ++ma)
        for (Eigen::Index mb = 0; mb < nb; ++mb)
            for (Eigen::Index map = 0; map < na; ++map)
                for (Eigen::Index mbp = 0; mbp < nb; ++mbp) {
                    const Eigen::Index da = ma - map;
                    const Eigen::Index db = mb - mbp;
                    if (da == 0 && db == 0) continue;
                    Complex f = table(na - 1 + da, nb - 1 + db);
                    if (k.g_ab != 0.0)
                        f *= std::polar(1.0, -double(ma * mb - map * mbp) * k.g_ab * t);
                    out.entries(fock::product_index(rho0, ma, mb),
                                fock::product_index(rho0, map, mbp)) *= f;
                }
    return out;
}

// tau_ab(da, db) = [sum_k ((g_ak da + g_bk db) / (2 sinh(x/2)))^2]^{-1/2};
// +infinity flags a decoherence-free combination (exponent cancels in every mode)
inline double tau_ab(const BipartiteKernel& k, long da, long db) {
    if (!(k.params.x > 0.0)) throw std::invalid_argument("tau_ab: x must be > 0");
    const RealArray rates = detail::combined_rates(k, da, db);
    double acc = 0.0;
    for (Eigen::Index i = 0; i < rates.size(); ++i) acc += rates[i] * rates[i];
    if (acc == 0.0) return std::numeric_limits<double>::infinity();
    return 2.0 * std::sinh(0.5 * k.params.x) / std::sqrt(acc);
}

// pair-coupling norm G_ab = sqrt(sum_k (g_ak + g_bk)^2 / 2)
inline double gab_norm(const BipartiteKernel& k) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < k.spectrum_a.couplings.size(); ++i) {
        const double s = k.spectrum_a.couplings[i] + k.spectrum_b.couplings[i];
        acc += s * s;
    }
    return std::sqrt(0.5 * acc);
}

// 2 sinh(x/2) / G_ab: the Bell-pair negativity decays as exp(-(n-m)^2 t^2 / tau^2)
// on this scale in the short-time regime
inline double negativity_gaussian_tau(const BipartiteKernel& k) {
    if (!(k.params.x > 0.0)) throw std::invalid_argument("negativity_gaussian_tau: x must be > 0");
    return 2.0 * std::sinh(0.5 * k.params.x) / gab_norm(k);
}

// transpose mode b only: out((ma,mb),(ma',mb')) = in((ma,mb'),(ma',mb))
inline ComplexMatrix partial_transpose_b(const ComplexMatrix& m, Eigen::Index na, Eigen::Index nb) {
    if (m.rows() != na * nb || m.cols() != na * nb)
        throw std::invalid_argument("partial_transpose_b: shape does not match mode dims");
    ComplexMatrix out(m.rows(), m.cols());
    for (Eigen::Index ma = 0; ma < na; ++ma)
        for (Eigen::Index mb = 0; mb < nb; ++mb)
            for (Eigen::Index map = 0; map < na; ++map)
                for (Eigen::Index mbp = 0; mbp < nb; ++mbp)
                    out(ma * nb + mb, map * nb + mbp) = m(ma * nb + mbp, map * nb + mb);
    return out;
}

// joint product-basis matrices grow as (max(n,m)+1)^4
inline constexpr int kBellIndexCap = 32;

// (|n,n> + |m,m>)/sqrt(2) as a two-mode density matrix on dims (D, D), D = max(n,m)+1
inline fock::DensityMatrix bell_pair_state(int n, int m) {
    if (n == m) throw std::invalid_argument("bell_pair_state: indices must differ");
    if (n < 0 || m < 0) throw std::invalid_argument("bell_pair_state: indices must be >= 0");
    if (std::max(n, m) > kBellIndexCap)
        throw fock::TruncationOverflow("bell_pair_state: index above supported range");
    const Eigen::Index d = std::max(n, m) + 1;
    ComplexVector psi = ComplexVector::Zero(d * d);
    psi[n * d + n] = 1.0 / std::numbers::sqrt2;
    psi[m * d + m] = 1.0 / std::numbers::sqrt2;
    fock::DensityMatrix rho;
    rho.dims = {d, d};
    rho.entries = psi * psi.adjoint();
    return rho;
}

namespace detail {

// per-mode levels carrying any amplitude; dropping empty levels only removes
// zero eigenvalues and commutes with the partial transpose
inline std::pair<std::vector<Eigen::Index>, std::vector<Eigen::Index>> support(
    const fock::DensityMatrix& rho) {
    const Eigen::Index na = rho.dims[0];
    const Eigen::Index nb = rho.dims[1];
    std::vector<double> mass_a(static_cast<std::size_t>(na), 0.0);
    std::vector<double> mass_b(static_cast<std::size_t>(nb), 0.0);
    for (Eigen::Index ma = 0; ma < na; ++ma)
        for (Eigen::Index mb = 0; mb < nb; ++mb)
            for (Eigen::Index map = 0; map < na; ++map)
                for (Eigen::Index mbp = 0; mbp < nb; ++mbp) {
                    const double v = std::abs(rho.entries(ma * nb + mb, map * nb + mbp));
                    mass_a[static_cast<std::size_t>(ma)] += v;
                    mass_a[static_cast<std::size_t>(map)] += v;
                    mass_b[static_cast<std::size_t>(mb)] += v;
                    mass_b[static_cast<std::size_t>(mbp)] += v;
                }
    std::vector<Eigen::Index> kept_a;
    std::vector<Eigen::Index> kept_b;
    for (Eigen::Index i = 0; i < na; ++i)
        if (mass_a[static_cast<std::size_t>(i)] > 0.0) kept_a.push_back(i);
    for (Eigen::Index i = 0; i < nb; ++i)
        if (mass_b[static_cast<std::size_t>(i)] > 0.0) kept_b.push_back(i);
    if (kept_a.empty()) kept_a.push_back(0);
    if (kept_b.empty()) kept_b.push_back(0);
    return {std::move(kept_a), std::move(kept_b)};
}

}  // namespace detail

// smallest eigenvalue of the partially transposed state. The state is compacted
// to its per-mode support first, so Bell-like states reduce to a 4x4 eigensolve.
inline double pt_min_eigenvalue(const fock::DensityMatrix& rho) {
    if (rho.dims.size() != 2)
        throw std::invalid_argument("pt_min_eigenvalue: two-mode state required");
    const Eigen::Index na = rho.dims[0];
    const Eigen::Index nb = rho.dims[1];
    if (rho.entries.rows() != na * nb || rho.entries.cols() != na * nb)
        throw std::invalid_argument("pt_min_eigenvalue: entries shape does not match dims");
    for (Eigen::Index c = 0; c < rho.entries.cols(); ++c)
        for (Eigen::Index r = 0; r <= c; ++r)
            if (std::abs(rho.entries(r, c) - std::conj(rho.entries(c, r))) > 1e-12)
                throw std::invalid_argument("pt_min_eigenvalue: input not Hermitian within 1e-12");

    const auto [kept_a, kept_b] = detail::support(rho);
    const Eigen::Index ca = static_cast<Eigen::Index>(kept_a.size());
    const Eigen::Index cb = static_cast<Eigen::Index>(kept_b.size());
    ComplexMatrix compact(ca * cb, ca * cb);
    for (Eigen::Index ia = 0; ia < ca; ++ia)
        for (Eigen::Index ib = 0; ib < cb; ++ib)
            for (Eigen::Index ja = 0; ja < ca; ++ja)
                for (Eigen::Index jb = 0; jb < cb; ++jb)
                    compact(ia * cb + ib, ja * cb + jb) = rho.entries(
                        kept_a[static_cast<std::size_t>(ia)] * nb + kept_b[static_cast<std::size_t>(ib)],
                        kept_a[static_cast<std::size_t>(ja)] * nb + kept_b[static_cast<std::size_t>(jb)]);

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(partial_transpose_b(compact, ca, cb));
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("pt_min_eigenvalue: eigensolver failed");
    return solver.eigenvalues()(0);
}

// negativity 2 max(0, -lambda_min) via the full partial-transpose eigensolve
inline double negativity(const fock::DensityMatrix& rho) {
    return 2.0 * std::max(0.0, -pt_min_eigenvalue(rho));
}

// closed form for the evolved Bell pair: lambda_neg(t) = -(1/2) |C(n-m, n-m; t)|,
// the decaying branch; used as a cross-check of the eigensolve path
inline double bell_lambda_neg(const BipartiteKernel& k, int n, int m, double t) {
    if (n == m) throw std::invalid_argument("bell_lambda_neg: indices must differ");
    const long delta = long(n) - long(m);
    return -0.5 * std::exp(0.5 * log_abs_sq2(k, delta, delta, t));
}

}  // namespace kerr::bipartite
