#include "doctest.h"

#include "kerr/evolution.hpp"

#include <cmath>
#include <numbers>

using namespace kerr;
using namespace kerr::evolution;

namespace {

EvolutionConfig fig3_config(bool free_phase = false, double omega0 = 0.0) {
    auto kernel = dephasing::make_kernel(reservoir::gaussian_spectrum(100, 0.1125, 50),
                                         reservoir::make_params(100, 0.01));
    return EvolutionConfig{std::move(kernel), omega0, free_phase};
}

EvolutionConfig resonant_config(double x = 1.0) {
    auto kernel = dephasing::make_kernel(reservoir::resonant_spectrum(100, 0.1),
                                         reservoir::make_params(100, x));
    return EvolutionConfig{std::move(kernel), 0.0, true};
}

}  // namespace

TEST_CASE("evolve") {
    const auto cfg = fig3_config(true);
    const auto rho0 = fock::density_from_pure(fock::cat_state(Complex(2.0, 0.0)));

    SUBCASE("t = 0 reproduces the input exactly") {
        const auto rho = evolve(rho0, cfg, 0.0);
        CHECK((rho.entries - rho0.entries).cwiseAbs().maxCoeff() == 0.0);
    }

    SUBCASE("populations are bit-identical at any t") {
        const auto rho = evolve(rho0, cfg, 1.7);
        for (Eigen::Index m = 0; m < rho.dim(); ++m) CHECK(rho.entries(m, m) == rho0.entries(m, m));
        CHECK(number_expectation(rho) == number_expectation(rho0));
        CHECK_NOTHROW(fock::validate(rho));
    }

    SUBCASE("trace and Hermiticity survive evolution") {
        const auto rho = evolve(rho0, fig3_config(true, 0.7), 12.9);
        CHECK_NOTHROW(fock::validate(rho));
    }

    SUBCASE("flat spectrum restores the state at t = 2 pi / g") {
        const auto cfgr = resonant_config();
        const auto rho1 = fock::density_from_pure(fock::fock_superposition(1, 2));
        const double g = cfgr.kernel.spectrum.couplings[0];
        const auto rho = evolve(rho1, cfgr, 2.0 * std::numbers::pi / g);
        CHECK(fock::purity(rho) == doctest::Approx(1.0).epsilon(1e-9));
        CHECK((rho.entries - rho1.entries).cwiseAbs().maxCoeff() < 1e-9);  // omega0 = 0: no free phase
    }

    SUBCASE("free phase rotates coherences without touching magnitudes") {
        const auto with = evolve(rho0, fig3_config(true, 0.9), 3.3);
        const auto without = evolve(rho0, fig3_config(false, 0.9), 3.3);
        CHECK((with.entries.cwiseAbs() - without.entries.cwiseAbs()).maxCoeff() < 1e-15);
        CHECK(std::abs(with.entries(0, 2) - without.entries(0, 2) * std::polar(1.0, 2.0 * 0.9 * 3.3)) <
              1e-15);
    }

    SUBCASE("input validation") {
        CHECK_THROWS_AS(evolve(rho0, cfg, -1.0), std::invalid_argument);
        fock::DensityMatrix two_mode;
        two_mode.dims = {2, 2};
        two_mode.entries = ComplexMatrix::Identity(4, 4) * 0.25;
        CHECK_THROWS_AS(evolve(two_mode, cfg, 1.0), std::invalid_argument);
    }
}

TEST_CASE("purity curves") {
    const auto cfg = fig3_config();
    const double tau_d = dephasing::decoherence_time(cfg.kernel);

    SUBCASE("generic machinery equals the two-level closed form") {
        const auto dist = fock::fock_superposition(1, 2);
        for (double t : log_spaced(1e-3 * tau_d, 100.0 * tau_d, 200)) {
            const double generic = purity_at(dist, cfg, t);
            const double closed = 0.5 * (1.0 + std::exp(dephasing::log_abs_sq(cfg.kernel, 1, t)));
            CHECK(std::abs(generic - closed) < 1e-12);
        }
        CHECK(purity_at(dist, cfg, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
        // equilibrium plateau of the two-level mixture
        CHECK(purity_at(dist, cfg, 100.0 * tau_d) == doctest::Approx(0.5).epsilon(1e-3));
    }

    SUBCASE("purity_curve matches purity(evolve(.)) pointwise") {
        const auto dist = fock::cat_state(Complex(2.0, 0.0));
        const auto rho0 = fock::density_from_pure(dist);
        auto ts = log_spaced(1e-2 * tau_d, 10.0 * tau_d, 25);
        const auto curve = purity_curve(dist, cfg, ts);
        for (std::size_t i = 0; i < ts.size(); ++i) {
            CHECK(curve[i].second == doctest::Approx(fock::purity(evolve(rho0, cfg, ts[i]))).epsilon(1e-12));
            CHECK(curve[i].second > 0.0);
            CHECK(curve[i].second <= 1.0 + 1e-12);
        }
    }

    SUBCASE("thread count does not change values") {
        const auto dist = fock::cat_state(Complex(2.0, 0.0));
        auto ts = log_spaced(1e-3, 10.0, 40);
        const auto one = purity_curve(dist, cfg, ts, 1);
        const auto four = purity_curve(dist, cfg, ts, 4);
        for (std::size_t i = 0; i < ts.size(); ++i) CHECK(one[i].second == four[i].second);
    }

    SUBCASE("cat state collapses near tau_D and settles at its plateau") {
        const auto dist = fock::cat_state(Complex(2.0, 0.0));
        const double early = purity_at(dist, cfg, 0.05 * tau_d);
        const double late = purity_at(dist, cfg, 100.0 * tau_d);
        CHECK(early > 0.9);
        double quartic = 0.0;
        for (double w : fock::weights(dist)) quartic += w * w;
        CHECK(late == doctest::Approx(quartic).epsilon(1e-6));
    }

    SUBCASE("low temperature: purity never dips below the analytic equilibrium") {
        const auto cold = EvolutionConfig{
            dephasing::make_kernel(reservoir::gaussian_spectrum(100, 0.1125, 50),
                                   reservoir::make_params(100, 50.0)),
            0.0, false};
        const auto dist = fock::cat_state(Complex(2.0, 0.0));
        double equilibrium = 0.0;
        for (double w : fock::weights(dist)) equilibrium += w * w;
        for (double t : log_spaced(1e-2, 1e3, 50))
            CHECK(purity_at(dist, cold, t) >= equilibrium);
    }
}

TEST_CASE("equilibrium_state") {
    SUBCASE("fock superposition becomes the even mixture") {
        const auto rho = equilibrium_state(fock::density_from_pure(fock::fock_superposition(1, 2)));
        CHECK(fock::purity(rho) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(std::abs(rho.entries(1, 2)) == 0.0);
        CHECK(rho.entries(1, 1).real() == doctest::Approx(0.5).epsilon(1e-12));
    }

    SUBCASE("diagonal input is unchanged") {
        fock::DensityMatrix rho;
        rho.dims = {3};
        rho.entries = ComplexMatrix::Zero(3, 3);
        rho.entries(0, 0) = 0.2;
        rho.entries(1, 1) = 0.3;
        rho.entries(2, 2) = 0.5;
        const auto eq = equilibrium_state(rho);
        CHECK((eq.entries - rho.entries).cwiseAbs().maxCoeff() == 0.0);
    }

    SUBCASE("cat equilibrium purity sits strictly between 0 and 1") {
        const auto dist = fock::cat_state(Complex(2.0, 0.0));
        const double p = fock::purity(equilibrium_state(fock::density_from_pure(dist)));
        CHECK(p > 0.0);
        CHECK(p < 1.0);
        CHECK(p == doctest::Approx(0.28678628414103507).epsilon(1e-12));
    }
}
