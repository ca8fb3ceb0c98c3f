#include "doctest.h"

#include "kerr/evolution.hpp"
#include "kerr/fock.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>

using namespace kerr;
using namespace kerr::fock;

namespace {

// test-side oracle: direct sums over the amplitude list
double mass(const PhotonDistribution& d) {
    double acc = 0.0;
    for (Eigen::Index n = 0; n < d.amps.size(); ++n) acc += std::norm(d.amps[n]);
    return acc;
}

double quartic_sum(const PhotonDistribution& d) {
    double acc = 0.0;
    for (Eigen::Index n = 0; n < d.amps.size(); ++n) acc += std::norm(d.amps[n]) * std::norm(d.amps[n]);
    return acc;
}

PhotonDistribution random_state(std::mt19937& rng, int dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexVector v(dim);
    for (int n = 0; n < dim; ++n) v[n] = Complex(gauss(rng), gauss(rng));
    double norm2 = 0.0;
    for (int n = 0; n < dim; ++n) norm2 += std::norm(v[n]);
    v /= std::sqrt(norm2);
    return PhotonDistribution{std::move(v)};
}

}  // namespace

TEST_CASE("cat_state") {
    SUBCASE("alpha = 0 is the vacuum") {
        const auto d = cat_state(Complex(0.0, 0.0));
        CHECK(d.n_max() == 0);
        CHECK(d.amps[0] == Complex(1.0, 0.0));
    }

    SUBCASE("alpha = 2: normalized, even support, pure") {
        const auto d = cat_state(Complex(2.0, 0.0));
        CHECK(mass(d) == doctest::Approx(1.0).epsilon(1e-14));
        for (int n = 1; n <= d.n_max(); n += 2) CHECK(d.amps[n] == Complex(0.0, 0.0));
        CHECK(purity(density_from_pure(d)) == doctest::Approx(1.0).epsilon(1e-12));
        // equilibrium purity sum |p|^4, frozen from direct summation
        CHECK(quartic_sum(d) == doctest::Approx(0.28678628414103507).epsilon(1e-12));
    }

    SUBCASE("tail truncation control") {
        const auto d = cat_state(Complex(3.0, 0.0));
        // raising the cutoff by 10 barely moves downstream purity sums
        const auto wider = cat_state_with_cutoff(Complex(3.0, 0.0), d.n_max() + 10);
        CHECK(std::abs(quartic_sum(wider) - quartic_sum(d)) < 1e-10);
    }

    SUBCASE("complex alpha keeps the phases") {
        const auto d = cat_state(Complex(1.0, 1.0));
        CHECK(mass(d) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(std::arg(d.amps[2]) == doctest::Approx(2.0 * std::arg(Complex(1.0, 1.0))).epsilon(1e-12));
    }

    SUBCASE("errors") {
        CHECK_THROWS_AS(cat_state(Complex(40.0, 0.0)), TruncationOverflow);
        CHECK_THROWS_AS(cat_state(Complex(1.0, 0.0), 0.0), std::invalid_argument);
        CHECK_THROWS_AS(cat_state(Complex(1.0, 0.0), 1e-5), std::invalid_argument);
    }
}

TEST_CASE("fock_superposition") {
    const auto d = fock_superposition(1, 2);
    CHECK(d.n_max() == 2);
    CHECK(d.amps[1].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(d.amps[2].real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(d.amps[0] == Complex(0.0, 0.0));

    CHECK(purity(density_from_pure(fock_superposition(0, 1))) == doctest::Approx(1.0).epsilon(1e-12));

    // outer-product structure: exactly 4 nonzero entries
    const auto rho = density_from_pure(fock_superposition(3, 7));
    int nonzero = 0;
    for (Eigen::Index c = 0; c < rho.dim(); ++c)
        for (Eigen::Index r = 0; r < rho.dim(); ++r)
            if (std::abs(rho.entries(r, c)) > 0.0) ++nonzero;
    CHECK(nonzero == 4);

    CHECK_THROWS_AS(fock_superposition(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(fock_superposition(-1, 2), std::invalid_argument);
    CHECK_THROWS_AS(fock_superposition(0, 1000), TruncationOverflow);
}

TEST_CASE("density_from_pure") {
    SUBCASE("vacuum") {
        const auto rho = density_from_pure(cat_state(Complex(0.0, 0.0)));
        CHECK(rho.dim() == 1);
        CHECK(rho.entries(0, 0) == Complex(1.0, 0.0));
    }

    SUBCASE("equal superposition: all four entries 1/2 in magnitude") {
        const auto rho = density_from_pure(fock_superposition(1, 2));
        for (Eigen::Index r : {1, 2})
            for (Eigen::Index c : {1, 2})
                CHECK(std::abs(rho.entries(r, c)) == doctest::Approx(0.5).epsilon(1e-15));
    }

    SUBCASE("cat(2): unit trace by direct summation") {
        const auto rho = density_from_pure(cat_state(Complex(2.0, 0.0)));
        double trace = 0.0;
        for (Eigen::Index m = 0; m < rho.dim(); ++m) trace += rho.entries(m, m).real();
        CHECK(trace == doctest::Approx(1.0).epsilon(1e-12));
        CHECK_NOTHROW(validate(rho));
    }

    SUBCASE("rank-1 and positive semidefinite") {
        const auto rho = density_from_pure(cat_state(Complex(1.5, 0.5)));
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.entries);
        CHECK(es.eigenvalues()(0) > -1e-12);
        CHECK(es.eigenvalues()(rho.dim() - 2) < 1e-12);  // only one nonzero eigenvalue
        CHECK(es.eigenvalues()(rho.dim() - 1) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("purity") {
    SUBCASE("maximally mixed qubit") {
        DensityMatrix rho;
        rho.dims = {2};
        rho.entries = ComplexMatrix::Zero(2, 2);
        rho.entries(0, 0) = 0.5;
        rho.entries(1, 1) = 0.5;
        CHECK(purity(rho) == doctest::Approx(0.5).epsilon(1e-15));
    }

    SUBCASE("every normalized pure state has purity 1") {
        std::mt19937 rng(20260808);
        for (int trial = 0; trial < 20; ++trial) {
            const auto d = random_state(rng, 2 + int(rng() % 11));
            CHECK(purity(density_from_pure(d)) == doctest::Approx(1.0).epsilon(1e-12));
        }
    }

    SUBCASE("equilibrium of the Fock superposition") {
        const auto rho = evolution::equilibrium_state(density_from_pure(fock_superposition(1, 2)));
        CHECK(purity(rho) == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("validate rejects broken matrices") {
    auto rho = density_from_pure(fock_superposition(0, 1));
    CHECK_NOTHROW(validate(rho));

    auto bad = rho;
    bad.entries(0, 1) += Complex(1e-6, 0.0);
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);

    bad = rho;
    bad.entries(0, 0) += 1e-3;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);

    bad = rho;
    bad.entries(0, 0) = -1e-3;
    bad.entries(1, 1) = 1.0 + 1e-3;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);

    bad = rho;
    bad.dims = {3};
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}
