#include "doctest.h"

#include "kerr/csv.hpp"
#include "kerr/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

using namespace kerr;
using namespace kerr::io;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(bool(in));
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("format_sci") {
    CHECK(format_sci(0.1) == "1.0000000000000001e-01");
    CHECK(format_sci(1.0) == "1.0000000000000000e+00");
    CHECK(format_sci(0.0) == "0.0000000000000000e+00");
    CHECK(format_sci(-2.5e-13) == "-2.4999999999999999e-13");

    // 17 significant digits round-trip exactly
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> mant(-1.0, 1.0);
    std::uniform_int_distribution<int> exp10(-300, 300);
    for (int trial = 0; trial < 200; ++trial) {
        const double v = mant(rng) * std::pow(10.0, exp10(rng));
        CHECK(std::strtod(format_sci(v).c_str(), nullptr) == v);
    }
}

TEST_CASE("writers") {
    SUBCASE("unwritable path names the file") {
        CHECK_THROWS_WITH_AS(CsvWriter("/nonexistent-dir/out.csv"),
                             doctest::Contains("/nonexistent-dir/out.csv"), std::runtime_error);
    }

    SUBCASE("spectrum csv") {
        const std::string path = "/tmp/kerr_test_spectrum.csv";
        write_spectrum_csv(path, reservoir::commensurate_spectrum({1, 2}, 0.5));
        CHECK(slurp(path) ==
              "k,g_0k\n"
              "1,5.0000000000000000e-01\n"
              "2,1.0000000000000000e+00\n");
    }

    SUBCASE("purity csv header and shape") {
        const std::string path = "/tmp/kerr_test_purity.csv";
        write_purity_csv(path, {{0.0, 1.0}, {1.0, 0.5}});
        const std::string text = slurp(path);
        CHECK(text.rfind("t,purity\n", 0) == 0);
        CHECK(std::count(text.begin(), text.end(), '\n') == 3);
    }

    SUBCASE("char curve csv header") {
        const std::string path = "/tmp/kerr_test_char.csv";
        write_char_curve_csv(path, {{0.5, 2, 0.9, -0.105, 0.01}});
        CHECK(slurp(path).rfind("t,delta,abs_sq,log_abs_sq,phase\n", 0) == 0);
    }

    SUBCASE("state csv round trip of a known entry") {
        const std::string path = "/tmp/kerr_test_state.csv";
        write_state_csv(path, fock::density_from_pure(fock::fock_superposition(0, 1)));
        const std::string text = slurp(path);
        CHECK(text.rfind("m,m_prime,re,im\n", 0) == 0);
        const auto at = text.find("\n0,1,");
        REQUIRE(at != std::string::npos);
        const double re = std::strtod(text.c_str() + at + 5, nullptr);
        CHECK(re == doctest::Approx(0.5).epsilon(1e-14));
    }

    SUBCASE("identical inputs give identical bytes") {
        const std::string a = "/tmp/kerr_test_det_a.csv";
        const std::string b = "/tmp/kerr_test_det_b.csv";
        const auto s = reservoir::gaussian_spectrum(64, 0.2, 13);
        write_spectrum_csv(a, s);
        write_spectrum_csv(b, s);
        CHECK(slurp(a) == slurp(b));
    }
}

TEST_CASE("grids and parallel_for") {
    SUBCASE("grid endpoints are exact") {
        const auto lin = kerr::linear_spaced(0.0, 30.0, 61);
        CHECK(lin.front() == 0.0);
        CHECK(lin.back() == 30.0);
        const auto lg = kerr::log_spaced(1e-4, 10.0, 1001);
        CHECK(lg.front() == 1e-4);
        CHECK(lg.back() == 10.0);
        CHECK_THROWS_AS(kerr::log_spaced(0.0, 1.0, 10), std::invalid_argument);
        CHECK_THROWS_AS(kerr::linear_spaced(1.0, 1.0, 10), std::invalid_argument);
    }

    SUBCASE("every index runs exactly once for any thread count") {
        for (unsigned threads : {1u, 2u, 5u}) {
            std::vector<std::atomic<int>> hits(97);
            kerr::parallel_for(hits.size(), threads, [&](std::size_t i) { ++hits[i]; });
            for (const auto& h : hits) CHECK(h.load() == 1);
        }
        kerr::parallel_for(0, 4, [](std::size_t) { REQUIRE(false); });
    }

    SUBCASE("worker exceptions propagate") {
        CHECK_THROWS_AS(kerr::parallel_for(50, 4,
                                           [](std::size_t i) {
                                               if (i == 33) throw std::runtime_error("boom");
                                           }),
                        std::runtime_error);
    }
}
