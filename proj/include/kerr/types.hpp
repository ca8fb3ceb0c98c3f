// types.hpp — shared aliases and deterministic grid helpers

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace kerr {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealArray = Eigen::ArrayXd;

// points values from lo to hi inclusive, uniformly spaced
inline std::vector<double> linear_spaced(double lo, double hi, int points) {
    if (points < 2) throw std::invalid_argument("linear_spaced: need at least 2 points");
    if (!(lo < hi)) throw std::invalid_argument("linear_spaced: need lo < hi");
    std::vector<double> out(static_cast<std::size_t>(points));
    const double step = (hi - lo) / double(points - 1);
    for (int i = 0; i < points; ++i) out[static_cast<std::size_t>(i)] = lo + step * double(i);
    out.back() = hi;
    return out;
}

// points values from lo to hi inclusive, uniform in the log; lo must be > 0
inline std::vector<double> log_spaced(double lo, double hi, int points) {
    if (points < 2) throw std::invalid_argument("log_spaced: need at least 2 points");
    if (!(lo > 0.0) || !(lo < hi)) throw std::invalid_argument("log_spaced: need 0 < lo < hi");
    std::vector<double> out(static_cast<std::size_t>(points));
    const double llo = std::log(lo);
    const double lhi = std::log(hi);
    for (int i = 0; i < points; ++i)
        out[static_cast<std::size_t>(i)] = std::exp(llo + (lhi - llo) * double(i) / double(points - 1));
    out.front() = lo;
    out.back() = hi;
    return out;
}

}  // namespace kerr
