// csv.hpp — deterministic CSV output: scientific notation, 17 significant
// digits, '.' decimal separator; identical bytes for identical inputs

#pragma once

#include "kerr/fock.hpp"
#include "kerr/reservoir.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kerr::io {

inline std::string format_sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

inline std::string format_index(long v) { return std::to_string(v); }

class CsvWriter {
public:
    explicit CsvWriter(const std::string& path) : path_(path), out_(path, std::ios::binary) {
        if (!out_) throw std::runtime_error("cannot open output file: " + path);
    }

    void line(const std::string& s) {
        out_ << s << '\n';
        if (!out_) throw std::runtime_error("write failed: " + path_);
    }

    void row(const std::vector<std::string>& cells) {
        std::string joined;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) joined += ',';
            joined += cells[i];
        }
        line(joined);
    }

    void close() {
        out_.close();
        if (out_.fail()) throw std::runtime_error("close failed: " + path_);
    }

private:
    std::string path_;
    std::ofstream out_;
};

// columns: k, g_0k
inline void write_spectrum_csv(const std::string& path, const reservoir::SpectralDistribution& s) {
    CsvWriter w(path);
    w.line("k,g_0k");
    for (Eigen::Index k = 0; k < s.couplings.size(); ++k)
        w.row({format_index(long(k) + 1), format_sci(s.couplings[k])});
    w.close();
}

struct CharCurvePoint {
    double t = 0.0;
    long delta = 0;
    double abs_sq = 0.0;
    double log_abs_sq = 0.0;
    double phase = 0.0;
};

// columns: t, delta, abs_sq, log_abs_sq, phase
inline void write_char_curve_csv(const std::string& path, const std::vector<CharCurvePoint>& pts) {
    CsvWriter w(path);
    w.line("t,delta,abs_sq,log_abs_sq,phase");
    for (const auto& p : pts)
        w.row({format_sci(p.t), format_index(p.delta), format_sci(p.abs_sq),
               format_sci(p.log_abs_sq), format_sci(p.phase)});
    w.close();
}

// columns: t, purity
inline void write_purity_csv(const std::string& path, const std::vector<std::pair<double, double>>& pts) {
    CsvWriter w(path);
    w.line("t,purity");
    for (const auto& [t, p] : pts) w.row({format_sci(t), format_sci(p)});
    w.close();
}

// columns: m, m_prime, re, im — single-mode state dump in ascending (m, m')
inline void write_state_csv(const std::string& path, const fock::DensityMatrix& rho) {
    if (rho.dims.size() != 1)
        throw std::invalid_argument("write_state_csv: single-mode state required");
    CsvWriter w(path);
    w.line("m,m_prime,re,im");
    for (Eigen::Index m = 0; m < rho.dim(); ++m)
        for (Eigen::Index mp = 0; mp < rho.dim(); ++mp)
            w.row({format_index(long(m)), format_index(long(mp)),
                   format_sci(rho.entries(m, mp).real()), format_sci(rho.entries(m, mp).imag())});
    w.close();
}

}  // namespace kerr::io
