// scenarios.hpp — config-driven scenario runners behind the kerr-dephase CLI

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace kerr::cli {

// invalid or inconsistent run configuration; maps to exit code 1
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ReservoirSpec {
    int n_modes = 100;
    double x = 1.0;
    std::string profile = "gaussian";  // gaussian | resonant
    double omega = 0.1125;
    int k0 = 50;
    double omega_resonant = 0.1;  // companion flat spectrum (characteristic scenario)
};

struct StateSpec {
    std::string kind = "fock";  // fock | cat
    double alpha = 2.0;
    int m1 = 1;
    int m2 = 2;
};

struct GridSpec {
    double t_min = 1e-2;
    double t_max = 1e3;
    int points = 1001;
    bool log_scale = true;
};

struct RunConfig {
    std::string scenario;
    ReservoirSpec reservoir;
    std::vector<StateSpec> states;
    GridSpec grid;
    long delta = 1;                       // characteristic
    std::vector<int> n_list = {100, 1000, 10000};  // lowerbound
    double g_ab = 0.0;                    // negativity
    std::string variant = "variance";     // master-eq: variance | second-moment
    double dt = 1e-3;                     // master-eq step
    std::string fault;                    // certify: "" | "perturb-closed-form"
    unsigned threads = 1;
};

// parses and validates a JSON config; scenario is the CLI positional and must
// agree with the config's own "scenario" field when that is present
RunConfig load_config(const std::string& path, const std::string& scenario);

// scenario runners; each writes the CSV (or report) plus a sidecar
// "<out>.config.json" echoing the exact resolved parameters
void run_characteristic(const RunConfig& cfg, const std::string& out);
void run_purity(const RunConfig& cfg, const std::string& out);
void run_lowerbound(const RunConfig& cfg, const std::string& out);
void run_negativity(const RunConfig& cfg, const std::string& out);
void run_master_eq(const RunConfig& cfg, const std::string& out);
int run_certify(const RunConfig& cfg, const std::string& out);  // 0 pass, 2 fail

// dispatch on cfg.scenario; returns the process exit code (0 ok, 2 certify fail)
int run_scenario(const RunConfig& cfg, const std::string& out);

}  // namespace kerr::cli
