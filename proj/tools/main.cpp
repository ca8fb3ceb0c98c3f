// kerr-dephase — CLI front end: figure CSVs, sweeps, and certification.
// Exit codes: 0 success, 1 validation or I/O failure, 2 certification failure.

#include "kerr/scenarios.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

namespace {

unsigned resolve_threads(unsigned flag_value, bool flag_given) {
    unsigned n = 1;
    if (flag_given) {
        n = flag_value;
    } else if (const char* env = std::getenv("KERR_DEPHASE_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) n = static_cast<unsigned>(v);
    }
    if (n == 0) n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact dephasing dynamics of bosonic modes in a cross-Kerr thermal reservoir"};
    app.name("kerr-dephase");

    std::string scenario;
    std::string config_path;
    std::string out_path;
    unsigned threads = 0;
    app.add_option("scenario", scenario,
                   "one of: characteristic, purity, lowerbound, negativity, master-eq, certify")
        ->required();
    auto* threads_opt = app.add_option("--threads", threads, "worker threads (0 = all cores)");
    app.add_option("--config", config_path, "JSON run configuration")->required();
    app.add_option("--out", out_path, "output CSV / report path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        kerr::cli::RunConfig cfg = kerr::cli::load_config(config_path, scenario);
        cfg.threads = resolve_threads(threads, threads_opt->count() > 0);
        return kerr::cli::run_scenario(cfg, out_path);
    } catch (const kerr::cli::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
