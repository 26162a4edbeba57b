#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hyperamalgam/errors.hpp"
#include "hyperamalgam/report.hpp"
#include "hyperamalgam/suites.hpp"

// Exit codes: 0 all cases pass, 1 some case failed, 2 usage or runtime error.
int main(int argc, char** argv) {
    using namespace hyperamalgam;

    CLI::App app{"hypergroup norm and transform check suites"};
    harness::RunConfig cfg;
    std::string suite;
    std::string format = "json";
    std::string out = "-";

    app.add_option("--suite", suite,
                   "one of: discrete-exact, wiener-discrete, naimark, equivalence-motion, "
                   "translation-bound, hausdorff-young-motion, transforms-theorem, "
                   "wiener-motion, all")
        ->required();
    app.add_option("--seed", cfg.seed, "base seed for randomized cases");
    app.add_option("--p", cfg.p, "extra local exponent folded into exponent sweeps");
    app.add_option("--nmax", cfg.nmax, "cell count / window size for grid suites");
    app.add_option("--xmax", cfg.xmax, "right edge of the continuous domain");
    app.add_option("--tol-abs", cfg.tol_abs, "absolute quadrature tolerance");
    app.add_option("--tol-rel", cfg.tol_rel, "relative quadrature tolerance");
    app.add_option("--trials", cfg.trials, "randomized trial count per family");
    app.add_option("--threads", cfg.threads, "worker threads for independent cases");
    app.add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", out, "output path, - for stdout");

    CLI11_PARSE(app, argc, argv);

    if (const char* env = std::getenv("HYPERAMALGAM_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') cfg.seed = v;
    }

    try {
        auto rep = harness::run_suite(suite, cfg);
        harness::emit(rep, format, out);
        if (rep.all_pass()) return 0;
        std::cerr << suite << ": " << rep.failed() << " of " << rep.cases.size()
                  << " cases failed\n";
        return 1;
    } catch (const UnknownSuite& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
