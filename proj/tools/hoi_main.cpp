#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hoi/claims.hpp"

namespace {

struct CommonOpts {
    std::string format = "json";
    std::uint64_t seed = 42;
    double tol = 1e-10;
    bool seed_given = false;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"json", "markdown"}));
    cmd->add_option("--seed", c.seed, "RNG seed for the sampled checks")
        ->each([&c](const std::string&) { c.seed_given = true; });
    cmd->add_option("--tol", c.tol, "Default comparison tolerance");
}

std::uint64_t effective_seed(const CommonOpts& c) {
    if (c.seed_given) return c.seed;  // command-line flag wins
    if (const char* env = std::getenv("HOI_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            // fall through to the default
        }
    }
    return c.seed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Audit of the interference-hierarchy claims for the density-cube and "
                 "quartic-quantum extensions of quantum theory"};
    app.require_subcommand(1);

    std::string suite;
    CommonOpts repro_opts, check_opts;

    CLI::App* repro = app.add_subcommand("reproduce", "Run a claim suite and report results");
    repro->add_option("suite", suite, "One of: all, sorkin, dc, collision, qqt")->required();
    add_common(repro, repro_opts);

    CLI::App* check = app.add_subcommand("checklist", "Render the desiderata verdict table");
    add_common(check, check_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << e.what() << "\n\n" << app.help() << std::flush;
        return 2;
    }

    try {
        if (repro->parsed()) {
            if (suite != "all" && suite != "sorkin" && suite != "dc" && suite != "collision" &&
                suite != "qqt") {
                std::cerr << "unknown suite: " << suite << "\n\n" << app.help() << std::flush;
                return 2;
            }
            hoi::claims::Options opt;
            opt.seed = effective_seed(repro_opts);
            opt.tol = repro_opts.tol;
            const auto reports = hoi::claims::run_suite(suite, opt);
            if (repro_opts.format == "json")
                std::cout << hoi::claims::to_json(reports).dump(2) << "\n";
            else
                std::cout << hoi::claims::to_markdown(reports);
            return hoi::claims::any_failed(reports) ? 1 : 0;
        }
        if (check->parsed()) {
            if (check_opts.format == "json")
                std::cout << hoi::claims::checklist_json().dump(2) << "\n";
            else
                std::cout << hoi::claims::checklist_markdown();
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
