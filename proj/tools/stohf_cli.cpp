#include <fstream>
#include <iostream>
#include <vector>

#include "CLI11.hpp"
#include "stohf/report.hpp"

namespace {

int write_out(const std::string& content, const std::string& path) {
    if (path.empty()) {
        std::cout << content;
        return 0;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot write " << path << "\n";
        return 1;
    }
    os << content;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Single-zeta STO Hartree-Fock energies for He through Ne"};
    app.require_subcommand(1);

    std::vector<int> zs;
    stohf::OptimizerOptions opts;
    std::string format = "text";
    std::string output;

    auto add_run_options = [&](CLI::App* cmd) {
        cmd->add_option("-z,--z", zs, "atomic numbers (default: all of 2..10)")
            ->check(CLI::Range(2, 10));
        cmd->add_option("--seed", opts.seed, "restart perturbation seed");
        cmd->add_option("--energy-tol", opts.energy_tol, "energy tolerance");
        cmd->add_option("--param-tol", opts.param_tol,
                        "parameter tolerance (relative)");
        cmd->add_option("--max-evals", opts.max_evaluations,
                        "max evaluations per restart");
        cmd->add_option("--restarts", opts.restarts, "optimizer restarts");
        cmd->add_option("-o,--output", output, "output file (default stdout)");
    };

    auto* run_cmd = app.add_subcommand("run", "optimize atoms and report");
    add_run_options(run_cmd);
    run_cmd->add_option("-f,--format", format, "text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    auto* verify_cmd = app.add_subcommand(
        "verify", "differential-test closed forms against the quadrature oracle");
    int samples = 200;
    unsigned verify_seed = 42;
    verify_cmd->add_option("-n,--samples", samples, "random exponent tuples")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", verify_seed, "sampling seed");
    verify_cmd->add_option("-o,--output", output, "output file");

    auto* compare_cmd = app.add_subcommand(
        "compare", "compare optimized energies against the reference columns");
    add_run_options(compare_cmd);
    compare_cmd->add_option("-f,--format", format, "text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    auto* plot_cmd =
        app.add_subcommand("plot-data", "emit Z vs energy series for plotting");
    add_run_options(plot_cmd);

    CLI11_PARSE(app, argc, argv);

    if (zs.empty())
        for (int z = 2; z <= 10; ++z) zs.push_back(z);

    try {
        if (app.got_subcommand(verify_cmd)) {
            const auto report = stohf::verify(samples, verify_seed);
            const int rc = write_out(stohf::to_text(report), output);
            return rc != 0 ? rc : (report.passed() ? 0 : 1);
        }

        const auto report = stohf::run(zs, opts);
        std::string content;
        if (app.got_subcommand(run_cmd)) {
            switch (stohf::parse_format(format)) {
                case stohf::OutputFormat::Text:
                    content = stohf::to_text(report);
                    break;
                case stohf::OutputFormat::Csv:
                    content = stohf::to_csv(report);
                    break;
                case stohf::OutputFormat::Json:
                    content = stohf::to_json(report).dump(2) + "\n";
                    break;
            }
        } else if (app.got_subcommand(compare_cmd)) {
            content = stohf::compare(report, stohf::parse_format(format));
        } else {
            content = stohf::plot_data(report);
        }
        const int rc = write_out(content, output);
        if (rc != 0) return rc;
        return stohf::all_converged(report) ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
