#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "sirnet/errors.hpp"
#include "sirnet/experiment.hpp"

namespace {

struct CliOptions {
    std::map<std::string, std::string> params;
    std::string format = "csv";
    std::string output;
    std::string outdir = "figures";
};

void add_common_options(CLI::App* cmd, CliOptions& opts, bool with_grid = true) {
    auto bind = [&opts, cmd](const std::string& flag, const std::string& key, const std::string& help) {
        cmd->add_option_function<std::string>(
            flag, [&opts, key](const std::string& v) { opts.params[key] = v; }, help);
    };
    bind("--model", "model", "point process: ppp|square|triangular|ginibre");
    bind("--alpha", "alpha", "path loss exponent (> 2)");
    bind("--delta", "delta", "2/alpha; overrides --alpha");
    bind("--fading", "fading", "rayleigh|nakagami");
    bind("--m", "m", "Nakagami shape (positive integer)");
    bind("--n", "n", "moment order");
    bind("--lambda", "lambda", "base station intensity");
    bind("--samples", "samples", "Monte Carlo sample count");
    bind("--seed", "seed", "master seed");
    bind("--workers", "workers", "worker threads (0 = SIRNET_WORKERS env or hardware)");
    bind("--eps", "eps", "truncation tolerance");
    bind("--compensation", "compensation", "1: add mean far-field interference (default), 0: plain truncation");
    bind("--palm-start", "palm-start", "first Ginibre radial index under the reduced Palm measure");
    if (with_grid) {
        bind("--theta-db", "theta-db", "theta grid as min:step:max in dB");
        bind("--theta-min-db", "theta-min-db", "grid start (dB)");
        bind("--theta-max-db", "theta-max-db", "grid end (dB)");
        bind("--grid-points", "grid-points", "number of grid points");
    }
    cmd->add_option("--format", opts.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output", opts.output, "output file (default: stdout)");
}

int emit(const sirnet::ResultTable& table, const CliOptions& opts) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!opts.output.empty()) {
        file.open(opts.output);
        if (!file) {
            std::cerr << "error: cannot open output file '" << opts.output << "'\n";
            return 1;
        }
        os = &file;
    }
    if (opts.format == "json")
        sirnet::write_json(table, *os);
    else
        sirnet::write_csv(table, *os);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SIR distributions of single-tier cellular networks: analytic formulas for the "
                 "PPP, Monte Carlo for lattices and the Ginibre process, and the asymptotic "
                 "gains G0/Ginf behind the shifted-ccdf approximation"};
    app.require_subcommand(1);

    CliOptions opts;
    const std::map<std::string, std::string> descriptions = {
        {"ps-ppp", "analytic PPP success probability over a theta grid"},
        {"misr", "Monte Carlo (generalized) MISR of a model"},
        {"gen-misr", "analytic generalized MISR of the PPP with bounds"},
        {"efir", "EFIR: closed forms, bounds, quadrature and Monte Carlo"},
        {"simulate", "Monte Carlo SIR ccdf over a theta grid"},
        {"gains", "gain curve G(theta) with asymptotic levels"},
        {"asappp", "shifted-ccdf approximation vs simulated ccdf"},
    };
    for (const auto& [name, help] : descriptions) add_common_options(app.add_subcommand(name, help), opts);

    CLI::App* fig = app.add_subcommand("figures", "emit gnuplot-ready data files for the standard plots");
    add_common_options(fig, opts, false);
    fig->add_option("--outdir", opts.outdir, "directory for the data files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    sirnet::ExperimentSpec spec;
    spec.command = app.get_subcommands().front()->get_name();
    spec.params = opts.params;

    try {
        if (spec.command == "figures") {
            std::filesystem::create_directories(opts.outdir);
            for (const auto& [name, content] : sirnet::figures(spec)) {
                std::ofstream f(std::filesystem::path(opts.outdir) / name);
                f << content;
                std::cout << opts.outdir << "/" << name << "\n";
            }
            return 0;
        }
        return emit(sirnet::run(spec), opts);
    } catch (const sirnet::truncation_error& e) {
        std::cerr << "truncation error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::out_of_range& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
