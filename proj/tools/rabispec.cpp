// rabispec: spectra of the biased qubit-oscillator model from the command line.
//
//   rabispec sweep    --axis g --range 0:1:21 --delta 1 --epsilon 0.5 --methods exact,grwa
//   rabispec converge --delta 1 --epsilon 1 --g 1.5 --levels 7
//   rabispec compare  --axis detuning_delta --range -0.5:0.5:21 --g 0.5 --methods grwa,brwa
//
// Exit codes: 0 success, 1 configuration error, 2 every point failed.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rabi/errors.hpp"
#include "rabi/exact.hpp"
#include "rabi/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitAllFailed = 2;

struct SweepOptions {
    std::string axis{"g"};
    std::string range{"0:1:11"};
    double delta{1.0};
    double epsilon{0.0};
    double g{0.0};
    std::string methods{"exact"};
    int levels{7};
    double tol{1e-10};
    std::string format{"csv"};
    std::string out;
    int threads{0};
};

void add_sweep_options(CLI::App* cmd, SweepOptions& o) {
    cmd->add_option("--axis", o.axis, "Swept parameter: g, detuning_delta or epsilon");
    cmd->add_option("--range", o.range, "start:stop:count");
    cmd->add_option("--delta", o.delta, "Tunneling (ignored when sweeping detuning_delta)");
    cmd->add_option("--epsilon", o.epsilon, "Static bias");
    cmd->add_option("--g", o.g, "Coupling");
    cmd->add_option("--methods", o.methods,
                    "Comma-separated subset of exact,zoa,dsc,vvp,grwa,brwa,variational");
    cmd->add_option("--levels", o.levels, "Number of lowest levels per method");
    cmd->add_option("--tol", o.tol, "Convergence tolerance of the exact solver");
    cmd->add_option("--format", o.format, "csv or json");
    cmd->add_option("--out", o.out, "Output file (default stdout)");
    cmd->add_option("--threads", o.threads, "Worker threads (default RABI_THREADS or all cores)");
}

rabi::SweepConfig to_config(const SweepOptions& o) {
    rabi::SweepConfig c;
    const auto axis = rabi::parse_axis(o.axis);
    if (!axis) throw rabi::ConfigError("unknown axis '" + o.axis + "'");
    c.axis = *axis;
    c.range = rabi::Range::parse(o.range);
    c.fixed = {o.delta, o.epsilon, o.g};
    std::stringstream list(o.methods);
    for (std::string name; std::getline(list, name, ',');) {
        if (name.empty()) continue;
        const auto method = rabi::parse_method(name);
        if (!method) throw rabi::ConfigError("unknown method '" + name + "'");
        c.methods.push_back(*method);
    }
    c.levels = o.levels;
    c.tol = o.tol;
    if (o.format == "csv") {
        c.output = rabi::OutputFormat::csv;
    } else if (o.format == "json") {
        c.output = rabi::OutputFormat::json;
    } else {
        throw rabi::ConfigError("unknown format '" + o.format + "'");
    }
    c.output_path = o.out;
    c.threads = o.threads;
    c.validate();
    return c;
}

template <class Writer>
int emit(const std::string& path, Writer write) {
    if (path.empty()) {
        write(std::cout);
        return kExitOk;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open '" << path << "' for writing\n";
        return kExitConfig;
    }
    write(file);
    return kExitOk;
}

int run_sweep_command(const SweepOptions& o) {
    const rabi::SweepConfig config = to_config(o);
    const auto records = rabi::run_sweep(config);
    const int rc = emit(config.output_path, [&](std::ostream& out) {
        if (config.output == rabi::OutputFormat::json) {
            rabi::write_json(records, out);
        } else {
            rabi::write_csv(records, out);
        }
    });
    if (rc != kExitOk) return rc;
    return rabi::all_points_failed(records) ? kExitAllFailed : kExitOk;
}

int run_compare_command(SweepOptions o) {
    if (("," + o.methods + ",").find(",exact,") == std::string::npos) o.methods = "exact," + o.methods;
    rabi::SweepConfig config = to_config(o);
    config.exact_levels = 2 * config.levels;
    const auto records = rabi::run_sweep(config);
    if (rabi::all_points_failed(records)) return kExitAllFailed;
    const auto rows = rabi::report_errors(records);
    return emit(config.output_path, [&](std::ostream& out) { rabi::write_error_table(rows, out); });
}

int run_converge_command(double delta, double epsilon, double g, int levels, double tol) {
    const rabi::ModelParams params{delta, epsilon, g};
    try {
        const rabi::ConvergenceReport report = rabi::converge(params, levels, tol);
        std::cout << "n_tr,max_change";
        for (int i = 0; i < levels; ++i) std::cout << ",E" << i;
        std::cout << '\n';
        for (const auto& step : report.history) {
            std::cout << step.n_tr << ',' << rabi::format_double(step.max_change);
            for (double e : step.lowest) std::cout << ',' << rabi::format_double(e);
            std::cout << '\n';
        }
        std::cout << "# converged n_tr_used=" << report.spectrum.n_tr_used << '\n';
        return kExitOk;
    } catch (const rabi::ConvergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitAllFailed;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Energy spectrum of the biased quantum Rabi model"};
    app.require_subcommand(1);

    SweepOptions sweep_opts;
    auto* sweep = app.add_subcommand("sweep", "Evaluate methods over a parameter grid");
    add_sweep_options(sweep, sweep_opts);

    SweepOptions compare_opts;
    auto* compare = app.add_subcommand("compare", "Per-level error of each method against exact");
    add_sweep_options(compare, compare_opts);

    double delta = 1.0;
    double epsilon = 0.0;
    double g = 0.0;
    int levels = 7;
    double tol = 1e-10;
    auto* conv = app.add_subcommand("converge", "Truncation convergence of the exact solver");
    conv->add_option("--delta", delta, "Tunneling");
    conv->add_option("--epsilon", epsilon, "Static bias");
    conv->add_option("--g", g, "Coupling");
    conv->add_option("--levels", levels, "Number of lowest levels monitored");
    conv->add_option("--tol", tol, "Convergence tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*sweep) return run_sweep_command(sweep_opts);
        if (*compare) return run_compare_command(compare_opts);
        if (*conv) return run_converge_command(delta, epsilon, g, levels, tol);
    } catch (const rabi::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const rabi::DomainError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const rabi::MissingExactError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitAllFailed;
    }
    return kExitConfig;
}
