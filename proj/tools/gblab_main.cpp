#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gblab/commands.hpp"
#include "gblab/expr.hpp"
#include "gblab/kernels.hpp"
#include "gblab/version.hpp"

namespace {

using gblab::cli::ConfigError;
using gblab::cli::Report;
using gblab::cli::RunConfig;

struct CommonArgs {
    std::string config_path;
    std::string out_path;
    std::string csv_path;
    std::vector<std::string> tolerance_overrides;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "JSON run configuration")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--out", args.out_path, "write the JSON report to this path");
    cmd->add_option("--csv", args.csv_path, "write CSV output to this path");
    cmd->add_option("--tolerance", args.tolerance_overrides,
                    "override a tolerance, NAME=VALUE (repeatable)");
}

RunConfig load_config(const CommonArgs& args) {
    RunConfig config = RunConfig::load_file(args.config_path);
    for (const std::string& ov : args.tolerance_overrides) {
        const auto eq = ov.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("--tolerance expects NAME=VALUE, got '" + ov + "'");
        }
        config.apply_tolerance_override(ov.substr(0, eq), std::stod(ov.substr(eq + 1)));
    }
    return config;
}

int finish(const Report& rep, const CommonArgs& args, std::ostream& lines) {
    rep.print(lines);
    if (!args.out_path.empty()) {
        std::ofstream out(args.out_path);
        if (!out) {
            std::cerr << "error: cannot write report to '" << args.out_path << "'\n";
            return 2;
        }
        out << rep.to_json().dump(2) << '\n';
    }
    return rep.overall_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gblab: four-polarization photon ladder algebra on truncated Fock "
                 "spaces, with Gupta-Bleuler physical-state verification"};
    app.set_version_flag("--version", GBLAB_VERSION);
    app.require_subcommand(1);

    CommonArgs verify_args, gb_args, exp_args, sweep_args, eval_args;
    bool flip_signature = false;
    std::string sweep_param;
    std::vector<double> sweep_values;
    std::string eval_expression;
    bool eval_on_state = false;

    CLI::App* verify = app.add_subcommand(
        "verify-algebra", "bracket tables, Casimir centrality and [H, generator] residuals");
    add_common(verify, verify_args);

    CLI::App* gb = app.add_subcommand(
        "gb-check", "coherent/physical-state residuals: Gupta-Bleuler condition, <K0>, "
                    "energy, displacement consistency");
    add_common(gb, gb_args);

    CLI::App* expectation = app.add_subcommand(
        "expectation", "gauge-split check of <A_mu> on the configured spacetime grid");
    add_common(expectation, exp_args);
    expectation->add_flag("--flip-signature", flip_signature,
                          "flip the spatial index lowering (negative control; must fail)");

    CLI::App* sweep = app.add_subcommand("sweep", "residual sweep over n_max or alpha magnitude");
    add_common(sweep, sweep_args);
    sweep->add_option("--param", sweep_param, "swept parameter: n_max or alpha")->required();
    sweep->add_option("--values", sweep_values, "swept values")->required()->delimiter(',');

    CLI::App* eval = app.add_subcommand("eval", "parse and evaluate an operator expression");
    add_common(eval, eval_args);
    eval->add_option("expression", eval_expression, "operator expression, e.g. "
                                                    "\"[a[0,0], a[0,0]^dag]\"")
        ->required();
    eval->add_flag("--state", eval_on_state,
                   "also report the physical expectation on the configured physical state");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            return finish(gblab::cli::cmd_verify_algebra(load_config(verify_args)), verify_args,
                          std::cout);
        }
        if (gb->parsed()) {
            return finish(gblab::cli::cmd_gb_check(load_config(gb_args)), gb_args, std::cout);
        }
        if (expectation->parsed()) {
            const RunConfig config = load_config(exp_args);
            if (!exp_args.csv_path.empty()) {
                std::ofstream csv(exp_args.csv_path);
                if (!csv) {
                    std::cerr << "error: cannot write CSV to '" << exp_args.csv_path << "'\n";
                    return 2;
                }
                return finish(gblab::cli::cmd_expectation(config, flip_signature, &csv),
                              exp_args, std::cout);
            }
            return finish(gblab::cli::cmd_expectation(config, flip_signature, nullptr),
                          exp_args, std::cout);
        }
        if (sweep->parsed()) {
            const RunConfig config = load_config(sweep_args);
            if (!sweep_args.csv_path.empty()) {
                std::ofstream csv(sweep_args.csv_path);
                if (!csv) {
                    std::cerr << "error: cannot write CSV to '" << sweep_args.csv_path << "'\n";
                    return 2;
                }
                return finish(gblab::cli::cmd_sweep(config, sweep_param, sweep_values, csv),
                              sweep_args, std::cout);
            }
            // CSV to stdout, check lines to stderr
            const Report rep =
                gblab::cli::cmd_sweep(config, sweep_param, sweep_values, std::cout);
            return finish(rep, sweep_args, std::cerr);
        }
        if (eval->parsed()) {
            return finish(gblab::cli::cmd_eval(load_config(eval_args), eval_expression,
                                               eval_on_state),
                          eval_args, std::cout);
        }
    } catch (const gblab::expr::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const gblab::expr::EvalError& e) {
        std::cerr << "eval error: " << e.what() << '\n';
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
