// lotterycpt: command-line driver for the mechanism analyses.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lotterycpt/commands.hpp"
#include "lotterycpt/errors.hpp"
#include "lotterycpt/run_config.hpp"
#include "lotterycpt/table.hpp"

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct Overrides {
    std::string config_path;
    std::optional<std::string> output;
    std::optional<std::string> format;
    std::optional<std::string> mechanism;
    std::optional<double> k;
    std::optional<double> fee;
    std::optional<double> rake;
    std::optional<int> n;
    std::optional<int> n_min;
    std::optional<int> n_max;
    std::optional<double> value_alpha;
    std::optional<double> value_lambda;
    std::optional<std::string> weight;
    std::optional<double> weight_delta;
    std::optional<double> prelec_alpha;
    std::optional<double> prelec_beta;
    std::string save_config;
};

lotterycpt::RunConfig resolve(const Overrides& o) {
    using namespace lotterycpt;
    RunConfig c = o.config_path.empty() ? RunConfig{} : load_run_config(o.config_path);

    if (o.output) c.output = *o.output;
    if (o.format) c.format = parse_output_format(*o.format);
    if (o.mechanism) {
        MechanismKind kind;
        try {
            kind = parse_mechanism_kind(*o.mechanism);
        } catch (const DomainError& e) {
            throw ConfigError(e.what());
        }
        switch (kind) {
            case MechanismKind::WinnerTakeAll: c.mechanism = Mechanism::winner_take_all(); break;
            case MechanismKind::TopKLinear: c.mechanism = Mechanism::top_k_linear(0.16); break;
            case MechanismKind::TopKExponential:
                c.mechanism = Mechanism::top_k_exponential(0.06);
                break;
            case MechanismKind::ThreeBands: c.mechanism = Mechanism::three_bands(); break;
        }
    }
    if (o.k) c.mechanism.k = *o.k;
    if (o.mechanism || o.k) c.compare = {c.mechanism};
    if (o.fee) c.fee = *o.fee;
    if (o.rake) c.rake = *o.rake;
    if (o.n) c.n = *o.n;
    if (o.n_min) c.grid.n.min = *o.n_min;
    if (o.n_max) c.grid.n.max = *o.n_max;
    if (o.value_alpha) c.value_fn.alpha = *o.value_alpha;
    if (o.value_lambda) c.value_fn.lambda = *o.value_lambda;
    if (o.weight) c.weight_fn.kind = parse_weighting_kind(*o.weight);
    if (o.weight_delta) c.weight_fn.delta = *o.weight_delta;
    if (o.prelec_alpha) c.weight_fn.prelec_alpha = *o.prelec_alpha;
    if (o.prelec_beta) c.weight_fn.prelec_beta = *o.prelec_beta;
    c.validate();
    return c;
}

void emit(const lotterycpt::Table& table, const lotterycpt::RunConfig& config) {
    using namespace lotterycpt;
    auto write = [&](std::ostream& out) {
        if (config.format == OutputFormat::Csv) {
            write_csv(out, table);
        } else {
            write_json(out, table);
        }
    };
    if (config.output.empty() || config.output == "-") {
        write(std::cout);
        return;
    }
    std::ofstream out(config.output, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file " + config.output);
    }
    write(out);
    if (!out) {
        throw std::runtime_error("failed writing output file " + config.output);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Compare lottery prize mechanisms under prospect theory"};
    app.require_subcommand(1);

    Overrides o;
    app.add_option("--config", o.config_path, "JSON run configuration")->check(CLI::ExistingFile);
    app.add_option("--output", o.output, "Output file (default stdout)");
    app.add_option("--format", o.format, "csv or json");
    app.add_option("--mechanism", o.mechanism,
                   "winner-take-all, top-k-linear, top-k-exponential or three-bands");
    app.add_option("--k", o.k, "Fraction of participants paid (top-k mechanisms)");
    app.add_option("--fee", o.fee, "Entry fee");
    app.add_option("--rake", o.rake, "Operator rake in [0, 1)");
    app.add_option("--n", o.n, "Participant count for eval");
    app.add_option("--n-min", o.n_min, "Smallest swept participant count");
    app.add_option("--n-max", o.n_max, "Largest swept participant count");
    app.add_option("--value-alpha", o.value_alpha, "Value function exponent");
    app.add_option("--value-lambda", o.value_lambda, "Loss aversion coefficient");
    app.add_option("--weight", o.weight, "tk, prelec or identity");
    app.add_option("--weight-delta", o.weight_delta, "Tversky-Kahneman curvature");
    app.add_option("--prelec-alpha", o.prelec_alpha, "Prelec curvature");
    app.add_option("--prelec-beta", o.prelec_beta, "Prelec elevation");
    app.add_option("--save-config", o.save_config, "Write the effective configuration as JSON");

    const char* descriptions[] = {
        "Utility of one game at --n participants",
        "Utility against participant count for each compared mechanism",
        "Average utility against the winner fraction k",
        "Utility against participant count for each grid fee",
        "Utility against participant count for each grid rake",
        "Operator profit and participant viability over the grid",
        "Smallest participant count with non-negative utility",
    };
    std::size_t i = 0;
    for (auto name : lotterycpt::command_names()) {
        app.add_subcommand(std::string(name), descriptions[i++])->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        const auto config = resolve(o);
        if (!o.save_config.empty()) {
            lotterycpt::save_run_config(config, o.save_config);
        }
        emit(lotterycpt::run_command(command, config), config);
    } catch (const lotterycpt::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return 0;
}
