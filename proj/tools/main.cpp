#include "run.hpp"
#include "run_config.hpp"

#include "CLI11.hpp"

#include <deque>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using servrisk::cli::Command;
using servrisk::cli::ConfigError;
using servrisk::cli::KeyValue;

struct FlagCapture {
    CLI::Option* option;
    std::string key;
    const std::string* value;
};

/// Binds a string-valued flag and remembers which config key it overrides.
class FlagSet {
public:
    void add(CLI::App* cmd, const std::string& flag, const std::string& key,
             const std::string& description) {
        storage_.emplace_back();
        captures_.push_back({cmd->add_option(flag, storage_.back(), description), key,
                             &storage_.back()});
    }

    /// Key/value pairs for every flag the user actually passed.
    std::vector<KeyValue> overrides() const {
        std::vector<KeyValue> pairs;
        for (const auto& capture : captures_) {
            if (capture.option->count() > 0) pairs.push_back({capture.key, *capture.value});
        }
        return pairs;
    }

private:
    std::deque<std::string> storage_; // deque: stable addresses for CLI11 bindings
    std::vector<FlagCapture> captures_;
};

void add_common_flags(FlagSet& flags, CLI::App* cmd) {
    flags.add(cmd, "--stress-factor", "stress_factor",
              "Income stress factor f in (0,1] (default 0.9)");
    flags.add(cmd, "--base-nsr", "base_nsr",
              "Base NSR for the risk-weight denominator (default 1.0)");
    flags.add(cmd, "--family", "family",
              "Income distribution family: normal or skew_normal (default normal)");
    flags.add(cmd, "--skew", "skew", "Skew-normal shape parameter (must be 0 for normal)");
    flags.add(cmd, "--format", "format",
              "Output format: csv, json or markdown (default markdown)");
    flags.add(cmd, "--output", "output", "Write the document to a file instead of stdout");
}

void add_axis_flags(FlagSet& flags, CLI::App* cmd) {
    flags.add(cmd, "--nsr-axis", "nsr_axis",
              "NSR axis: 'start:stop:step' or a comma list (default 0.2:2.0:0.1)");
    flags.add(cmd, "--sd-axis", "sd_axis",
              "Income dispersion axis (default 0.10:0.40:0.05)");
}

std::vector<KeyValue> weight_overrides(const std::vector<std::string>& args,
                                       const std::string& prefix) {
    std::vector<KeyValue> pairs;
    for (const auto& arg : args) {
        const std::size_t eq = arg.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == arg.size()) {
            throw ConfigError(prefix, "expected NAME=FACTOR, got '" + arg + "'");
        }
        pairs.push_back({prefix + "." + arg.substr(0, eq), arg.substr(eq + 1)});
    }
    return pairs;
}

std::string read_config_file(const std::string& path) {
    std::ifstream file{path, std::ios::binary};
    if (!file) throw ConfigError("config", "cannot read '" + path + "'");
    std::ostringstream text;
    text << file.rdbuf();
    return text.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Serviceability risk weights: tabulate them over a grid, fold them into "
                 "loan expected-loss figures, and cross-check the analytics by simulation"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> pd_weight_args;
    std::vector<std::string> lgd_weight_args;
    FlagSet flags;

    CLI::App* grid = app.add_subcommand(
        "grid", "Tabulate risk weights over an NSR × income-dispersion grid");
    grid->add_option("--config", config_path, "Read settings from a sectioned config file");
    add_common_flags(flags, grid);
    add_axis_flags(flags, grid);

    CLI::App* score = app.add_subcommand(
        "score", "Compose base PD/LGD with named risk weights into an expected loss");
    score->add_option("--config", config_path, "Read settings from a sectioned config file");
    add_common_flags(flags, score);
    flags.add(score, "--base-pd", "base_pd", "Base probability of default in (0,1]");
    flags.add(score, "--base-lgd", "base_lgd", "Base loss given default in (0,1]");
    flags.add(score, "--pd-floor", "pd_floor", "Lower clamp for adjusted PD (default 0)");
    flags.add(score, "--pd-cap", "pd_cap", "Upper clamp for adjusted PD (default 1)");
    flags.add(score, "--nsr", "nsr",
              "Attach the serviceability weight for this NSR (requires --sd)");
    flags.add(score, "--sd", "sd", "Income dispersion for the attached weight");
    score->add_option("--pd-weight", pd_weight_args,
                      "Named PD weight as NAME=FACTOR (repeatable)");
    score->add_option("--lgd-weight", lgd_weight_args,
                      "Named LGD weight as NAME=FACTOR (repeatable)");

    CLI::App* validate = app.add_subcommand(
        "validate", "Cross-check analytic risk weights against Monte Carlo estimates");
    validate->add_option("--config", config_path, "Read settings from a sectioned config file");
    add_common_flags(flags, validate);
    add_axis_flags(flags, validate);
    flags.add(validate, "--samples", "samples",
              "Monte Carlo draws per grid cell (default 1000000, minimum 10000)");
    flags.add(validate, "--seed", "seed",
              "Master seed; every cell derives its own child seed (default 1)");
    flags.add(validate, "--workers", "workers",
              "Worker threads for cell evaluation, 0 = hardware concurrency");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? servrisk::cli::kExitSuccess : servrisk::cli::kExitConfigError;
    }

    try {
        Command command = Command::Grid;
        if (score->parsed()) command = Command::Score;
        if (validate->parsed()) command = Command::Validate;

        std::optional<std::string> file_text;
        if (!config_path.empty()) file_text = read_config_file(config_path);

        std::vector<KeyValue> overrides = flags.overrides();
        for (auto& kv : weight_overrides(pd_weight_args, "pd_weight")) {
            overrides.push_back(std::move(kv));
        }
        for (auto& kv : weight_overrides(lgd_weight_args, "lgd_weight")) {
            overrides.push_back(std::move(kv));
        }

        const servrisk::cli::RunConfig config =
            servrisk::cli::make_run_config(command, file_text, overrides);
        return servrisk::cli::run(config, std::cout, std::cerr);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return servrisk::cli::kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "computation error: " << e.what() << '\n';
        return servrisk::cli::kExitComputationError;
    }
}
