#pragma once

#include <servrisk/risk_model.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace servrisk::cli {

enum class Command { Grid, Score, Validate };

enum class OutputFormat { Csv, Json, MarkdownTable };

/// Raised for any malformed configuration value; what() names the
/// offending key.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string& detail)
        : std::runtime_error("'" + key + "': " + detail), key_(std::move(key)) {}

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

/// Fully resolved settings for one invocation. Built by layering a config
/// file and then command-line flags over the defaults (flags win).
struct RunConfig {
    Command command = Command::Grid;

    double stress_factor = 0.9;
    std::vector<double> nsr_axis; ///< default 0.2..2.0 step 0.1
    std::vector<double> sd_axis;  ///< default 0.10..0.40 step 0.05
    double base_nsr = 1.0;
    DistributionFamily family = DistributionFamily::Normal;
    double skew = 0.0;

    // score
    std::optional<double> base_pd;
    std::optional<double> base_lgd;
    double pd_floor = 0.0;
    double pd_cap = 1.0;
    WeightLedger pd_weights;
    WeightLedger lgd_weights;
    std::optional<double> nsr; ///< with sd, attaches the serviceability weight
    std::optional<double> sd;

    // validate
    std::uint64_t samples = 1000000;
    std::uint64_t seed = 1;
    unsigned workers = 0; ///< 0 = hardware concurrency

    OutputFormat format = OutputFormat::MarkdownTable;
    std::optional<std::string> output_path; ///< default: standard output
};

/// One key/value override, as written in a config file or captured from a
/// command-line flag.
struct KeyValue {
    std::string key;
    std::string value;
};

/// The config-file section name for a command: grid, score or validate.
std::string command_section(Command command);

/// Defaults for a command with no file and no flags.
RunConfig default_config(Command command);

/// Parses an axis specification: either a range "start:stop:step" with
/// plain decimal bounds (end inclusive when the step lands on it) or a
/// comma/space-separated list of numbers. The key is used for diagnostics.
std::vector<double> parse_axis(const std::string& key, const std::string& text);

/// Parses the sectioned key-value config format. The whole file is checked
/// strictly — unknown sections, unknown keys, duplicate keys and keys
/// outside any section are rejected with the offending name — and the pairs
/// of the section matching `command` are returned in file order.
std::vector<KeyValue> parse_config_file(const std::string& text, Command command);

/// Builds the final config: defaults, then file pairs, then flag pairs.
/// Throws ConfigError on any malformed value or cross-field violation.
RunConfig make_run_config(Command command, const std::optional<std::string>& file_text,
                          const std::vector<KeyValue>& flag_overrides);

std::string to_string(OutputFormat format);

} // namespace servrisk::cli
