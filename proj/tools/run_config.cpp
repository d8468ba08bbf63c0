#include "run_config.hpp"

#include <servrisk/mc_oracle.hpp>

#include <array>
#include <cctype>
#include <cerrno>
#include <climits>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string_view>
#include <unordered_set>
#include <utility>

namespace servrisk::cli {

namespace {

std::string trim(std::string_view text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    return std::string{text.substr(begin, end - begin)};
}

double parse_double(const std::string& key, const std::string& text) {
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size()) {
        throw ConfigError(key, "expected a number, got '" + text + "'");
    }
    if (!std::isfinite(value)) throw ConfigError(key, "must be finite");
    return value;
}

std::uint64_t parse_uint64(const std::string& key, const std::string& text) {
    if (text.empty() || text[0] == '-' || text[0] == '+') {
        throw ConfigError(key, "expected a non-negative integer, got '" + text + "'");
    }
    errno = 0;
    char* end = nullptr;
    const unsigned long long value = std::strtoull(text.c_str(), &end, 10);
    if (end != text.c_str() + text.size() || errno == ERANGE) {
        throw ConfigError(key, "expected a non-negative integer, got '" + text + "'");
    }
    return value;
}

/// A plain decimal literal as mantissa·10^exponent, kept exact so axis
/// ranges can be stepped without accumulating binary rounding error.
struct Decimal {
    long long mantissa = 0;
    int exponent = 0;
};

Decimal parse_plain_decimal(const std::string& key, const std::string& text) {
    Decimal out;
    bool any_digit = false;
    bool seen_dot = false;
    for (char ch : text) {
        if (ch == '.') {
            if (seen_dot) throw ConfigError(key, "malformed number '" + text + "'");
            seen_dot = true;
            continue;
        }
        if (ch < '0' || ch > '9') {
            throw ConfigError(key, "range bounds must be plain decimals, got '" + text + "'");
        }
        if (out.mantissa > 100000000000000LL) {
            throw ConfigError(key, "number '" + text + "' has too many digits");
        }
        out.mantissa = out.mantissa * 10 + (ch - '0');
        if (seen_dot) --out.exponent;
        any_digit = true;
    }
    if (!any_digit) throw ConfigError(key, "malformed number '" + text + "'");
    return out;
}

/// Correctly rounded double for mantissa·10^exponent.
double decimal_value(long long mantissa, int exponent) {
    char buffer[48];
    std::snprintf(buffer, sizeof buffer, "%llde%d", mantissa, exponent);
    return std::strtod(buffer, nullptr);
}

std::vector<double> parse_axis_range(const std::string& key, const std::string& text) {
    std::array<std::string, 3> parts;
    std::size_t from = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t colon = text.find(':', from);
        if ((colon == std::string::npos) != (i == 2)) {
            throw ConfigError(key, "range must be start:stop:step");
        }
        parts[i] = trim(text.substr(from, colon == std::string::npos ? colon : colon - from));
        from = colon + 1;
    }
    Decimal start = parse_plain_decimal(key, parts[0]);
    Decimal stop = parse_plain_decimal(key, parts[1]);
    Decimal step = parse_plain_decimal(key, parts[2]);

    const int exponent = std::min({start.exponent, stop.exponent, step.exponent});
    const auto rescale = [&](Decimal& d) {
        for (; d.exponent > exponent; --d.exponent) {
            if (d.mantissa > 1000000000000000LL) {
                throw ConfigError(key, "range bounds span too many digits");
            }
            d.mantissa *= 10;
        }
    };
    rescale(start);
    rescale(stop);
    rescale(step);

    if (step.mantissa <= 0) throw ConfigError(key, "range step must be positive");
    if (start.mantissa <= 0) throw ConfigError(key, "range values must be positive");
    if (start.mantissa > stop.mantissa) throw ConfigError(key, "range is empty");
    if ((stop.mantissa - start.mantissa) / step.mantissa >= 100000) {
        throw ConfigError(key, "range produces too many values");
    }

    std::vector<double> values;
    for (long long m = start.mantissa; m <= stop.mantissa; m += step.mantissa) {
        values.push_back(decimal_value(m, exponent));
    }
    return values;
}

OutputFormat parse_format(const std::string& key, const std::string& text) {
    if (text == "csv") return OutputFormat::Csv;
    if (text == "json") return OutputFormat::Json;
    if (text == "markdown") return OutputFormat::MarkdownTable;
    throw ConfigError(key, "expected 'csv', 'json' or 'markdown', got '" + text + "'");
}

DistributionFamily parse_family(const std::string& key, const std::string& text) {
    if (text == "normal") return DistributionFamily::Normal;
    if (text == "skew_normal") return DistributionFamily::SkewNormal;
    throw ConfigError(key, "expected 'normal' or 'skew_normal', got '" + text + "'");
}

void upsert_weight(WeightLedger& ledger, std::string name, double factor) {
    for (auto& entry : ledger) {
        if (entry.name == name) {
            entry.factor = factor;
            return;
        }
    }
    ledger.push_back({std::move(name), factor});
}

bool key_allowed(Command command, const std::string& key) {
    static const std::unordered_set<std::string> common{
        "stress_factor", "base_nsr", "family", "skew", "format", "output"};
    static const std::unordered_set<std::string> grid_only{"nsr_axis", "sd_axis"};
    static const std::unordered_set<std::string> validate_only{"samples", "seed", "workers"};
    static const std::unordered_set<std::string> score_only{
        "base_pd", "base_lgd", "pd_floor", "pd_cap", "nsr", "sd"};
    if (common.count(key)) return true;
    switch (command) {
    case Command::Grid: return grid_only.count(key) > 0;
    case Command::Validate: return grid_only.count(key) > 0 || validate_only.count(key) > 0;
    case Command::Score:
        return score_only.count(key) > 0 || key.rfind("pd_weight.", 0) == 0 ||
               key.rfind("lgd_weight.", 0) == 0;
    }
    return false;
}

void apply_key(RunConfig& config, const std::string& key, const std::string& value) {
    const auto in_range = [&](double v, double lo, double hi, bool lo_open,
                              const char* range) {
        if ((lo_open ? v > lo : v >= lo) && v <= hi) return v;
        throw ConfigError(key, std::string{"must lie in "} + range);
    };
    if (key == "stress_factor") {
        config.stress_factor = in_range(parse_double(key, value), 0.0, 1.0, true, "(0, 1]");
    } else if (key == "base_nsr") {
        const double v = parse_double(key, value);
        if (v <= 0.0) throw ConfigError(key, "must be positive");
        config.base_nsr = v;
    } else if (key == "family") {
        config.family = parse_family(key, value);
    } else if (key == "skew") {
        config.skew = parse_double(key, value);
    } else if (key == "format") {
        config.format = parse_format(key, value);
    } else if (key == "output") {
        if (value.empty()) throw ConfigError(key, "must not be empty");
        config.output_path = value;
    } else if (key == "nsr_axis") {
        config.nsr_axis = parse_axis(key, value);
    } else if (key == "sd_axis") {
        config.sd_axis = parse_axis(key, value);
    } else if (key == "samples") {
        const std::uint64_t v = parse_uint64(key, value);
        if (v < kMinOracleSamples) {
            throw ConfigError(key, "must be at least " + std::to_string(kMinOracleSamples));
        }
        config.samples = v;
    } else if (key == "seed") {
        config.seed = parse_uint64(key, value);
    } else if (key == "workers") {
        const std::uint64_t v = parse_uint64(key, value);
        if (v > UINT_MAX) throw ConfigError(key, "is unreasonably large");
        config.workers = static_cast<unsigned>(v);
    } else if (key == "base_pd") {
        config.base_pd = in_range(parse_double(key, value), 0.0, 1.0, true, "(0, 1]");
    } else if (key == "base_lgd") {
        config.base_lgd = in_range(parse_double(key, value), 0.0, 1.0, true, "(0, 1]");
    } else if (key == "pd_floor") {
        config.pd_floor = in_range(parse_double(key, value), 0.0, 1.0, false, "[0, 1]");
    } else if (key == "pd_cap") {
        config.pd_cap = in_range(parse_double(key, value), 0.0, 1.0, false, "[0, 1]");
    } else if (key == "nsr") {
        const double v = parse_double(key, value);
        if (v <= 0.0) throw ConfigError(key, "must be positive");
        config.nsr = v;
    } else if (key == "sd") {
        const double v = parse_double(key, value);
        if (v <= 0.0) throw ConfigError(key, "must be positive");
        config.sd = v;
    } else if (key.rfind("pd_weight.", 0) == 0 || key.rfind("lgd_weight.", 0) == 0) {
        const bool pd = key[0] == 'p';
        std::string name = key.substr(key.find('.') + 1);
        if (name.empty()) throw ConfigError(key, "weight name must not be empty");
        const double factor = parse_double(key, value);
        if (factor < 0.0) throw ConfigError(key, "factor must be non-negative");
        upsert_weight(pd ? config.pd_weights : config.lgd_weights, std::move(name), factor);
    } else {
        throw ConfigError(key, "unknown key");
    }
}

void check_axis_order(const std::string& key, const std::vector<double>& axis) {
    if (axis.empty()) throw ConfigError(key, "must not be empty");
    for (std::size_t i = 1; i < axis.size(); ++i) {
        if (axis[i] <= axis[i - 1]) throw ConfigError(key, "must be strictly increasing");
    }
}

void finalize(RunConfig& config) {
    if (config.family == DistributionFamily::Normal && config.skew != 0.0) {
        throw ConfigError("skew", "must be 0 for the normal family");
    }
    switch (config.command) {
    case Command::Grid:
    case Command::Validate:
        check_axis_order("nsr_axis", config.nsr_axis);
        check_axis_order("sd_axis", config.sd_axis);
        break;
    case Command::Score:
        if (!config.base_pd) throw ConfigError("base_pd", "required for score");
        if (!config.base_lgd) throw ConfigError("base_lgd", "required for score");
        if (config.pd_floor > config.pd_cap) {
            throw ConfigError("pd_floor", "must not exceed pd_cap");
        }
        if (config.nsr.has_value() != config.sd.has_value()) {
            throw ConfigError(config.nsr ? "sd" : "nsr", "nsr and sd must be set together");
        }
        if (config.nsr) {
            for (const auto& entry : config.pd_weights) {
                if (entry.name == kServiceabilityWeightName) {
                    throw ConfigError("pd_weight." + entry.name,
                                      "conflicts with the serviceability weight derived "
                                      "from nsr/sd");
                }
            }
        }
        break;
    }
}

} // namespace

std::string command_section(Command command) {
    switch (command) {
    case Command::Grid: return "grid";
    case Command::Score: return "score";
    case Command::Validate: return "validate";
    }
    return {};
}

RunConfig default_config(Command command) {
    RunConfig config;
    config.command = command;
    config.nsr_axis = parse_axis("nsr_axis", "0.2:2.0:0.1");
    config.sd_axis = parse_axis("sd_axis", "0.10:0.40:0.05");
    return config;
}

std::vector<double> parse_axis(const std::string& key, const std::string& text) {
    if (text.find(':') != std::string::npos) return parse_axis_range(key, text);

    std::string spaced = text;
    for (char& ch : spaced) {
        if (ch == ',') ch = ' ';
    }
    std::istringstream stream{spaced};
    std::vector<double> values;
    std::string token;
    while (stream >> token) {
        const double v = parse_double(key, token);
        if (v <= 0.0) throw ConfigError(key, "values must be positive");
        values.push_back(v);
    }
    if (values.empty()) throw ConfigError(key, "empty axis");
    return values;
}

std::vector<KeyValue> parse_config_file(const std::string& text, Command command) {
    const std::string wanted = command_section(command);
    std::vector<KeyValue> pairs;
    std::unordered_set<std::string> seen_sections;
    std::unordered_set<std::string> seen_keys; // qualified as section/key
    std::string section;

    std::istringstream stream{text};
    std::string raw;
    while (std::getline(stream, raw)) {
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#' || line[0] == ';') continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError(line, "malformed section header");
            section = trim(std::string_view{line}.substr(1, line.size() - 2));
            if (section != "grid" && section != "score" && section != "validate") {
                throw ConfigError(section, "unknown section");
            }
            if (!seen_sections.insert(section).second) {
                throw ConfigError(section, "duplicate section");
            }
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(line, "expected key = value");
        const std::string key = trim(std::string_view{line}.substr(0, eq));
        const std::string value = trim(std::string_view{line}.substr(eq + 1));
        if (key.empty()) throw ConfigError(line, "expected key = value");
        if (section.empty()) throw ConfigError(key, "key appears outside a section");
        if (value.empty()) throw ConfigError(key, "empty value");
        Command section_command = section == "grid"    ? Command::Grid
                                  : section == "score" ? Command::Score
                                                       : Command::Validate;
        if (!key_allowed(section_command, key)) {
            throw ConfigError(key, "unknown key in [" + section + "]");
        }
        if (!seen_keys.insert(section + "/" + key).second) {
            throw ConfigError(key, "duplicate key in [" + section + "]");
        }
        if (section == wanted) pairs.push_back({key, value});
    }
    return pairs;
}

RunConfig make_run_config(Command command, const std::optional<std::string>& file_text,
                          const std::vector<KeyValue>& flag_overrides) {
    RunConfig config = default_config(command);
    if (file_text) {
        for (const auto& kv : parse_config_file(*file_text, command)) {
            apply_key(config, kv.key, kv.value);
        }
    }
    for (const auto& kv : flag_overrides) {
        if (!key_allowed(command, kv.key)) throw ConfigError(kv.key, "unknown key");
        apply_key(config, kv.key, kv.value);
    }
    finalize(config);
    return config;
}

std::string to_string(OutputFormat format) {
    switch (format) {
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Json: return "json";
    case OutputFormat::MarkdownTable: return "markdown";
    }
    return {};
}

} // namespace servrisk::cli
