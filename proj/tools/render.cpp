#include "render.hpp"

#include "json.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

namespace servrisk::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string family_name(DistributionFamily family) {
    return family == DistributionFamily::Normal ? "normal" : "skew_normal";
}

/// Axis label for human-facing tables: shortest form, but always with a
/// decimal point so "2" reads as the level "2.0".
std::string axis_label(double value) {
    std::string text = format_double(value);
    if (text.find('.') == std::string::npos && text.find('e') == std::string::npos) {
        text += ".0";
    }
    return text;
}

std::string percent_label(double fraction) {
    return format_double(fraction * 100.0) + "%";
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char ch : text) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

std::string status_label(GridCellStatus status) {
    switch (status) {
    case GridCellStatus::Evaluated: return "evaluated";
    case GridCellStatus::SaturatedCell: return "saturated";
    case GridCellStatus::UnderflowCell: return "underflow";
    case GridCellStatus::Failed: return "failed";
    }
    return {};
}

std::string fixed(double value, int decimals) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*f", decimals, value);
    return buffer;
}

std::string grid_csv(const RiskWeightGrid& grid) {
    std::string out = "nsr";
    for (double sd : grid.sd_axis) out += "," + format_double(sd);
    out += '\n';
    for (std::size_t i = 0; i < grid.nsr_axis.size(); ++i) {
        out += format_double(grid.nsr_axis[i]);
        for (double value : grid.values[i]) out += "," + format_double(value);
        out += '\n';
    }
    return out;
}

std::string grid_json(const RiskWeightGrid& grid) {
    ordered_json j;
    j["stress_factor"] = grid.stress_factor;
    j["nsr_axis"] = grid.nsr_axis;
    j["sd_axis"] = grid.sd_axis;
    j["values"] = grid.values;
    j["base_nsr"] = grid.base_nsr;
    return j.dump(2) + "\n";
}

std::string grid_markdown(const RiskWeightGrid& grid) {
    std::string out = "| NSR |";
    for (double sd : grid.sd_axis) out += " " + percent_label(sd) + " |";
    out += "\n| --- |";
    for (std::size_t j = 0; j < grid.sd_axis.size(); ++j) out += " --- |";
    out += '\n';
    for (std::size_t i = 0; i < grid.nsr_axis.size(); ++i) {
        out += "| " + axis_label(grid.nsr_axis[i]) + " |";
        for (double value : grid.values[i]) out += " " + format_fixed2(value) + " |";
        out += '\n';
    }
    return out;
}

std::string score_csv(const LoanProfile& profile) {
    std::string out = "metric,value\n";
    out += "base_pd," + format_double(profile.base_pd()) + '\n';
    out += "base_lgd," + format_double(profile.base_lgd()) + '\n';
    for (const auto& entry : profile.pd_weights()) {
        out += "pd_weight." + entry.name + "," + format_double(entry.factor) + '\n';
    }
    for (const auto& entry : profile.lgd_weights()) {
        out += "lgd_weight." + entry.name + "," + format_double(entry.factor) + '\n';
    }
    out += "adjusted_pd," + format_double(adjusted_pd(profile)) + '\n';
    out += "adjusted_lgd," + format_double(adjusted_lgd(profile)) + '\n';
    out += "expected_loss," + format_double(expected_loss(profile)) + '\n';
    return out;
}

ordered_json ledger_json(const WeightLedger& ledger) {
    ordered_json arr = ordered_json::array();
    for (const auto& entry : ledger) {
        arr.push_back({{"name", entry.name}, {"factor", entry.factor}});
    }
    return arr;
}

std::string score_json(const LoanProfile& profile) {
    ordered_json j;
    j["base_pd"] = profile.base_pd();
    j["base_lgd"] = profile.base_lgd();
    j["pd_weights"] = ledger_json(profile.pd_weights());
    j["lgd_weights"] = ledger_json(profile.lgd_weights());
    j["adjusted_pd"] = adjusted_pd(profile);
    j["adjusted_lgd"] = adjusted_lgd(profile);
    j["expected_loss"] = expected_loss(profile);
    return j.dump(2) + "\n";
}

std::string score_markdown(const LoanProfile& profile) {
    std::string out = "| metric | value |\n| --- | --- |\n";
    out += "| base_pd | " + format_double(profile.base_pd()) + " |\n";
    out += "| base_lgd | " + format_double(profile.base_lgd()) + " |\n";
    for (const auto& entry : profile.pd_weights()) {
        out += "| pd_weight." + entry.name + " | " + format_double(entry.factor) + " |\n";
    }
    for (const auto& entry : profile.lgd_weights()) {
        out += "| lgd_weight." + entry.name + " | " + format_double(entry.factor) + " |\n";
    }
    out += "| adjusted_pd | " + format_double(adjusted_pd(profile)) + " |\n";
    out += "| adjusted_lgd | " + format_double(adjusted_lgd(profile)) + " |\n";
    out += "| expected_loss | " + format_double(expected_loss(profile)) + " |\n";
    return out;
}

std::string validation_csv(const GridValidationSummary& summary) {
    std::string out = "nsr,sd,status,samples,empirical_pd,empirical_base_pd,empirical_weight,"
                      "standard_error,analytic_weight,z_score,message\n";
    for (const auto& cell : summary.cells) {
        out += format_double(cell.nsr) + "," + format_double(cell.sd) + "," +
               status_label(cell.status) + ",";
        if (cell.report) {
            const auto& r = *cell.report;
            out += std::to_string(r.samples) + "," + format_double(r.empirical_pd) + "," +
                   format_double(r.empirical_base_pd) + "," +
                   format_double(r.empirical_weight) + "," +
                   format_double(r.standard_error) + "," +
                   format_double(r.analytic_weight) + "," + format_double(r.z_score);
        } else {
            out += ",,,,,,";
        }
        out += "," + csv_field(cell.message) + '\n';
    }
    return out;
}

std::string validation_json(const GridValidationSummary& summary, const RunConfig& config) {
    ordered_json j;
    j["stress_factor"] = config.stress_factor;
    j["base_nsr"] = config.base_nsr;
    j["family"] = family_name(config.family);
    j["skew"] = config.skew;
    j["samples"] = config.samples;
    j["seed"] = config.seed;
    ordered_json cells = ordered_json::array();
    for (const auto& cell : summary.cells) {
        ordered_json c;
        c["nsr"] = cell.nsr;
        c["sd"] = cell.sd;
        c["status"] = status_label(cell.status);
        if (cell.report) {
            const auto& r = *cell.report;
            c["empirical_pd"] = r.empirical_pd;
            c["empirical_base_pd"] = r.empirical_base_pd;
            c["empirical_weight"] = r.empirical_weight;
            c["standard_error"] = r.standard_error;
            c["analytic_weight"] = r.analytic_weight;
            c["z_score"] = r.z_score;
        } else {
            c["message"] = cell.message;
        }
        cells.push_back(std::move(c));
    }
    j["cells"] = std::move(cells);
    j["summary"] = {{"evaluated", summary.evaluated},
                    {"saturated_skipped", summary.saturated_skipped},
                    {"underflow_skipped", summary.underflow_skipped},
                    {"failed", summary.failed},
                    {"exceedances", summary.exceedances}};
    return j.dump(2) + "\n";
}

std::string validation_markdown(const GridValidationSummary& summary) {
    std::string out = "| NSR | sd | status | MC weight | analytic weight | z |\n"
                      "| --- | --- | --- | --- | --- | --- |\n";
    for (const auto& cell : summary.cells) {
        out += "| " + axis_label(cell.nsr) + " | " + axis_label(cell.sd) + " | " +
               status_label(cell.status) + " | ";
        if (cell.report) {
            const auto& r = *cell.report;
            out += fixed(r.empirical_weight, 4) + " | " + fixed(r.analytic_weight, 4) +
                   " | " + fixed(r.z_score, 2) + " |\n";
        } else {
            out += "- | - | - |\n";
        }
    }
    out += '\n' + summarize_validation(summary) + '\n';
    return out;
}

} // namespace

std::string format_double(double value) {
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, result.ptr);
}

std::string format_fixed2(double value) {
    return fixed(value, 2);
}

std::string render_grid(const RiskWeightGrid& grid, OutputFormat format) {
    switch (format) {
    case OutputFormat::Csv: return grid_csv(grid);
    case OutputFormat::Json: return grid_json(grid);
    case OutputFormat::MarkdownTable: return grid_markdown(grid);
    }
    return {};
}

std::string render_score(const LoanProfile& profile, OutputFormat format) {
    switch (format) {
    case OutputFormat::Csv: return score_csv(profile);
    case OutputFormat::Json: return score_json(profile);
    case OutputFormat::MarkdownTable: return score_markdown(profile);
    }
    return {};
}

std::string render_validation(const GridValidationSummary& summary, const RunConfig& config,
                              OutputFormat format) {
    switch (format) {
    case OutputFormat::Csv: return validation_csv(summary);
    case OutputFormat::Json: return validation_json(summary, config);
    case OutputFormat::MarkdownTable: return validation_markdown(summary);
    }
    return {};
}

std::string summarize_validation(const GridValidationSummary& summary) {
    std::ostringstream out;
    out << summary.evaluated << " evaluated, " << summary.saturated_skipped
        << " saturated skipped, " << summary.underflow_skipped << " underflow skipped, "
        << summary.failed << " failed, " << summary.exceedances << " exceedances (|z| > "
        << format_double(kExceedanceZ) << ")";
    return out.str();
}

} // namespace servrisk::cli
