#pragma once

#include <cstdio>
#include <string>

#include "json.hpp"

#include "kemeny/ensembles.hpp"
#include "kemeny/rational.hpp"

namespace kemeny {

/// Fixed-width-free decimal with 12 significant digits, for CSV cells and
/// JSON decimal fields.
inline std::string decimal12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

/// A rational serializes losslessly as "p/q" next to a readable decimal.
inline nlohmann::json rational_json(const Rational& r) {
    return {{"exact", fraction_string(r)}, {"decimal", decimal_string(r)}};
}

inline std::string experiment_csv(const ExperimentReport& report) {
    std::string out;
    out += "# kind: " + report.kind + "\n";
    out += "# seed: " + std::to_string(report.seed) + "\n";
    if (report.kind == "gnp") out += "# p: " + decimal12(report.p) + "\n";
    out += "# mode: " + std::string(tree_mode_name(report.mode)) + "\n";
    out += "# paradox: " + std::string(paradox_check_name(report.paradox)) + "\n";
    for (const auto& note : report.notes) out += "# note: " + note + "\n";
    out += "n,samples,pendant_twin_count,pendant_twin_fraction,paradoxical_count,paradoxical_fraction,"
           "mean_appearance,paradox_mode,sample_mode\n";
    for (const auto& row : report.rows) {
        out += std::to_string(row.n) + "," + std::to_string(row.samples) + "," +
               std::to_string(row.with_pendant_twins) + "," + decimal12(row.fraction_with_pendant_twins) + "," +
               std::to_string(row.paradoxical) + "," + decimal12(row.fraction_paradoxical) + "," +
               decimal12(row.mean_appearance) + "," + row.paradox_mode + "," + row.sample_mode + "\n";
    }
    return out;
}

inline nlohmann::json experiment_json(const ExperimentReport& report, bool include_details) {
    nlohmann::json j{
        {"kind", report.kind},
        {"seed", report.seed},
        {"mode", tree_mode_name(report.mode)},
        {"paradox", paradox_check_name(report.paradox)},
        {"notes", report.notes},
    };
    if (report.kind == "gnp") j["p"] = report.p;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : report.rows) {
        j["rows"].push_back({
            {"n", row.n},
            {"samples", row.samples},
            {"pendant_twin_count", row.with_pendant_twins},
            {"pendant_twin_fraction", row.fraction_with_pendant_twins},
            {"paradoxical_count", row.paradoxical},
            {"paradoxical_fraction", row.fraction_paradoxical},
            {"appearance_total", row.appearance_total},
            {"mean_appearance", row.mean_appearance},
            {"paradox_mode", row.paradox_mode},
            {"sample_mode", row.sample_mode},
        });
    }
    if (include_details) {
        j["details"] = nlohmann::json::array();
        for (const auto& d : report.details) {
            nlohmann::json row{
                {"n", d.n},
                {"index", d.index},
                {"edges", d.edges},
                {"has_pendant_twins", d.has_pendant_twins},
                {"paradoxical", d.paradoxical},
                {"appearance", d.appearance},
            };
            if (d.witness) {
                row["witness"] = {d.witness->first, d.witness->second};
                row["witness_delta"] = d.delta;
            }
            j["details"].push_back(row);
        }
    }
    return j;
}

} // namespace kemeny
