#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fuchs/angle_spectrum.hpp"
#include "fuchs/axes.hpp"
#include "fuchs/config.hpp"
#include "fuchs/spectrum.hpp"
#include "fuchs/sweep.hpp"

namespace fuchs {

/// Shortest-exact double formatting; reruns must be byte-identical.
inline std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// CSV writer in the RFC 4180 style: a leading block of '#' metadata lines
/// carrying the config digest and tolerances, then a header record and
/// quoted-where-needed data records.
class CsvWriter {
public:
    CsvWriter(const ExperimentConfig& cfg, std::vector<std::string> columns)
        : columns_(std::move(columns)) {
        body_ += "# artifact_version=" + std::string(kVersion) + "\n";
        body_ += "# config_digest=" + config_digest(cfg) + "\n";
        body_ += "# tol=" + fmt_double(cfg.tol) + " point_tol=" + fmt_double(cfg.point_tol) +
                 "\n";
        body_ += "# seed=" + std::to_string(cfg.seed) + "\n";
        append_record(columns_);
    }

    void append_record(const std::vector<std::string>& fields) {
        for (size_t i = 0; i < fields.size(); ++i) {
            if (i) body_ += ',';
            body_ += quote(fields[i]);
        }
        body_ += "\r\n";
    }

    const std::string& str() const { return body_; }

private:
    static std::string quote(const std::string& field) {
        if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
        std::string out = "\"";
        for (char ch : field) {
            if (ch == '"') out += "\"\"";
            else out.push_back(ch);
        }
        out += '"';
        return out;
    }

    std::vector<std::string> columns_;
    std::string body_;
};

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw config_error("cannot write " + path.string());
    out << content;
}

inline nlohmann::json json_header(const ExperimentConfig& cfg) {
    nlohmann::json j;
    j["artifact_version"] = kVersion;
    j["config_digest"] = config_digest(cfg);
    j["tol"] = cfg.tol;
    j["point_tol"] = cfg.point_tol;
    j["seed"] = cfg.seed;
    return j;
}

// ---- length spectrum -------------------------------------------------------

inline std::string length_spectrum_csv(const ExperimentConfig& cfg,
                                       const std::vector<LengthEntry>& spectrum) {
    CsvWriter csv(cfg, {"length", "multiplicity"});
    for (const LengthEntry& e : spectrum)
        csv.append_record({fmt_double(e.length), std::to_string(e.multiplicity)});
    return csv.str();
}

inline nlohmann::json length_spectrum_json(const ExperimentConfig& cfg,
                                           const std::vector<LengthEntry>& spectrum) {
    nlohmann::json j = json_header(cfg);
    j["kind"] = "length_spectrum";
    nlohmann::json entries = nlohmann::json::array();
    for (const LengthEntry& e : spectrum) {
        entries.push_back({{"length", e.length},
                           {"multiplicity", e.multiplicity},
                           {"witnesses", e.witnesses}});
    }
    j["entries"] = entries;
    return j;
}

// ---- angle spectrum --------------------------------------------------------

inline std::string angle_spectrum_csv(const ExperimentConfig& cfg,
                                      const std::vector<AngleEntry>& spectrum) {
    CsvWriter csv(cfg, {"angle", "multiplicity"});
    for (const AngleEntry& e : spectrum)
        csv.append_record({fmt_double(e.angle), std::to_string(e.multiplicity)});
    return csv.str();
}

inline nlohmann::json angle_spectrum_json(const ExperimentConfig& cfg,
                                          const std::vector<AngleEntry>& spectrum) {
    nlohmann::json j = json_header(cfg);
    j["kind"] = "angle_spectrum";
    j["conventions"] = {
        {"pairs", "unordered, both classes primitive"},
        {"angle", "counter-clockwise from the axis of the lesser class, in (0,pi)"},
        {"self_crossings", "acute representative"},
        {"multiplicity_unit", "group orbit of (crossing point, class pair)"}};
    nlohmann::json entries = nlohmann::json::array();
    for (const AngleEntry& e : spectrum) {
        nlohmann::json witnesses = nlohmann::json::array();
        for (const AngleWitness& w : e.witnesses) {
            witnesses.push_back({{"class1", w.class1},
                                 {"class2", w.class2},
                                 {"point", {w.point_x, w.point_y}},
                                 {"angle", w.angle}});
        }
        entries.push_back({{"angle", e.angle},
                           {"multiplicity", e.multiplicity},
                           {"witnesses", witnesses}});
    }
    j["entries"] = entries;
    nlohmann::json histogram = nlohmann::json::object();
    const MultiplicityProfile profile = multiplicity_profile(spectrum);
    for (const auto& [mult, count] : profile.histogram)
        histogram[std::to_string(mult)] = count;
    j["histogram"] = histogram;
    j["max_multiplicity"] = profile.max_multiplicity;
    j["multiplicity_one"] = profile.multiplicity_one;
    return j;
}

// ---- sweeps ----------------------------------------------------------------

inline std::string sweep_csv(const ExperimentConfig& cfg, const SweepReport& report) {
    CsvWriter csv(cfg, {"t", "angle", "crossed"});
    for (size_t i = 0; i < report.grid.size(); ++i) {
        csv.append_record({fmt_double(report.grid[i]),
                           report.crossed[i] ? fmt_double(report.angles[i]) : "",
                           report.crossed[i] ? "1" : "0"});
    }
    return csv.str();
}

inline nlohmann::json sweep_json(const ExperimentConfig& cfg, const SweepReport& report) {
    nlohmann::json j = json_header(cfg);
    j["kind"] = "angle_sweep";
    j["grid"] = report.grid;
    nlohmann::json angles = nlohmann::json::array();
    for (size_t i = 0; i < report.grid.size(); ++i) {
        if (report.crossed[i]) angles.push_back(report.angles[i]);
        else angles.push_back(nullptr);
    }
    j["angles"] = angles;
    j["sup"] = report.sup;
    j["inf"] = report.inf;
    j["lost"] = report.lost;
    j["delta2"] = report.delta2;
    j["delta4"] = report.delta4;
    j["four_edge_type"] = report.four_edge_type;
    j["limit_gap_low"] = report.limit_gap_low;
    j["limit_gap_high"] = report.limit_gap_high;
    return j;
}

inline std::string separation_csv(const ExperimentConfig& cfg, const std::vector<double>& grid,
                                  const std::vector<double>& distances) {
    CsvWriter csv(cfg, {"t", "distance"});
    for (size_t i = 0; i < grid.size(); ++i)
        csv.append_record({fmt_double(grid[i]), fmt_double(distances[i])});
    return csv.str();
}

} // namespace fuchs
