#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fuchs/ball.hpp"
#include "fuchs/errors.hpp"
#include "fuchs/sha256.hpp"
#include "fuchs/sweep.hpp"
#include "fuchs/version.hpp"

namespace fuchs {

/// One experiment: preset, truncation depths, tolerances, grid, output
/// location, worker count and seed. Serialized verbatim into every
/// manifest so a run can be reproduced from its outputs.
struct ExperimentConfig {
    std::string preset_name = "modular_torus";
    int depth = 4;
    int conj_depth = -1;              // -1: defaults to depth
    double tol = 1e-9;
    double point_tol = 1e-6;
    GridSpec grid;
    std::string pair_w1 = "a";
    std::string pair_w2 = "b";
    std::string pair_conj;
    bool include_self = true;
    std::string compare_preset;       // optional paired run (angles)
    std::string subject_mode = "self";            // isoaxial: self | conjugate | subgroup
    std::string subject_conjugator = "ab";        //   conjugate mode
    std::vector<std::string> subgroup_words = {"aa", "b", "abA"};
    int depth2 = -1;                  // isoaxial second depth; -1: 3 * depth
    std::string out_dir = ".";
    std::string prefix;               // defaults to the command name
    int workers = 1;
    std::uint64_t seed = 20250809;
    std::string cache_dir;
    bool unsafe_depth = false;

    int effective_conj_depth() const { return conj_depth < 0 ? depth : conj_depth; }
    int effective_depth2() const { return depth2 < 0 ? 3 * depth : depth2; }

    void validate() const {
        if (preset_name.empty()) throw config_error("preset must not be empty");
        if (depth < 1) throw config_error("depth must be >= 1");
        if (workers < 1) throw config_error("workers must be >= 1");
        if (!(grid.step > 0.0)) throw config_error("grid step must be positive");
        if (!(grid.max >= grid.min)) throw config_error("grid max must be >= min");
        if (!(tol > 0.0) || !(point_tol > 0.0)) throw config_error("tolerances must be positive");
        if (!unsafe_depth) {
            if (depth > kWordDepthCap) throw depth_cap_exceeded("word depth exceeds cap");
            if (effective_conj_depth() > kConjDepthCap)
                throw depth_cap_exceeded("conjugator depth exceeds cap");
            if (effective_depth2() > 3 * kWordDepthCap)
                throw depth_cap_exceeded("isoaxial depth2 exceeds cap");
        }
    }
};

inline nlohmann::json to_json(const ExperimentConfig& cfg) {
    nlohmann::json j;
    j["preset"] = cfg.preset_name;
    j["depth"] = cfg.depth;
    j["conj_depth"] = cfg.conj_depth;
    j["tol"] = cfg.tol;
    j["point_tol"] = cfg.point_tol;
    j["grid"] = {{"min", cfg.grid.min}, {"max", cfg.grid.max}, {"step", cfg.grid.step}};
    j["pair"] = {{"w1", cfg.pair_w1}, {"w2", cfg.pair_w2}, {"conj", cfg.pair_conj}};
    j["include_self"] = cfg.include_self;
    j["compare_preset"] = cfg.compare_preset;
    j["subject"] = {{"mode", cfg.subject_mode},
                    {"conjugator", cfg.subject_conjugator},
                    {"subgroup_words", cfg.subgroup_words},
                    {"depth2", cfg.depth2}};
    j["out_dir"] = cfg.out_dir;
    j["prefix"] = cfg.prefix;
    j["workers"] = cfg.workers;
    j["seed"] = cfg.seed;
    j["cache_dir"] = cfg.cache_dir;
    j["unsafe_depth"] = cfg.unsafe_depth;
    return j;
}

inline ExperimentConfig config_from_json(const nlohmann::json& j) {
    ExperimentConfig cfg;
    try {
        cfg.preset_name = j.value("preset", cfg.preset_name);
        cfg.depth = j.value("depth", cfg.depth);
        cfg.conj_depth = j.value("conj_depth", cfg.conj_depth);
        cfg.tol = j.value("tol", cfg.tol);
        cfg.point_tol = j.value("point_tol", cfg.point_tol);
        if (j.contains("grid")) {
            cfg.grid.min = j["grid"].value("min", cfg.grid.min);
            cfg.grid.max = j["grid"].value("max", cfg.grid.max);
            cfg.grid.step = j["grid"].value("step", cfg.grid.step);
        }
        if (j.contains("pair")) {
            cfg.pair_w1 = j["pair"].value("w1", cfg.pair_w1);
            cfg.pair_w2 = j["pair"].value("w2", cfg.pair_w2);
            cfg.pair_conj = j["pair"].value("conj", cfg.pair_conj);
        }
        cfg.include_self = j.value("include_self", cfg.include_self);
        cfg.compare_preset = j.value("compare_preset", cfg.compare_preset);
        if (j.contains("subject")) {
            cfg.subject_mode = j["subject"].value("mode", cfg.subject_mode);
            cfg.subject_conjugator = j["subject"].value("conjugator", cfg.subject_conjugator);
            if (j["subject"].contains("subgroup_words"))
                cfg.subgroup_words = j["subject"]["subgroup_words"].get<std::vector<std::string>>();
            cfg.depth2 = j["subject"].value("depth2", cfg.depth2);
        }
        cfg.out_dir = j.value("out_dir", cfg.out_dir);
        cfg.prefix = j.value("prefix", cfg.prefix);
        cfg.workers = j.value("workers", cfg.workers);
        cfg.seed = j.value("seed", cfg.seed);
        cfg.cache_dir = j.value("cache_dir", cfg.cache_dir);
        cfg.unsafe_depth = j.value("unsafe_depth", cfg.unsafe_depth);
    } catch (const nlohmann::json::exception& e) {
        throw config_error(std::string("malformed config: ") + e.what());
    }
    return cfg;
}

/// The digest covers the fields that determine output content. Execution
/// details (paths, worker count, cache location) are excluded so reruns in
/// other directories or with other parallelism remain byte-identical.
inline std::string config_digest(const ExperimentConfig& cfg) {
    nlohmann::json j = to_json(cfg);
    j.erase("out_dir");
    j.erase("prefix");
    j.erase("workers");
    j.erase("cache_dir");
    return Sha256::hex(j.dump());
}

/// Reproducibility record written next to the primary outputs. Timings and
/// the wall clock are the only fields allowed to differ between reruns.
struct RunManifest {
    std::string command;
    ExperimentConfig config;
    std::vector<std::pair<std::string, std::string>> output_digests;
    std::vector<std::pair<std::string, double>> timings_ms;
    std::string wall_clock_utc;
    nlohmann::json results = nlohmann::json::object();  // headline numbers per command

    nlohmann::json to_manifest_json() const {
        nlohmann::json j;
        j["artifact_version"] = kVersion;
        j["command"] = command;
        j["config"] = to_json(config);
        j["config_digest"] = config_digest(config);
        nlohmann::json outs = nlohmann::json::object();
        for (const auto& [name, digest] : output_digests) outs[name] = "sha256:" + digest;
        j["outputs"] = outs;
        nlohmann::json times = nlohmann::json::object();
        for (const auto& [name, ms] : timings_ms) times[name] = ms;
        j["timings_ms"] = times;
        j["wall_clock_utc"] = wall_clock_utc;
        j["results"] = results;
        return j;
    }
};

} // namespace fuchs
