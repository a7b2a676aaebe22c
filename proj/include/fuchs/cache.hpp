#pragma once

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <json.hpp>

#include "fuchs/axes.hpp"
#include "fuchs/ball.hpp"
#include "fuchs/version.hpp"

namespace fuchs {

inline constexpr const char* kCacheEnvVar = "FUCHS_CACHE_DIR";
inline constexpr int kBallCacheFormat = 1;

/// Resolves the enumeration cache directory: the environment variable wins
/// over the configured path; empty means caching is off.
inline std::string cache_directory(const std::string& configured) {
    if (const char* env = std::getenv(kCacheEnvVar)) return env;
    return configured;
}

inline std::string ball_cache_name(int rank, int depth) {
    return "ball-r" + std::to_string(rank) + "-d" + std::to_string(depth) + ".json";
}

inline void save_ball_cache(const std::string& dir, const Ball& ball) {
    if (dir.empty()) return;
    std::filesystem::create_directories(dir);
    nlohmann::json doc;
    doc["format"] = "fuchs-ball-cache";
    doc["format_version"] = kBallCacheFormat;
    doc["artifact_version"] = kVersion;
    doc["rank"] = ball.rank;
    doc["depth"] = ball.depth;
    doc["words"] = ball.words;
    std::ofstream out(std::filesystem::path(dir) / ball_cache_name(ball.rank, ball.depth));
    out << doc.dump();
}

inline std::optional<Ball> load_ball_cache(const std::string& dir, int rank, int depth) {
    if (dir.empty()) return std::nullopt;
    const auto path = std::filesystem::path(dir) / ball_cache_name(rank, depth);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    nlohmann::json doc;
    try {
        in >> doc;
        if (doc.value("format", "") != "fuchs-ball-cache") return std::nullopt;
        if (doc.value("format_version", 0) != kBallCacheFormat) return std::nullopt;
        if (doc.value("rank", -1) != rank || doc.value("depth", -1) != depth)
            return std::nullopt;
        Ball ball{rank, depth, doc.at("words").get<std::vector<Word>>()};
        if (ball.words.size() != expected_ball_size(depth, rank)) return std::nullopt;
        return ball;
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;
    }
}

/// Cached wrapper around enumerate_ball.
inline Ball cached_ball(int depth, int rank, const std::string& dir, bool unsafe_depth = false) {
    if (auto hit = load_ball_cache(dir, rank, depth)) return *hit;
    Ball ball = enumerate_ball(depth, rank, unsafe_depth);
    save_ball_cache(dir, ball);
    return ball;
}

// ---- axes-set cache, keyed by (representation label, depth) ----------------

inline std::string axes_cache_name(const std::string& label, int depth) {
    std::string slug;
    for (char ch : label)
        slug += (std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_');
    return "axes-" + slug + "-d" + std::to_string(depth) + ".json";
}

inline void save_axes_cache(const std::string& dir, const std::string& label,
                            const AxesSet& set) {
    if (dir.empty()) return;
    std::filesystem::create_directories(dir);
    nlohmann::json doc;
    doc["format"] = "fuchs-axes-cache";
    doc["format_version"] = kBallCacheFormat;
    doc["artifact_version"] = kVersion;
    doc["label"] = label;
    doc["depth"] = set.depth;
    nlohmann::json axes = nlohmann::json::array();
    for (const Geodesic& geo : set.axes) {
        nlohmann::json pair = nlohmann::json::array();
        pair.push_back(geo.p_repelling.is_infinity() ? nlohmann::json()
                                                     : nlohmann::json(geo.p_repelling.value()));
        pair.push_back(geo.p_attracting.is_infinity() ? nlohmann::json()
                                                      : nlohmann::json(geo.p_attracting.value()));
        axes.push_back(pair);
    }
    doc["axes"] = axes;
    std::ofstream out(std::filesystem::path(dir) / axes_cache_name(label, set.depth));
    out << doc.dump();
}

inline std::optional<AxesSet> load_axes_cache(const std::string& dir, const std::string& label,
                                              int depth) {
    if (dir.empty()) return std::nullopt;
    std::ifstream in(std::filesystem::path(dir) / axes_cache_name(label, depth));
    if (!in) return std::nullopt;
    try {
        nlohmann::json doc;
        in >> doc;
        if (doc.value("format", "") != "fuchs-axes-cache") return std::nullopt;
        if (doc.value("format_version", 0) != kBallCacheFormat) return std::nullopt;
        if (doc.value("label", "") != label || doc.value("depth", -1) != depth)
            return std::nullopt;
        AxesSet set{depth, {}};
        for (const auto& pair : doc.at("axes")) {
            const BoundaryPoint rep =
                pair.at(0).is_null() ? BoundaryPoint::infinity()
                                     : BoundaryPoint(pair.at(0).get<double>());
            const BoundaryPoint att =
                pair.at(1).is_null() ? BoundaryPoint::infinity()
                                     : BoundaryPoint(pair.at(1).get<double>());
            set.axes.emplace_back(rep, att);
        }
        return set;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

inline AxesSet cached_axes_set(const Representation& rep, int depth, const std::string& dir,
                               double tol = kCmpTol, int workers = 1,
                               bool unsafe_depth = false) {
    if (auto hit = load_axes_cache(dir, rep.label(), depth)) return *hit;
    AxesSet set = axes_set(rep, depth, tol, workers, unsafe_depth);
    save_axes_cache(dir, rep.label(), set);
    return set;
}

} // namespace fuchs
