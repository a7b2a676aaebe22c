#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fuchs/cache.hpp"
#include "fuchs/config.hpp"
#include "fuchs/fuchs.hpp"
#include "fuchs/io.hpp"

namespace {

using namespace fuchs;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitDepthCap = 3;
constexpr int kExitNoCrossing = 4;

struct PhaseTimer {
    std::vector<std::pair<std::string, double>> timings;
    std::chrono::steady_clock::time_point mark = std::chrono::steady_clock::now();

    void lap(const std::string& name) {
        const auto now = std::chrono::steady_clock::now();
        timings.emplace_back(name,
                             std::chrono::duration<double, std::milli>(now - mark).count());
        mark = now;
    }
};

std::string utc_now() {
    const std::time_t t = std::time(nullptr);
    char buf[32];
    std::tm tm_utc;
    gmtime_r(&t, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

std::filesystem::path out_path(const ExperimentConfig& cfg, const std::string& name) {
    return std::filesystem::path(cfg.out_dir) / (cfg.prefix + "-" + name);
}

void emit(RunManifest& manifest, const ExperimentConfig& cfg, const std::string& name,
          const std::string& content) {
    const auto path = out_path(cfg, name);
    write_file(path, content);
    manifest.output_digests.emplace_back(path.filename().string(), Sha256::hex(content));
}

void finish(RunManifest& manifest, const ExperimentConfig& cfg, PhaseTimer& timer) {
    manifest.wall_clock_utc = utc_now();
    manifest.timings_ms = timer.timings;
    const auto path = out_path(cfg, "manifest.json");
    write_file(path, manifest.to_manifest_json().dump(2) + "\n");
    std::cout << "wrote " << path.string() << "\n";
}

/// Attaches --flag overrides mirroring the config JSON fields.
void attach_config_flags(CLI::App* cmd, ExperimentConfig& cfg, std::string& config_path) {
    cmd->add_option("--config", config_path, "JSON config file; flags override its fields");
    cmd->add_option("--preset", cfg.preset_name, "preset name");
    cmd->add_option("--depth", cfg.depth, "class word depth");
    cmd->add_option("--conj-depth", cfg.conj_depth, "conjugator depth (-1: same as depth)");
    cmd->add_option("--tol", cfg.tol, "clustering tolerance");
    cmd->add_option("--point-tol", cfg.point_tol, "crossing point dedup tolerance");
    cmd->add_option("--grid-min", cfg.grid.min, "sweep grid minimum");
    cmd->add_option("--grid-max", cfg.grid.max, "sweep grid maximum");
    cmd->add_option("--grid-step", cfg.grid.step, "sweep grid step");
    cmd->add_option("--w1", cfg.pair_w1, "first word of the sweep pair");
    cmd->add_option("--w2", cfg.pair_w2, "second word of the sweep pair");
    cmd->add_option("--conj", cfg.pair_conj, "conjugator applied to the second word");
    cmd->add_flag("--include-self,!--no-include-self", cfg.include_self,
                  "include self-crossing configurations");
    cmd->add_option("--compare-preset", cfg.compare_preset, "paired run preset (angles)");
    cmd->add_option("--subject", cfg.subject_mode, "isoaxial subject: self|conjugate|subgroup");
    cmd->add_option("--subject-conjugator", cfg.subject_conjugator, "conjugating word");
    cmd->add_option("--subgroup-word", cfg.subgroup_words, "subgroup generator words");
    cmd->add_option("--depth2", cfg.depth2, "isoaxial second depth (-1: 3*depth)");
    cmd->add_option("--out-dir", cfg.out_dir, "output directory");
    cmd->add_option("--prefix", cfg.prefix, "output file prefix");
    cmd->add_option("--workers", cfg.workers, "worker threads");
    cmd->add_option("--seed", cfg.seed, "random seed recorded in outputs");
    cmd->add_option("--cache-dir", cfg.cache_dir, "ball cache directory");
    cmd->add_flag("--unsafe-depth", cfg.unsafe_depth, "lift the depth caps");
}

ExperimentConfig load_config(const std::string& config_path, const ExperimentConfig& overrides,
                             const CLI::App* cmd) {
    if (config_path.empty()) return overrides;
    std::ifstream in(config_path);
    if (!in) throw config_error("cannot read config file " + config_path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw config_error(std::string("config parse error: ") + e.what());
    }
    ExperimentConfig cfg = config_from_json(doc);
    // Flags that were actually given win over the file, one to one.
    auto seen = [&](const std::string& flag) { return cmd->count(flag) > 0; };
    if (seen("--preset")) cfg.preset_name = overrides.preset_name;
    if (seen("--depth")) cfg.depth = overrides.depth;
    if (seen("--conj-depth")) cfg.conj_depth = overrides.conj_depth;
    if (seen("--tol")) cfg.tol = overrides.tol;
    if (seen("--point-tol")) cfg.point_tol = overrides.point_tol;
    if (seen("--grid-min")) cfg.grid.min = overrides.grid.min;
    if (seen("--grid-max")) cfg.grid.max = overrides.grid.max;
    if (seen("--grid-step")) cfg.grid.step = overrides.grid.step;
    if (seen("--w1")) cfg.pair_w1 = overrides.pair_w1;
    if (seen("--w2")) cfg.pair_w2 = overrides.pair_w2;
    if (seen("--conj")) cfg.pair_conj = overrides.pair_conj;
    if (seen("--include-self") || seen("--no-include-self"))
        cfg.include_self = overrides.include_self;
    if (seen("--compare-preset")) cfg.compare_preset = overrides.compare_preset;
    if (seen("--subject")) cfg.subject_mode = overrides.subject_mode;
    if (seen("--subject-conjugator")) cfg.subject_conjugator = overrides.subject_conjugator;
    if (seen("--subgroup-word")) cfg.subgroup_words = overrides.subgroup_words;
    if (seen("--depth2")) cfg.depth2 = overrides.depth2;
    if (seen("--out-dir")) cfg.out_dir = overrides.out_dir;
    if (seen("--prefix")) cfg.prefix = overrides.prefix;
    if (seen("--workers")) cfg.workers = overrides.workers;
    if (seen("--seed")) cfg.seed = overrides.seed;
    if (seen("--cache-dir")) cfg.cache_dir = overrides.cache_dir;
    if (seen("--unsafe-depth")) cfg.unsafe_depth = overrides.unsafe_depth;
    return cfg;
}

Representation subject_representation(const ExperimentConfig& cfg, const Representation& rep) {
    if (cfg.subject_mode == "self") return rep;
    if (cfg.subject_mode == "conjugate") {
        if (!valid_word(cfg.subject_conjugator, rep.rank()))
            throw config_error("bad conjugating word");
        std::vector<Isometry> gens;
        const Isometry g = evaluate(rep, cfg.subject_conjugator);
        for (int i = 0; i < rep.rank(); ++i) gens.push_back(conjugate(g, rep.generator(i)));
        return Representation(gens, rep.label() + "~conj(" + cfg.subject_conjugator + ")");
    }
    if (cfg.subject_mode == "subgroup") {
        std::string label = rep.label() + "~subgroup(";
        for (size_t i = 0; i < cfg.subgroup_words.size(); ++i) {
            if (!valid_word(cfg.subgroup_words[i], rep.rank()) ||
                freely_reduce(cfg.subgroup_words[i]).empty())
                throw config_error("bad subgroup word");
            label += (i ? "," : "") + cfg.subgroup_words[i];
        }
        label += ")";
        const Representation sub = word_subgroup(rep, cfg.subgroup_words, label);
        if (!sub.generators_hyperbolic())
            throw config_error("subgroup generator words must evaluate to hyperbolic isometries");
        return sub;
    }
    throw config_error("unknown isoaxial subject mode: " + cfg.subject_mode);
}

int cmd_presets(bool as_json) {
    if (as_json) {
        nlohmann::json j;
        j["presets"] = preset_catalogue();
        nlohmann::json detail = nlohmann::json::object();
        const Representation mod = preset_modular_torus();
        detail["modular_torus"] = {
            {"trace_a", mod.generator(0).trace()},
            {"trace_b", mod.generator(1).trace()},
            {"commutator_abs_trace",
             std::abs(detail::commutator_trace(mod.generator(0), mod.generator(1)))},
            {"jorgensen_ok", mod.jorgensen_spot_check()}};
        j["detail"] = detail;
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "available presets:\n";
    for (const std::string& name : preset_catalogue()) std::cout << "  " << name << "\n";
    const Representation mod = preset_modular_torus();
    std::cout << "modular_torus: tr a = " << mod.generator(0).trace()
              << ", tr b = " << mod.generator(1).trace()
              << ", |tr [a,b]| = "
              << std::abs(detail::commutator_trace(mod.generator(0), mod.generator(1)))
              << ", jorgensen " << (mod.jorgensen_spot_check() ? "ok" : "VIOLATED") << "\n";
    return kExitOk;
}

int cmd_spectrum(const ExperimentConfig& cfg) {
    PhaseTimer timer;
    const Representation rep = preset(cfg.preset_name);
    if (!cfg.cache_dir.empty() || std::getenv(kCacheEnvVar))
        cached_ball(cfg.depth, rep.rank(), cache_directory(cfg.cache_dir), cfg.unsafe_depth);
    timer.lap("setup");
    const std::vector<LengthEntry> spectrum =
        length_spectrum(rep, cfg.depth, cfg.tol, cfg.workers, cfg.unsafe_depth);
    timer.lap("enumerate");
    RunManifest manifest{"spectrum", cfg, {}, {}, {}, {}};
    manifest.results["entries"] = spectrum.size();
    if (!spectrum.empty()) {
        manifest.results["shortest_length"] = spectrum.front().length;
        manifest.results["shortest_multiplicity"] = spectrum.front().multiplicity;
    }
    emit(manifest, cfg, "spectrum.csv", length_spectrum_csv(cfg, spectrum));
    emit(manifest, cfg, "spectrum.json", length_spectrum_json(cfg, spectrum).dump(2) + "\n");
    timer.lap("write");
    finish(manifest, cfg, timer);
    std::cout << "entries: " << spectrum.size() << "\n";
    return kExitOk;
}

int cmd_angles(const ExperimentConfig& cfg) {
    PhaseTimer timer;
    const Representation rep = preset(cfg.preset_name);
    AngleSpectrumOptions opt;
    opt.tol = cfg.tol;
    opt.include_self = cfg.include_self;
    opt.workers = cfg.workers;
    opt.unsafe_depth = cfg.unsafe_depth;
    const std::vector<AngleEntry> spectrum =
        angle_spectrum(rep, cfg.depth, cfg.effective_conj_depth(), opt);
    timer.lap("enumerate");

    const MultiplicityProfile profile = multiplicity_profile(spectrum);
    RunManifest manifest{"angles", cfg, {}, {}, {}, {}};
    manifest.results["entries"] = spectrum.size();
    manifest.results["max_multiplicity"] = profile.max_multiplicity;
    manifest.results["multiplicity_one"] = profile.multiplicity_one;
    emit(manifest, cfg, "angles.csv", angle_spectrum_csv(cfg, spectrum));
    emit(manifest, cfg, "angles.json", angle_spectrum_json(cfg, spectrum).dump(2) + "\n");
    std::cout << "entries: " << spectrum.size()
              << " max multiplicity: " << profile.max_multiplicity << "\n";

    if (!cfg.compare_preset.empty()) {
        const Representation other = preset(cfg.compare_preset);
        const std::vector<AngleEntry> other_spectrum =
            angle_spectrum(other, cfg.depth, cfg.effective_conj_depth(), opt);
        const MultiplicityProfile other_profile = multiplicity_profile(other_spectrum);
        timer.lap("paired-run");
        ExperimentConfig paired = cfg;
        paired.preset_name = cfg.compare_preset;
        emit(manifest, cfg, "angles-compare.csv", angle_spectrum_csv(paired, other_spectrum));
        emit(manifest, cfg, "angles-compare.json",
             angle_spectrum_json(paired, other_spectrum).dump(2) + "\n");
        nlohmann::json contrast;
        contrast["preset"] = cfg.preset_name;
        contrast["compare_preset"] = cfg.compare_preset;
        contrast["max_multiplicity"] = profile.max_multiplicity;
        contrast["compare_max_multiplicity"] = other_profile.max_multiplicity;
        manifest.results["compare_max_multiplicity"] = other_profile.max_multiplicity;
        emit(manifest, cfg, "angles-contrast.json", contrast.dump(2) + "\n");
        std::cout << "compare max multiplicity: " << other_profile.max_multiplicity << "\n";
    }
    timer.lap("write");
    finish(manifest, cfg, timer);
    return kExitOk;
}

int cmd_twist_sweep(const ExperimentConfig& cfg) {
    PhaseTimer timer;
    const Representation rep = preset(cfg.preset_name);
    TwistFamily fam(rep);
    if (!valid_word(cfg.pair_w1, rep.rank()) || !valid_word(cfg.pair_w2, rep.rank()) ||
        !valid_word(cfg.pair_conj, rep.rank()))
        throw config_error("sweep words must use letters a..,A..");
    const SweepReport report =
        angle_sweep(fam, cfg.pair_w1, cfg.pair_w2, cfg.pair_conj, cfg.grid, cfg.workers);
    timer.lap("sweep");

    // Pass rules: the simple pair must run the full range with monotone
    // tails; any other pair stays bounded away from pi.
    const bool simple_pair = canonical_unoriented(cfg.pair_w1) == "a" ||
                             canonical_unoriented(cfg.pair_w2) == "a";
    nlohmann::json checks;
    bool pass = true;
    if (simple_pair) {
        const double at_min = report.angles.front();
        const double at_max = report.angles.back();
        const bool low_ok = report.crossed.front() && at_min < 0.1;
        const bool high_ok = report.crossed.back() && at_max > M_PI - 0.1;
        bool tails = true;
        for (size_t i = 0; i + 1 < report.grid.size(); ++i) {
            if (report.grid[i] >= report.grid.back() - 10.0 ||
                report.grid[i + 1] <= report.grid.front() + 10.0) {
                if (!report.crossed[i] || !report.crossed[i + 1] ||
                    report.angles[i + 1] <= report.angles[i])
                    tails = false;
            }
        }
        checks["angle_at_grid_min"] = at_min;
        checks["angle_at_grid_max"] = at_max;
        checks["low_extreme_below_0.1"] = low_ok;
        checks["high_extreme_above_pi-0.1"] = high_ok;
        checks["monotone_tails"] = tails;
        pass = low_ok && high_ok && tails;
    } else {
        const double delta = M_PI - report.sup;
        checks["sup"] = report.sup;
        checks["delta"] = delta;
        checks["delta_positive"] = delta > 0.0;
        checks["delta2"] = report.delta2;
        checks["tan_half_sup_bound"] =
            std::tan(report.sup / 2.0) <= 2.0 * (2.0 / std::max(report.delta2, 1e-12));
        pass = delta > 0.0 && checks["tan_half_sup_bound"].get<bool>();
    }
    checks["pass"] = pass;

    RunManifest manifest{"twist-sweep", cfg, {}, {}, {}, {}};
    manifest.results["pass"] = pass;
    manifest.results["sup"] = report.sup;
    manifest.results["inf"] = report.inf;
    emit(manifest, cfg, "sweep.csv", sweep_csv(cfg, report));
    nlohmann::json j = sweep_json(cfg, report);
    j["checks"] = checks;
    j["pair"] = {{"w1", cfg.pair_w1}, {"w2", cfg.pair_w2}, {"conj", cfg.pair_conj}};
    emit(manifest, cfg, "sweep.json", j.dump(2) + "\n");
    timer.lap("write");
    finish(manifest, cfg, timer);
    std::cout << (pass ? "pass" : "fail") << "\n";
    return kExitOk;
}

int cmd_isoaxial(const ExperimentConfig& cfg) {
    PhaseTimer timer;
    const Representation rep = preset(cfg.preset_name);
    const Representation subject = subject_representation(cfg, rep);
    const std::string cache = cache_directory(cfg.cache_dir);
    const int d1 = cfg.depth, d2 = cfg.effective_depth2();
    const IsoaxialReport report = isoaxial_compare(
        cached_axes_set(subject, d1, cache, cfg.tol, cfg.workers, cfg.unsafe_depth),
        cached_axes_set(rep, d1, cache, cfg.tol, cfg.workers, cfg.unsafe_depth),
        cached_axes_set(subject, d2, cache, cfg.tol, cfg.workers, cfg.unsafe_depth),
        cached_axes_set(rep, d2, cache, cfg.tol, cfg.workers, cfg.unsafe_depth), cfg.tol);
    timer.lap("compare");

    CsvWriter csv(cfg, {"check", "result"});
    csv.append_record({"subject", subject.label()});
    csv.append_record({"reference", rep.label()});
    csv.append_record({"depth_subject", std::to_string(cfg.depth)});
    csv.append_record({"depth_reference", std::to_string(cfg.effective_depth2())});
    csv.append_record({"subject_in_reference", report.forward ? "yes" : "no"});
    csv.append_record({"reference_in_subject", report.backward ? "yes" : "no"});
    csv.append_record({"verdict", verdict_name(report.verdict)});

    nlohmann::json j = json_header(cfg);
    j["kind"] = "isoaxial";
    j["subject"] = subject.label();
    j["reference"] = rep.label();
    j["forward"] = report.forward;
    j["backward"] = report.backward;
    j["verdict"] = verdict_name(report.verdict);

    RunManifest manifest{"isoaxial", cfg, {}, {}, {}, {}};
    manifest.results["verdict"] = verdict_name(report.verdict);
    emit(manifest, cfg, "isoaxial.csv", csv.str());
    emit(manifest, cfg, "isoaxial.json", j.dump(2) + "\n");
    timer.lap("write");
    finish(manifest, cfg, timer);
    std::cout << verdict_name(report.verdict) << "\n";
    return kExitOk;
}

int cmd_collar_check(const ExperimentConfig& cfg) {
    PhaseTimer timer;
    const Representation rep = preset(cfg.preset_name);
    const CollarReport report =
        collar_check(rep, cfg.depth, cfg.effective_conj_depth(), cfg.workers);
    timer.lap("check");

    CsvWriter csv(cfg, {"quantity", "value"});
    csv.append_record({"crossing_pairs", std::to_string(report.crossing_pairs)});
    csv.append_record({"min_product", fmt_double(report.min_product)});
    csv.append_record({"min_pair", report.min_class1 + "," + report.min_class2});
    csv.append_record({"all_hold", report.all_hold ? "yes" : "no"});

    nlohmann::json j = json_header(cfg);
    j["kind"] = "collar_check";
    j["crossing_pairs"] = report.crossing_pairs;
    j["min_product"] = report.min_product;
    j["min_pair"] = {report.min_class1, report.min_class2};
    j["all_hold"] = report.all_hold;

    RunManifest manifest{"collar-check", cfg, {}, {}, {}, {}};
    manifest.results["min_product"] = report.min_product;
    manifest.results["all_hold"] = report.all_hold;
    emit(manifest, cfg, "collar.csv", csv.str());
    emit(manifest, cfg, "collar.json", j.dump(2) + "\n");
    timer.lap("write");
    finish(manifest, cfg, timer);
    std::cout << "min product " << report.min_product << " over " << report.crossing_pairs
              << " crossing pairs\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"geodesic spectra and twist flows of rank-2 Fuchsian groups"};
    app.require_subcommand(1);

    bool presets_json = false;
    CLI::App* presets_cmd = app.add_subcommand("presets", "list the representation presets");
    presets_cmd->add_flag("--json", presets_json, "machine-readable listing");

    struct SubSpec {
        const char* name;
        const char* help;
        const char* default_prefix;
        int (*run)(const ExperimentConfig&);
    };
    const std::vector<SubSpec> subs = {
        {"spectrum", "truncated length spectrum", "spectrum", cmd_spectrum},
        {"angles", "truncated angle spectrum with multiplicities", "angles", cmd_angles},
        {"twist-sweep", "crossing angle along the twist orbit", "twist", cmd_twist_sweep},
        {"isoaxial", "axes-set comparison", "isoaxial", cmd_isoaxial},
        {"collar-check", "collar inequality over crossing pairs", "collar", cmd_collar_check},
    };

    struct SubState {
        CLI::App* cmd;
        ExperimentConfig cfg;
        std::string config_path;
        const SubSpec* spec;
    };
    std::vector<SubState> states;
    states.reserve(subs.size());
    for (const SubSpec& spec : subs) {
        SubState st;
        st.cmd = app.add_subcommand(spec.name, spec.help);
        st.spec = &spec;
        states.push_back(st);
    }
    for (SubState& st : states) attach_config_flags(st.cmd, st.cfg, st.config_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (presets_cmd->parsed()) return cmd_presets(presets_json);
        for (SubState& st : states) {
            if (!st.cmd->parsed()) continue;
            ExperimentConfig cfg = load_config(st.config_path, st.cfg, st.cmd);
            if (cfg.prefix.empty()) cfg.prefix = st.spec->default_prefix;
            cfg.validate();
            return st.spec->run(cfg);
        }
        std::cerr << "no subcommand\n";
        return kExitConfig;
    } catch (const depth_cap_exceeded& e) {
        std::cerr << "depth cap: " << e.what() << "\n";
        return kExitDepthCap;
    } catch (const no_crossing_at_base& e) {
        std::cerr << "no crossing: " << e.what() << "\n";
        return kExitNoCrossing;
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const unknown_preset& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
