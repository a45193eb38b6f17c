#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "wavemask/core_optics.hpp"
#include "wavemask/rand_stats.hpp"

namespace wavemask {

inline constexpr const char* kToolVersion = "0.1.0";

// Invalid or unusable configuration (including unwritable output directory).
// The CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ExperimentKind { MtfDist, TheoryCheck, ReconSweep };

struct AberrationGrid {
    std::string type;
    std::vector<double> strengths;
};

// Trial counts for the theorem-verification suite. Defaults are the pinned
// acceptance scales; smaller values make quick smoke runs.
struct TheoryParams {
    std::vector<int> periods = {8, 16, 64};
    int trials_ks = 10000;
    int trials_expectation = 1000000;
    int trials_second_moment = 100000;
    int trials_lemma = 100000;
    // "theorem3" (default) or "corollary": which printed p=0.5 second-moment
    // constant the check asserts. "corollary" is the negative control; the
    // report always records both against the Monte Carlo estimate.
    std::string second_moment_formula = "theorem3";
};

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::MtfDist;
    int period = 64;     // 1-D N for mtf_dist / theory_check
    int grid_side = 256; // 2-D grid for recon_sweep
    std::vector<AberrationGrid> aberrations;
    MaskSpec mask;
    int trials = 10000;
    std::vector<double> sigmas;
    std::uint64_t master_seed = 0;
    std::string out_dir;
    std::string scene_path; // empty -> built-in synthetic scene
    std::optional<double> nsr_override;
    double psf_noise_scale = 1.0;
    double pupil_diameter_frac = 0.5;
    int raw_cap = 10000;
    TheoryParams theory;
};

// Parses and validates; errors name the offending field.
ExperimentConfig parse_config(const nlohmann::json& doc);
ExperimentConfig load_config_file(const std::filesystem::path& path);
nlohmann::ordered_json config_to_json(const ExperimentConfig& config);

// FNV-1a 64 over the canonical serialized form; changes iff the config does.
std::string config_hash(const ExperimentConfig& config);

struct CellRecord {
    std::string id;
    std::vector<std::string> files; // relative to out_dir
    std::vector<StreamKey> streams;
};

struct RunManifest {
    std::string config_hash;
    std::string version;
    bool all_passed = true; // theory_check aggregate; always true otherwise
    std::vector<CellRecord> cells;
    std::vector<std::string> files; // run-level outputs, relative to out_dir
};

// Experiment families. Each writes its outputs plus manifest.json under
// config.out_dir; outputs are byte-identical for identical (config, seed).
RunManifest run_mtf_dist(const ExperimentConfig& config);
RunManifest run_theory_check(const ExperimentConfig& config);
RunManifest run_recon_sweep(const ExperimentConfig& config);

// Dispatch on config.kind.
RunManifest run_experiment(const ExperimentConfig& config);

} // namespace wavemask
