#pragma once

// Experiment configuration files (TOML) and the JSON network file format.
//
// Experiment config, one experiment per file:
//
//   name = "fig3a"
//   structure = "rect"            # hermitian | skew-hermitian | braided-hermitian
//                                 # | braided-skew-hermitian | rect | polar
//   sym_a = "symmetric"           # rect only: sym_a, sign_a, sym_b, sign_b
//   sign_a = "positive"
//   sym_b = "symmetric"
//   sign_b = "positive"
//   threshold = "zero"            # zero | uniform
//   trials = 2000
//   n_range = [5, 70]
//   cap = 100000
//   seed = 7                      # optional
//
//   [reference]                   # optional expected modal outcome
//   period = 8
//   probability = 0.95
//
// Network file: {"re": [[...]], "im": [[...]], "t_re": [...], "t_im": [...]},
// thresholds optional (zero when absent).

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "cvhnn/harness.hpp"

namespace cvhnn {

struct ExperimentConfig {
    std::string name;
    ExperimentSpec spec;
    std::optional<std::uint64_t> seed;  // spec.master_seed is only meaningful when set
    std::optional<std::uint64_t> reference_period;
    std::optional<double> reference_probability;

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Throws std::invalid_argument with a description of the offending key.
ExperimentConfig parse_experiment_config(std::string_view toml_text, std::string_view origin = "config");
ExperimentConfig load_experiment_config(const std::filesystem::path& path);
std::string to_toml(const ExperimentConfig& config);

/// Structure-family flags as they appear on the command line and in configs.
struct FamilyFlags {
    std::string structure = "hermitian";
    std::string sym_a = "arbitrary", sign_a = "arbitrary";
    std::string sym_b = "arbitrary", sign_b = "arbitrary";
    std::string sym_g = "arbitrary", sym_p = "arbitrary";
};

StructureFamily make_family(const FamilyFlags& flags);

Network parse_network_json(std::string_view json_text);
Network load_network_json(const std::filesystem::path& path);

/// Comma-separated neuron states such as "+1+i,-1+i,1-i".
StateVector parse_state(std::string_view text);

}  // namespace cvhnn
