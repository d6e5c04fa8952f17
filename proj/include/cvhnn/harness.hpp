#pragma once

// Monte-Carlo census of parallel-mode cycle lengths over random structured
// networks. Instance k of an experiment draws everything from rng stream
// (master_seed, k), so results do not depend on execution order or the number
// of worker threads.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cvhnn/core.hpp"
#include "cvhnn/cycle.hpp"
#include "cvhnn/structure.hpp"

namespace cvhnn {

enum class NamedFamily { Hermitian, SkewHermitian, BraidedHermitian, BraidedSkewHermitian };

/// M = A + B i with A and B drawn independently by gen_real_constrained.
struct RectGrid {
    SymmetryKind sym_a = SymmetryKind::Arbitrary;
    SignKind sign_a = SignKind::Arbitrary;
    SymmetryKind sym_b = SymmetryKind::Arbitrary;
    SignKind sign_b = SignKind::Arbitrary;

    friend bool operator==(const RectGrid&, const RectGrid&) = default;
};

/// M_ij = G_ij exp(i P_ij).
struct PolarGrid {
    SymmetryKind sym_g = SymmetryKind::Arbitrary;
    SymmetryKind sym_p = SymmetryKind::Arbitrary;

    friend bool operator==(const PolarGrid&, const PolarGrid&) = default;
};

using StructureFamily = std::variant<NamedFamily, RectGrid, PolarGrid>;

/// "hermitian", "skew-hermitian", "braided-hermitian", "braided-skew-hermitian",
/// "rect" or "polar".
std::string family_name(const StructureFamily& f);
NamedFamily parse_named_family(std::string_view s);

struct ExperimentSpec {
    StructureFamily family = NamedFamily::Hermitian;
    ThresholdMode threshold = ThresholdMode::Zero;
    std::uint64_t trials = 2000;
    std::size_t n_min = 5;
    std::size_t n_max = 70;
    std::uint64_t cap = kDefaultCycleCap;
    std::uint64_t master_seed = 0;

    /// Throws std::invalid_argument unless 1 <= n_min <= n_max <= 512,
    /// trials >= 1 and cap >= 1.
    void validate() const;

    friend bool operator==(const ExperimentSpec&, const ExperimentSpec&) = default;
};

inline constexpr std::size_t kMaxNeurons = 512;

/// Everything random about one instance.
struct Instance {
    Network network;
    StateVector initial;
};

/// Draw order on stream (master_seed, k): n, weight matrix (A then B, or G then
/// P, or the generator's own order), thresholds, then two fair bits per neuron
/// for the initial state (real sign first).
Instance generate_instance(const ExperimentSpec& spec, std::uint64_t k);

/// Draws the weight matrix only, for a given n.
ComplexMatrix generate_weights(const StructureFamily& family, std::size_t n, SeededRng& rng);

struct InstanceResult {
    std::uint64_t instance_id = 0;
    std::size_t n = 0;
    CycleReport report;
};

/// generate_instance followed by detect_cycle_brent with spec.cap.
InstanceResult run_instance(const ExperimentSpec& spec, std::uint64_t k);

/// Cycle-length counts for one experiment cell. Statistics over resolved runs
/// only; probabilities are relative to all trials.
class Histogram {
public:
    void add(const CycleReport& r);
    void add_period(std::uint64_t period, std::uint64_t count = 1);
    void add_unresolved(std::uint64_t count = 1);
    void merge(const Histogram& other);

    [[nodiscard]] const std::map<std::uint64_t, std::uint64_t>& counts() const { return counts_; }
    [[nodiscard]] std::uint64_t unresolved() const { return unresolved_; }
    [[nodiscard]] std::uint64_t trials() const { return trials_; }
    [[nodiscard]] std::uint64_t resolved() const { return trials_ - unresolved_; }
    [[nodiscard]] std::uint64_t count(std::uint64_t period) const;
    [[nodiscard]] double probability(std::uint64_t period) const;

    /// Most frequent period; ties go to the smaller period. Empty when no run resolved.
    [[nodiscard]] std::optional<std::uint64_t> mode_period() const;
    [[nodiscard]] double mode_probability() const;
    [[nodiscard]] double mean_period() const;
    /// Population standard deviation.
    [[nodiscard]] double stddev_period() const;

    friend bool operator==(const Histogram&, const Histogram&) = default;

private:
    std::map<std::uint64_t, std::uint64_t> counts_;
    std::uint64_t unresolved_ = 0;
    std::uint64_t trials_ = 0;
};

struct ExperimentResult {
    ExperimentSpec spec;
    Histogram histogram;
    std::vector<InstanceResult> rows;  // ordered by instance_id
};

/// Runs every instance on `jobs` worker threads (0 = hardware concurrency).
ExperimentResult run_experiment(const ExperimentSpec& spec, unsigned jobs = 1);

}  // namespace cvhnn
