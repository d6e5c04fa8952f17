#pragma once

// Published modal cycle lengths for each experiment cell (fig1a ... fig10i).

#include <optional>
#include <string>
#include <vector>

#include "cvhnn/config.hpp"
#include "cvhnn/harness.hpp"

namespace cvhnn {

struct ReferenceCell {
    std::string id;  // e.g. "fig3a"
    StructureFamily family;
    ThresholdMode threshold = ThresholdMode::Zero;
    std::optional<std::uint64_t> period;   // reported most-probable cycle length
    std::optional<double> probability;     // reported probability of that length
};

/// All cells in figure/letter order.
const std::vector<ReferenceCell>& reference_cells();

/// Cells whose id starts with `figure` ("fig3" selects fig3a..fig3i); "all"
/// selects every cell. Throws std::invalid_argument when nothing matches.
std::vector<ReferenceCell> reference_figure(std::string_view figure);

const ReferenceCell& reference_cell(std::string_view id);

/// Config for a cell with the given trial count and seed.
ExperimentConfig reference_config(const ReferenceCell& cell, std::uint64_t trials, std::uint64_t seed);

}  // namespace cvhnn
