#pragma once

// File emitters for experiment results: per-instance CSV, histogram CSV,
// JSON summary and an SVG bar chart. The format_* functions build the exact
// bytes; the emit_* functions write them and report I/O failures with the
// offending path.

#include <filesystem>
#include <string>
#include <string_view>

#include "cvhnn/harness.hpp"

namespace cvhnn {

/// instance_id,n,structure,sign_a,sign_b,threshold_mode,period,transient,steps_executed
/// period and transient are -1 for unresolved runs.
std::string format_rows_csv(const ExperimentResult& result);

/// period,count,probability; a trailing period -1 row holds unresolved runs.
std::string format_histogram_csv(const Histogram& h);

/// Inverse of format_histogram_csv (probabilities are ignored).
Histogram parse_histogram_csv(std::string_view text);

/// Fixed key order: spec, counts, unresolved, trials, mode_period,
/// mode_probability, mean_period, stddev_period.
std::string format_json_summary(const ExperimentSpec& spec, const Histogram& h);

struct SvgOptions {
    std::uint64_t max_period = 64;  // longer periods share one "> max" bar
    std::string title;
};

/// One bar per observed period, plus "> max" and "∞" (unresolved) bars when
/// non-empty. Bar heights are probabilities and therefore sum to 1.
std::string format_svg_histogram(const Histogram& h, const SvgOptions& options = {});

/// Short label for the structure column, e.g. "rect:symmetric:antisymmetric".
std::string structure_label(const StructureFamily& f);

void write_text_file(const std::filesystem::path& path, std::string_view content);
std::string read_text_file(const std::filesystem::path& path);

void emit_rows_csv(const ExperimentResult& result, const std::filesystem::path& path);
void emit_histogram_csv(const Histogram& h, const std::filesystem::path& path);
void emit_json_summary(const ExperimentSpec& spec, const Histogram& h, const std::filesystem::path& path);
void emit_svg_histogram(const Histogram& h, const std::filesystem::path& path, const SvgOptions& options = {});

}  // namespace cvhnn
