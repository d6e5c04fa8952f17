#pragma once

// Randomised and exhaustive checks of the convergence theorems and of the
// simulator's internal consistency. Used by `cvhnn verify` and by the
// acceptance suite.

#include <cstdint>
#include <string>
#include <vector>

#include "cvhnn/dynamics.hpp"
#include "cvhnn/harness.hpp"

namespace cvhnn {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Network k of a check: stream (seed, k), n uniform on [n_min, n_max].
Network sample_network(const StructureFamily& family, ThresholdMode threshold, std::size_t n_min, std::size_t n_max,
                       std::uint64_t seed, std::uint64_t k, StateVector* initial = nullptr);

/// Hermitian M with non-negative diagonal (thresholds alternate zero/uniform):
/// serial sweeps reach a fixed point within max_sweeps and every state change
/// lowers E_S by more than 1e-12.
CheckResult check_serial_hermitian(std::uint64_t count, std::size_t n_min, std::size_t n_max,
                                   std::size_t max_sweeps, std::uint64_t seed, ScanOrder order = ScanOrder::Cyclic);

/// Hermitian M: every parallel period is 1 or 2 and the pair energy never rises.
CheckResult check_parallel_hermitian(std::uint64_t count, std::size_t n_min, std::size_t n_max, std::uint64_t cap,
                                     std::uint64_t seed);

/// Over all 4^n start states of `count` networks, every cycle period divides `divisor`.
CheckResult check_exhaustive_divisor(const StructureFamily& family, ThresholdMode threshold, std::uint64_t count,
                                     std::size_t n, std::uint64_t divisor, std::uint64_t seed);

/// Brent and hashed detectors both match the functional graph from every start state.
CheckResult check_oracle_agreement(const StructureFamily& family, ThresholdMode threshold, std::uint64_t count,
                                   std::size_t n, std::uint64_t cap, std::uint64_t seed);

/// Brent and hashed detectors agree on (period, transient) whenever both resolve.
CheckResult check_detector_agreement(std::uint64_t count, std::size_t n_min, std::size_t n_max, std::uint64_t cap,
                                     std::uint64_t seed);

/// Complex parallel trajectory == real trajectory of realify(M) on [Re; Im].
CheckResult check_realification(std::uint64_t count, std::size_t n_min, std::size_t n_max, std::size_t steps,
                                std::uint64_t seed);

/// E_P(s, s) == E_S(s) exactly.
CheckResult check_energy_identity(std::uint64_t count, std::size_t n_max, std::uint64_t seed);

/// The full suite at a scale that runs in seconds.
std::vector<CheckResult> run_verification(std::uint64_t seed);

}  // namespace cvhnn
