#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cvhnn/core.hpp"
#include "cvhnn/dynamics.hpp"

namespace cvhnn {

inline constexpr std::uint64_t kDefaultCycleCap = 100'000;

/// Outcome of following a parallel orbit. When resolved, state(transient +
/// period) == state(transient) and period is minimal. steps_executed counts
/// step_parallel evaluations spent searching; an unresolved report has
/// steps_executed == cap and transient == 0.
struct CycleReport {
    std::optional<std::uint64_t> period;
    std::uint64_t transient = 0;
    std::uint64_t steps_executed = 0;

    [[nodiscard]] bool resolved() const { return period.has_value(); }
};

/// 2 bits per neuron (bit 2k: real part negative, bit 2k+1: imaginary part
/// negative), 32 neurons per word, little-endian word order.
using PackedState = std::vector<std::uint64_t>;

PackedState pack_state(const StateVector& s);
StateVector unpack_state(const PackedState& p, std::size_t n);

/// Records every visited state; the first revisit yields transient and period.
CycleReport detect_cycle_hashed(const Network& net, const StateVector& s0, std::uint64_t cap);

/// Brent's power-of-two tortoise/hare search; constant memory. The cap bounds
/// the period-finding phase.
CycleReport detect_cycle_brent(const Network& net, const StateVector& s0, std::uint64_t cap);

enum class EnergyCheck { SerialEnergy, ParallelPairEnergy };

inline constexpr double kEnergyTolerance = 1e-12;

/// Indices t where the energy fails to descend.
///
/// SerialEnergy: states[t+1] != states[t] and E_S(t+1) >= E_S(t) - tol.
/// ParallelPairEnergy: t >= 1 and E_P(S(t+1), S(t)) > E_P(S(t), S(t-1)) + tol.
std::vector<std::size_t> check_energy_monotone(const Network& net, const Trajectory& trajectory,
                                               EnergyCheck mode);

}  // namespace cvhnn
