#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cvhnn/core.hpp"

namespace cvhnn {

enum class ScanOrder { Cyclic, RandomPermutation };

/// Visit order for serial sweeps. RandomPermutation draws a fresh
/// permutation per sweep from stream (seed, 0).
struct SerialSchedule {
    ScanOrder order = ScanOrder::Cyclic;
    std::uint64_t seed = 0;
};

struct UpdateMode {
    enum class Kind { Parallel, Serial } kind = Kind::Parallel;
    SerialSchedule schedule{};

    static UpdateMode parallel() { return {}; }
    static UpdateMode serial(SerialSchedule s = {}) { return {Kind::Serial, s}; }
};

/// states[0] is the initial state; each later entry is one step of `mode`
/// applied to its predecessor (one neuron for serial, all for parallel).
struct Trajectory {
    std::vector<StateVector> states;
    UpdateMode mode;
};

/// All neurons updated from the same input state.
StateVector step_parallel(const Network& net, const StateVector& s);

/// Allocation-free form of step_parallel; `out` must already have size n and
/// must not alias `s`.
void step_parallel_into(const Network& net, const StateVector& s, StateVector& out);

/// Neuron i replaced by split_sign(local_field(net, s, i)).
StateVector step_serial(const Network& net, StateVector s, std::size_t i);

struct SweepResult {
    StateVector state;
    bool changed = false;
};

/// Applies step_serial for each index of `order` (a permutation of 0..n-1).
SweepResult sweep_serial(const Network& net, StateVector s, std::span<const std::size_t> order);

/// Up to max_steps parallel steps; the trajectory holds max_steps + 1 states.
Trajectory run_parallel(const Network& net, const StateVector& s0, std::size_t max_steps);

struct SerialRun {
    StateVector final_state;
    std::size_t sweeps_used = 0;
    bool converged = false;
};

/// Sweeps until one full sweep changes nothing, or max_sweeps is exhausted.
SerialRun run_serial_to_fixpoint(const Network& net, StateVector s0, SerialSchedule schedule,
                                 std::size_t max_sweeps);

/// Same schedule as run_serial_to_fixpoint, but records the state after
/// every single-neuron step (including steps that change nothing).
Trajectory run_serial(const Network& net, const StateVector& s0, SerialSchedule schedule,
                      std::size_t max_sweeps);

/// One synchronous step of a real bipolar network: out = sign(W v).
std::vector<int> step_real_parallel(const RealMatrix& w, std::span<const int> v);

}  // namespace cvhnn
