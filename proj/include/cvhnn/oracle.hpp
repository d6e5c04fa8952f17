#pragma once

// Exhaustive ground truth for small networks: the parallel-mode functional
// graph over all 4^n states and its complete cycle inventory.

#include <cstdint>
#include <functional>
#include <vector>

#include "cvhnn/core.hpp"
#include "cvhnn/cycle.hpp"

namespace cvhnn {

/// Integer in [0, 4^n): neuron k occupies bits 2k (real part negative) and
/// 2k+1 (imaginary part negative). Identical to word 0 of pack_state.
using StateCode = std::uint64_t;

inline constexpr std::size_t kOracleMaxNeurons = 10;

StateCode encode_state(const StateVector& s);
StateVector decode_state(StateCode code, std::size_t n);

struct CycleInfo {
    std::uint64_t period = 0;
    StateCode representative = 0;  // smallest code on the cycle
    std::uint64_t basin_size = 0;  // states whose orbit ends on this cycle, cycle included
};

/// Cycles sorted by representative. attractor_of[code] indexes `cycles`.
struct CycleInventory {
    std::size_t n = 0;
    std::uint64_t total_states = 0;
    std::vector<CycleInfo> cycles;
    std::vector<std::uint32_t> attractor_of;

    [[nodiscard]] std::uint64_t period_from(StateCode code) const { return cycles[attractor_of[code]].period; }
};

/// Builds successor[code] for every state, extracts all cycles by path
/// colouring and sizes each basin by reverse BFS. `jobs` threads share the
/// successor construction.
CycleInventory functional_graph_cycles(const Network& net, unsigned jobs = 1);

using CycleDetector = std::function<CycleReport(const Network&, const StateVector&, std::uint64_t)>;

/// True iff, from every start state, the detector resolves and reports the
/// period of the cycle the functional graph says that state falls into.
bool exhaustive_agreement(const Network& net, std::uint64_t cap);
bool exhaustive_agreement(const Network& net, std::uint64_t cap, const CycleDetector& detector);
bool exhaustive_agreement(const Network& net, const CycleInventory& inventory, std::uint64_t cap,
                          const CycleDetector& detector);

}  // namespace cvhnn
