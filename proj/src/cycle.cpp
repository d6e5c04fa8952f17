#include "cvhnn/cycle.hpp"

#include <stdexcept>
#include <unordered_map>

namespace cvhnn {

namespace {

struct PackedHash {
    std::size_t operator()(const PackedState& p) const noexcept {
        std::uint64_t h = 0xCBF29CE484222325ULL;
        for (std::uint64_t w : p) {
            h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

void require_cap(std::uint64_t cap) {
    if (cap == 0) throw std::invalid_argument("cycle detection: cap must be >= 1");
}

}  // namespace

PackedState pack_state(const StateVector& s) {
    PackedState p((s.size() + 31) / 32, 0);
    for (std::size_t k = 0; k < s.size(); ++k)
        p[k / 32] |= static_cast<std::uint64_t>(s[k].code()) << (2 * (k % 32));
    return p;
}

StateVector unpack_state(const PackedState& p, std::size_t n) {
    if (p.size() != (n + 31) / 32) throw std::invalid_argument("unpack_state: word count does not match n");
    std::vector<QuadState> out(n);
    for (std::size_t k = 0; k < n; ++k)
        out[k] = QuadState::from_code(static_cast<std::uint8_t>((p[k / 32] >> (2 * (k % 32))) & 3u));
    return StateVector(std::move(out));
}

CycleReport detect_cycle_hashed(const Network& net, const StateVector& s0, std::uint64_t cap) {
    require_cap(cap);
    if (s0.size() != net.size()) throw std::invalid_argument("detect_cycle_hashed: dimension mismatch");
    std::unordered_map<PackedState, std::uint64_t, PackedHash> seen;
    seen.emplace(pack_state(s0), 0);
    StateVector cur = s0, next(net.size());
    for (std::uint64_t t = 1; t <= cap; ++t) {
        step_parallel_into(net, cur, next);
        std::swap(cur, next);
        auto [it, inserted] = seen.emplace(pack_state(cur), t);
        if (!inserted) return {t - it->second, it->second, t};
    }
    return {std::nullopt, 0, cap};
}

CycleReport detect_cycle_brent(const Network& net, const StateVector& s0, std::uint64_t cap) {
    require_cap(cap);
    if (s0.size() != net.size()) throw std::invalid_argument("detect_cycle_brent: dimension mismatch");
    const std::size_t n = net.size();
    StateVector tortoise = s0, hare(n), scratch(n);
    step_parallel_into(net, s0, hare);
    std::uint64_t steps = 1, power = 1, period = 1;
    while (tortoise != hare) {
        if (steps >= cap) return {std::nullopt, 0, cap};
        if (power == period) {
            tortoise = hare;
            power *= 2;
            period = 0;
        }
        step_parallel_into(net, hare, scratch);
        std::swap(hare, scratch);
        ++steps;
        ++period;
    }

    // Transient: start both at s0 with the hare `period` steps ahead.
    tortoise = s0;
    hare = s0;
    for (std::uint64_t k = 0; k < period; ++k) {
        step_parallel_into(net, hare, scratch);
        std::swap(hare, scratch);
    }
    std::uint64_t transient = 0;
    while (tortoise != hare) {
        step_parallel_into(net, tortoise, scratch);
        std::swap(tortoise, scratch);
        step_parallel_into(net, hare, scratch);
        std::swap(hare, scratch);
        ++transient;
    }
    return {period, transient, steps};
}

std::vector<std::size_t> check_energy_monotone(const Network& net, const Trajectory& trajectory,
                                               EnergyCheck mode) {
    const auto& st = trajectory.states;
    if (st.empty()) throw std::invalid_argument("check_energy_monotone: empty trajectory");
    std::vector<std::size_t> violations;
    if (mode == EnergyCheck::SerialEnergy) {
        double prev = energy_serial(net, st[0]);
        for (std::size_t t = 0; t + 1 < st.size(); ++t) {
            const double cur = energy_serial(net, st[t + 1]);
            if (st[t + 1] != st[t] && cur >= prev - kEnergyTolerance) violations.push_back(t);
            prev = cur;
        }
    } else {
        if (st.size() < 3) return violations;
        double prev = energy_parallel(net, st[1], st[0]);
        for (std::size_t t = 1; t + 1 < st.size(); ++t) {
            const double cur = energy_parallel(net, st[t + 1], st[t]);
            if (cur > prev + kEnergyTolerance) violations.push_back(t);
            prev = cur;
        }
    }
    return violations;
}

}  // namespace cvhnn
