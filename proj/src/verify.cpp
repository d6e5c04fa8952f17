#include "cvhnn/verify.hpp"

#include <map>
#include <sstream>

#include "cvhnn/cycle.hpp"
#include "cvhnn/oracle.hpp"
#include "cvhnn/report.hpp"
#include "cvhnn/structure.hpp"

namespace cvhnn {

namespace {

const StructureFamily kHermitian = NamedFamily::Hermitian;

ThresholdMode alternating(std::uint64_t k) { return k % 2 ? ThresholdMode::UniformScaled : ThresholdMode::Zero; }

CheckResult make(std::string name, std::uint64_t failures, const std::string& detail) {
    return {std::move(name), failures == 0, detail};
}

}  // namespace

Network sample_network(const StructureFamily& family, ThresholdMode threshold, std::size_t n_min, std::size_t n_max,
                       std::uint64_t seed, std::uint64_t k, StateVector* initial) {
    ExperimentSpec spec;
    spec.family = family;
    spec.threshold = threshold;
    spec.n_min = n_min;
    spec.n_max = n_max;
    spec.master_seed = seed;
    Instance inst = generate_instance(spec, k);
    if (initial) *initial = std::move(inst.initial);
    return std::move(inst.network);
}

CheckResult check_serial_hermitian(std::uint64_t count, std::size_t n_min, std::size_t n_max,
                                   std::size_t max_sweeps, std::uint64_t seed, ScanOrder order) {
    std::uint64_t unconverged = 0, violations = 0, max_used = 0;
    for (std::uint64_t k = 0; k < count; ++k) {
        StateVector s0;
        const Network net = sample_network(kHermitian, alternating(k), n_min, n_max, seed, k, &s0);
        const SerialSchedule schedule{order, seed ^ k};
        const Trajectory traj = run_serial(net, s0, schedule, max_sweeps);
        const SerialRun run = run_serial_to_fixpoint(net, s0, schedule, max_sweeps);
        if (!run.converged || step_parallel(net, run.final_state) != run.final_state) ++unconverged;
        max_used = std::max<std::uint64_t>(max_used, run.sweeps_used);
        violations += check_energy_monotone(net, traj, EnergyCheck::SerialEnergy).size();
    }
    std::ostringstream d;
    d << count << " networks, n in [" << n_min << ", " << n_max << "]: " << unconverged << " unconverged, "
      << violations << " energy-descent violations, max sweeps " << max_used;
    return make("hermitian-serial-fixed-point", unconverged + violations, d.str());
}

CheckResult check_parallel_hermitian(std::uint64_t count, std::size_t n_min, std::size_t n_max, std::uint64_t cap,
                                     std::uint64_t seed) {
    std::uint64_t bad_period = 0, violations = 0;
    for (std::uint64_t k = 0; k < count; ++k) {
        StateVector s0;
        const Network net = sample_network(kHermitian, alternating(k), n_min, n_max, seed, k, &s0);
        const CycleReport r = detect_cycle_hashed(net, s0, cap);
        if (!r.resolved() || *r.period > 2) {
            ++bad_period;
            continue;
        }
        const Trajectory traj = run_parallel(net, s0, r.transient + 2 * *r.period + 1);
        violations += check_energy_monotone(net, traj, EnergyCheck::ParallelPairEnergy).size();
    }
    std::ostringstream d;
    d << count << " networks: " << bad_period << " with period outside {1,2}, " << violations
      << " pair-energy increases";
    return make("hermitian-parallel-period-le-2", bad_period + violations, d.str());
}

CheckResult check_exhaustive_divisor(const StructureFamily& family, ThresholdMode threshold, std::uint64_t count,
                                     std::size_t n, std::uint64_t divisor, std::uint64_t seed) {
    std::uint64_t bad = 0;
    std::map<std::uint64_t, std::uint64_t> periods;
    for (std::uint64_t k = 0; k < count; ++k) {
        const Network net = sample_network(family, threshold, n, n, seed, k);
        const CycleInventory inv = functional_graph_cycles(net);
        std::uint64_t basin_total = 0;
        for (const auto& c : inv.cycles) {
            periods[c.period] += c.basin_size;
            basin_total += c.basin_size;
            if (divisor % c.period != 0) ++bad;
        }
        if (basin_total != inv.total_states) ++bad;
    }
    std::ostringstream d;
    d << count << " networks, n = " << n << ", start states by period:";
    for (auto [p, c] : periods) d << " " << p << ":" << c;
    return make(structure_label(family) + "-exhaustive-divides-" + std::to_string(divisor), bad, d.str());
}

CheckResult check_oracle_agreement(const StructureFamily& family, ThresholdMode threshold, std::uint64_t count,
                                   std::size_t n, std::uint64_t cap, std::uint64_t seed) {
    std::uint64_t disagreements = 0;
    for (std::uint64_t k = 0; k < count; ++k) {
        const Network net = sample_network(family, threshold, n, n, seed, k);
        const CycleInventory inv = functional_graph_cycles(net);
        if (!exhaustive_agreement(net, inv, cap, detect_cycle_brent)) ++disagreements;
        if (!exhaustive_agreement(net, inv, cap, detect_cycle_hashed)) ++disagreements;
    }
    std::ostringstream d;
    d << count << " networks, n = " << n << ", threshold " << to_string(threshold) << ": " << disagreements
      << " disagreements";
    return make(structure_label(family) + "-oracle-agreement", disagreements, d.str());
}

CheckResult check_detector_agreement(std::uint64_t count, std::size_t n_min, std::size_t n_max, std::uint64_t cap,
                                     std::uint64_t seed) {
    const StructureFamily families[] = {
        NamedFamily::Hermitian,
        NamedFamily::SkewHermitian,
        NamedFamily::BraidedHermitian,
        NamedFamily::BraidedSkewHermitian,
        RectGrid{},
        PolarGrid{},
    };
    std::uint64_t disagreements = 0, both_resolved = 0;
    for (std::uint64_t k = 0; k < count; ++k) {
        StateVector s0;
        const auto& family = families[k % std::size(families)];
        const Network net = sample_network(family, alternating(k / std::size(families)), n_min, n_max, seed, k, &s0);
        const CycleReport a = detect_cycle_brent(net, s0, cap);
        const CycleReport b = detect_cycle_hashed(net, s0, cap);
        if (a.resolved() && b.resolved()) {
            ++both_resolved;
            if (a.period != b.period || a.transient != b.transient) ++disagreements;
        }
    }
    std::ostringstream d;
    d << count << " instances, " << both_resolved << " resolved by both, " << disagreements << " disagreements";
    return make("brent-hashed-agreement", disagreements, d.str());
}

CheckResult check_realification(std::uint64_t count, std::size_t n_min, std::size_t n_max, std::size_t steps,
                                std::uint64_t seed) {
    std::uint64_t mismatches = 0;
    for (std::uint64_t k = 0; k < count; ++k) {
        StateVector s0;
        // Realification covers the threshold-free network; use an unstructured M.
        const Network net = sample_network(RectGrid{}, ThresholdMode::Zero, n_min, n_max, seed, k, &s0);
        const std::size_t n = net.size();
        const RealMatrix w = realify(net.weights());
        std::vector<int> v(2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = s0[i].re();
            v[i + n] = s0[i].im();
        }
        StateVector s = s0;
        for (std::size_t t = 0; t < steps; ++t) {
            s = step_parallel(net, s);
            v = step_real_parallel(w, v);
            bool same = true;
            for (std::size_t i = 0; i < n; ++i) same = same && v[i] == s[i].re() && v[i + n] == s[i].im();
            if (!same) {
                ++mismatches;
                break;
            }
        }
    }
    std::ostringstream d;
    d << count << " networks, " << steps << " steps: " << mismatches << " diverging trajectories";
    return make("realification-equivalence", mismatches, d.str());
}

CheckResult check_energy_identity(std::uint64_t count, std::size_t n_max, std::uint64_t seed) {
    std::uint64_t mismatches = 0;
    for (std::uint64_t k = 0; k < count; ++k) {
        StateVector s;
        const Network net = sample_network(RectGrid{}, ThresholdMode::UniformScaled, 1, n_max, seed, k, &s);
        if (energy_parallel(net, s, s) != energy_serial(net, s)) ++mismatches;
    }
    std::ostringstream d;
    d << count << " random (network, state) pairs: " << mismatches << " with E_P(s,s) != E_S(s)";
    return make("energy-identity", mismatches, d.str());
}

std::vector<CheckResult> run_verification(std::uint64_t seed) {
    std::vector<CheckResult> out;
    out.push_back(check_energy_identity(500, 30, seed));
    out.push_back(check_serial_hermitian(200, 5, 30, 10'000, seed));
    out.push_back(check_serial_hermitian(100, 5, 30, 10'000, seed + 1, ScanOrder::RandomPermutation));
    out.push_back(check_parallel_hermitian(200, 5, 30, kDefaultCycleCap, seed));
    out.push_back(check_exhaustive_divisor(NamedFamily::Hermitian, ThresholdMode::UniformScaled, 20, 4, 2, seed));
    out.push_back(check_exhaustive_divisor(NamedFamily::SkewHermitian, ThresholdMode::Zero, 20, 5, 4, seed));
    out.push_back(check_exhaustive_divisor(NamedFamily::BraidedHermitian, ThresholdMode::Zero, 20, 5, 8, seed));
    out.push_back(check_exhaustive_divisor(NamedFamily::BraidedSkewHermitian, ThresholdMode::Zero, 20, 5, 8, seed));
    out.push_back(check_oracle_agreement(RectGrid{}, ThresholdMode::UniformScaled, 10, 4, kDefaultCycleCap, seed));
    out.push_back(check_detector_agreement(600, 5, 30, kDefaultCycleCap, seed));
    out.push_back(check_realification(50, 2, 12, 64, seed));
    return out;
}

}  // namespace cvhnn
