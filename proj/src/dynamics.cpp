#include "cvhnn/dynamics.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "cvhnn/rng.hpp"

namespace cvhnn {

namespace {

void require_size(const Network& net, const StateVector& s, const char* what) {
    if (s.size() != net.size())
        throw std::invalid_argument(std::string(what) + ": state length does not match network size");
}

void require_max(std::size_t v, const char* what) {
    if (v == 0) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

// Produces the visit order for successive sweeps of a serial schedule.
class SweepOrder {
public:
    SweepOrder(std::size_t n, SerialSchedule schedule)
        : schedule_(schedule), order_(n), rng_(schedule.seed, 0) {
        std::iota(order_.begin(), order_.end(), std::size_t{0});
    }

    std::span<const std::size_t> next() {
        if (schedule_.order == ScanOrder::RandomPermutation) {
            for (std::size_t i = order_.size(); i > 1; --i) {
                const auto j = static_cast<std::size_t>(rng_.uniform_int(0, static_cast<std::int64_t>(i) - 1));
                std::swap(order_[i - 1], order_[j]);
            }
        }
        return order_;
    }

private:
    SerialSchedule schedule_;
    std::vector<std::size_t> order_;
    SeededRng rng_;
};

}  // namespace

void step_parallel_into(const Network& net, const StateVector& s, StateVector& out) {
    const std::size_t n = net.size();
    for (std::size_t i = 0; i < n; ++i) out[i] = split_sign(local_field(net, s, i));
}

StateVector step_parallel(const Network& net, const StateVector& s) {
    require_size(net, s, "step_parallel");
    StateVector out(net.size());
    step_parallel_into(net, s, out);
    return out;
}

StateVector step_serial(const Network& net, StateVector s, std::size_t i) {
    require_size(net, s, "step_serial");
    if (i >= net.size()) throw std::out_of_range("step_serial: neuron index out of range");
    s[i] = split_sign(local_field(net, s, i));
    return s;
}

SweepResult sweep_serial(const Network& net, StateVector s, std::span<const std::size_t> order) {
    require_size(net, s, "sweep_serial");
    const std::size_t n = net.size();
    if (order.size() != n) throw std::invalid_argument("sweep_serial: order is not a permutation");
    std::vector<bool> seen(n, false);
    for (std::size_t i : order) {
        if (i >= n || seen[i]) throw std::invalid_argument("sweep_serial: order is not a permutation");
        seen[i] = true;
    }
    bool changed = false;
    for (std::size_t i : order) {
        const QuadState next = split_sign(local_field(net, s, i));
        if (next != s[i]) {
            s[i] = next;
            changed = true;
        }
    }
    return {std::move(s), changed};
}

Trajectory run_parallel(const Network& net, const StateVector& s0, std::size_t max_steps) {
    require_size(net, s0, "run_parallel");
    require_max(max_steps, "run_parallel: max_steps");
    Trajectory traj{{s0}, UpdateMode::parallel()};
    traj.states.reserve(max_steps + 1);
    for (std::size_t t = 0; t < max_steps; ++t) traj.states.push_back(step_parallel(net, traj.states.back()));
    return traj;
}

SerialRun run_serial_to_fixpoint(const Network& net, StateVector s0, SerialSchedule schedule,
                                 std::size_t max_sweeps) {
    require_size(net, s0, "run_serial_to_fixpoint");
    require_max(max_sweeps, "run_serial_to_fixpoint: max_sweeps");
    SweepOrder order(net.size(), schedule);
    SerialRun run{std::move(s0), 0, false};
    while (run.sweeps_used < max_sweeps) {
        auto [next, changed] = sweep_serial(net, std::move(run.final_state), order.next());
        run.final_state = std::move(next);
        ++run.sweeps_used;
        if (!changed) {
            run.converged = true;
            break;
        }
    }
    return run;
}

Trajectory run_serial(const Network& net, const StateVector& s0, SerialSchedule schedule,
                      std::size_t max_sweeps) {
    require_size(net, s0, "run_serial");
    require_max(max_sweeps, "run_serial: max_sweeps");
    SweepOrder order(net.size(), schedule);
    Trajectory traj{{s0}, UpdateMode::serial(schedule)};
    for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
        bool changed = false;
        for (std::size_t i : order.next()) {
            StateVector next = step_serial(net, traj.states.back(), i);
            changed = changed || next != traj.states.back();
            traj.states.push_back(std::move(next));
        }
        if (!changed) break;
    }
    return traj;
}

std::vector<int> step_real_parallel(const RealMatrix& w, std::span<const int> v) {
    if (v.size() != w.size()) throw std::invalid_argument("step_real_parallel: dimension mismatch");
    std::vector<int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        double acc = 0.0;
        const auto row = w.row(i);
        for (std::size_t j = 0; j < v.size(); ++j) acc += row[j] * v[j];
        out[i] = sign_real(acc);
    }
    return out;
}

}  // namespace cvhnn
