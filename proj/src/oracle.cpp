#include "cvhnn/oracle.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <thread>

#include "cvhnn/dynamics.hpp"

namespace cvhnn {

namespace {

void require_oracle_size(std::size_t n) {
    if (n == 0 || n > kOracleMaxNeurons)
        throw std::invalid_argument("oracle: n = " + std::to_string(n) + " outside [1, " +
                                    std::to_string(kOracleMaxNeurons) + "]");
}

std::uint64_t state_count(std::size_t n) { return std::uint64_t{1} << (2 * n); }

}  // namespace

StateCode encode_state(const StateVector& s) {
    if (s.size() > 32) throw std::invalid_argument("encode_state: more than 32 neurons do not fit a StateCode");
    StateCode code = 0;
    for (std::size_t k = 0; k < s.size(); ++k) code |= static_cast<StateCode>(s[k].code()) << (2 * k);
    return code;
}

StateVector decode_state(StateCode code, std::size_t n) {
    if (n == 0 || n > 32) throw std::invalid_argument("decode_state: n outside [1, 32]");
    if (n < 32 && code >= state_count(n)) throw std::out_of_range("decode_state: code out of range");
    std::vector<QuadState> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = QuadState::from_code(static_cast<std::uint8_t>((code >> (2 * k)) & 3u));
    return StateVector(std::move(out));
}

CycleInventory functional_graph_cycles(const Network& net, unsigned jobs) {
    const std::size_t n = net.size();
    require_oracle_size(n);
    const std::uint64_t total = state_count(n);

    std::vector<std::uint32_t> succ(total);
    auto fill = [&](std::uint64_t begin, std::uint64_t end) {
        StateVector out(n);
        for (std::uint64_t c = begin; c < end; ++c) {
            step_parallel_into(net, decode_state(c, n), out);
            succ[c] = static_cast<std::uint32_t>(encode_state(out));
        }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(total)));
    if (jobs == 1) {
        fill(0, total);
    } else {
        std::vector<std::thread> workers;
        const std::uint64_t chunk = (total + jobs - 1) / jobs;
        for (unsigned w = 0; w < jobs; ++w) {
            const std::uint64_t b = std::min(total, w * chunk), e = std::min(total, b + chunk);
            workers.emplace_back(fill, b, e);
        }
        for (auto& t : workers) t.join();
    }

    // Path colouring: 0 = unvisited, 1 = on the current walk, 2 = finished.
    constexpr std::uint32_t kNone = ~std::uint32_t{0};
    std::vector<std::uint8_t> color(total, 0);
    std::vector<std::uint32_t> cycle_id(total, kNone);
    std::vector<CycleInfo> found;
    std::vector<std::uint32_t> path;
    for (std::uint64_t start = 0; start < total; ++start) {
        if (color[start]) continue;
        path.clear();
        std::uint32_t x = static_cast<std::uint32_t>(start);
        while (color[x] == 0) {
            color[x] = 1;
            path.push_back(x);
            x = succ[x];
        }
        if (color[x] == 1) {
            const auto id = static_cast<std::uint32_t>(found.size());
            CycleInfo info{0, x, 0};
            std::uint32_t y = x;
            do {
                cycle_id[y] = id;
                info.representative = std::min<StateCode>(info.representative, y);
                ++info.period;
                y = succ[y];
            } while (y != x);
            found.push_back(info);
        }
        for (std::uint32_t p : path) color[p] = 2;
    }

    // Canonical order by representative.
    std::vector<std::uint32_t> order(found.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return found[a].representative < found[b].representative; });
    std::vector<std::uint32_t> remap(found.size());
    CycleInventory inv{n, total, {}, std::vector<std::uint32_t>(total, kNone)};
    for (std::uint32_t rank = 0; rank < order.size(); ++rank) {
        remap[order[rank]] = rank;
        inv.cycles.push_back(found[order[rank]]);
    }

    // Predecessor lists in CSR form, then reverse BFS from every cycle node.
    std::vector<std::uint32_t> offsets(total + 1, 0);
    for (std::uint64_t c = 0; c < total; ++c) ++offsets[succ[c] + 1];
    for (std::uint64_t c = 0; c < total; ++c) offsets[c + 1] += offsets[c];
    std::vector<std::uint32_t> preds(total);
    {
        std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
        for (std::uint64_t c = 0; c < total; ++c) preds[cursor[succ[c]]++] = static_cast<std::uint32_t>(c);
    }
    std::deque<std::uint32_t> queue;
    for (std::uint64_t c = 0; c < total; ++c)
        if (cycle_id[c] != kNone) {
            inv.attractor_of[c] = remap[cycle_id[c]];
            queue.push_back(static_cast<std::uint32_t>(c));
        }
    while (!queue.empty()) {
        const std::uint32_t x = queue.front();
        queue.pop_front();
        ++inv.cycles[inv.attractor_of[x]].basin_size;
        for (std::uint32_t k = offsets[x]; k < offsets[x + 1]; ++k) {
            const std::uint32_t p = preds[k];
            if (inv.attractor_of[p] == kNone) {
                inv.attractor_of[p] = inv.attractor_of[x];
                queue.push_back(p);
            }
        }
    }
    return inv;
}

bool exhaustive_agreement(const Network& net, const CycleInventory& inventory, std::uint64_t cap,
                          const CycleDetector& detector) {
    if (inventory.n != net.size()) throw std::invalid_argument("exhaustive_agreement: inventory size mismatch");
    for (StateCode c = 0; c < inventory.total_states; ++c) {
        const CycleReport r = detector(net, decode_state(c, inventory.n), cap);
        if (!r.resolved() || *r.period != inventory.period_from(c)) return false;
    }
    return true;
}

bool exhaustive_agreement(const Network& net, std::uint64_t cap, const CycleDetector& detector) {
    return exhaustive_agreement(net, functional_graph_cycles(net), cap, detector);
}

bool exhaustive_agreement(const Network& net, std::uint64_t cap) {
    return exhaustive_agreement(net, cap, detect_cycle_brent);
}

}  // namespace cvhnn
