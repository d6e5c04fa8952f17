#include "cvhnn/harness.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace cvhnn {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

}  // namespace

std::string family_name(const StructureFamily& f) {
    return std::visit(overloaded{
                          [](NamedFamily n) -> std::string {
                              switch (n) {
                                  case NamedFamily::Hermitian: return "hermitian";
                                  case NamedFamily::SkewHermitian: return "skew-hermitian";
                                  case NamedFamily::BraidedHermitian: return "braided-hermitian";
                                  case NamedFamily::BraidedSkewHermitian: return "braided-skew-hermitian";
                              }
                              return "?";
                          },
                          [](const RectGrid&) -> std::string { return "rect"; },
                          [](const PolarGrid&) -> std::string { return "polar"; },
                      },
                      f);
}

NamedFamily parse_named_family(std::string_view s) {
    if (s == "hermitian") return NamedFamily::Hermitian;
    if (s == "skew-hermitian") return NamedFamily::SkewHermitian;
    if (s == "braided-hermitian") return NamedFamily::BraidedHermitian;
    if (s == "braided-skew-hermitian") return NamedFamily::BraidedSkewHermitian;
    throw std::invalid_argument("unknown structure family '" + std::string(s) + "'");
}

void ExperimentSpec::validate() const {
    if (n_min < 1 || n_min > n_max || n_max > kMaxNeurons)
        throw std::invalid_argument("n_range must satisfy 1 <= n_min <= n_max <= 512");
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (cap < 1) throw std::invalid_argument("cap must be >= 1");
}

ComplexMatrix generate_weights(const StructureFamily& family, std::size_t n, SeededRng& rng) {
    return std::visit(
        overloaded{
            [&](NamedFamily f) -> ComplexMatrix {
                const RealMatrixSpec unit{n, SymmetryKind::Arbitrary, SignKind::Arbitrary};
                switch (f) {
                    case NamedFamily::Hermitian:
                        return gen_hermitian(n, SignKind::Arbitrary, SignKind::Arbitrary, true, rng);
                    case NamedFamily::SkewHermitian: return gen_skew_hermitian(n, rng);
                    case NamedFamily::BraidedHermitian: return gen_braided_hermitian(gen_real_constrained(unit, rng));
                    case NamedFamily::BraidedSkewHermitian:
                        return gen_braided_skew_hermitian(gen_real_constrained(unit, rng));
                }
                throw std::invalid_argument("unknown family");
            },
            [&](const RectGrid& g) -> ComplexMatrix {
                const RealMatrix a = gen_real_constrained({n, g.sym_a, g.sign_a}, rng);
                const RealMatrix b = gen_real_constrained({n, g.sym_b, g.sign_b}, rng);
                return compose_weights(a, b);
            },
            [&](const PolarGrid& g) -> ComplexMatrix { return gen_polar({n, g.sym_g, g.sym_p}, rng); },
        },
        family);
}

Instance generate_instance(const ExperimentSpec& spec, std::uint64_t k) {
    SeededRng rng(spec.master_seed, k);
    const auto n = static_cast<std::size_t>(
        rng.uniform_int(static_cast<std::int64_t>(spec.n_min), static_cast<std::int64_t>(spec.n_max)));
    ComplexMatrix weights = generate_weights(spec.family, n, rng);
    ComplexVector thresholds = gen_threshold(n, spec.threshold, rng);
    std::vector<QuadState> s0(n);
    for (auto& q : s0) {
        const int re = rng.bit() ? -1 : 1;
        const int im = rng.bit() ? -1 : 1;
        q = QuadState(re, im);
    }
    return {Network(std::move(weights), std::move(thresholds)), StateVector(std::move(s0))};
}

InstanceResult run_instance(const ExperimentSpec& spec, std::uint64_t k) {
    const Instance inst = generate_instance(spec, k);
    return {k, inst.network.size(), detect_cycle_brent(inst.network, inst.initial, spec.cap)};
}

void Histogram::add(const CycleReport& r) {
    if (r.resolved())
        add_period(*r.period);
    else
        add_unresolved();
}

void Histogram::add_period(std::uint64_t period, std::uint64_t count) {
    if (period == 0) throw std::invalid_argument("Histogram: period must be >= 1");
    if (count == 0) return;
    counts_[period] += count;
    trials_ += count;
}

void Histogram::add_unresolved(std::uint64_t count) {
    unresolved_ += count;
    trials_ += count;
}

void Histogram::merge(const Histogram& other) {
    for (auto [p, c] : other.counts_) counts_[p] += c;
    unresolved_ += other.unresolved_;
    trials_ += other.trials_;
}

std::uint64_t Histogram::count(std::uint64_t period) const {
    const auto it = counts_.find(period);
    return it == counts_.end() ? 0 : it->second;
}

double Histogram::probability(std::uint64_t period) const {
    return trials_ ? static_cast<double>(count(period)) / static_cast<double>(trials_) : 0.0;
}

std::optional<std::uint64_t> Histogram::mode_period() const {
    std::optional<std::uint64_t> best;
    std::uint64_t best_count = 0;
    for (auto [p, c] : counts_)
        if (c > best_count) {
            best = p;
            best_count = c;
        }
    return best;
}

double Histogram::mode_probability() const {
    const auto m = mode_period();
    return m ? probability(*m) : 0.0;
}

double Histogram::mean_period() const {
    const std::uint64_t r = resolved();
    if (r == 0) return 0.0;
    double sum = 0.0;
    for (auto [p, c] : counts_) sum += static_cast<double>(p) * static_cast<double>(c);
    return sum / static_cast<double>(r);
}

double Histogram::stddev_period() const {
    const std::uint64_t r = resolved();
    if (r == 0) return 0.0;
    const double mean = mean_period();
    double ss = 0.0;
    for (auto [p, c] : counts_) {
        const double d = static_cast<double>(p) - mean;
        ss += d * d * static_cast<double>(c);
    }
    return std::sqrt(ss / static_cast<double>(r));
}

ExperimentResult run_experiment(const ExperimentSpec& spec, unsigned jobs) {
    spec.validate();
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, spec.trials));

    ExperimentResult result{spec, {}, std::vector<InstanceResult>(spec.trials)};
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t k = next++; k < spec.trials; k = next++) result.rows[k] = run_instance(spec, k);
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker);
    }
    for (const auto& row : result.rows) result.histogram.add(row.report);
    return result;
}

}  // namespace cvhnn
