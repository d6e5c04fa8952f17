// cvhnn: command-line driver for structured complex-valued Hopfield network
// experiments.
//
//   cvhnn run         --structure skew-hermitian --n 12 --seed 3
//   cvhnn run         --matrix net.json --state "+1+i,-1+i"
//   cvhnn experiment  --config configs/fig3a.toml --trials 2000 --seed 7 --out results
//   cvhnn oracle      --structure skew-hermitian --n 4 --seed 1
//   cvhnn verify
//   cvhnn paper-grid  --figure fig5 --trials 2000 --jobs 8

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "cvhnn/config.hpp"
#include "cvhnn/cycle.hpp"
#include "cvhnn/dynamics.hpp"
#include "cvhnn/harness.hpp"
#include "cvhnn/oracle.hpp"
#include "cvhnn/reference.hpp"
#include "cvhnn/report.hpp"
#include "cvhnn/verify.hpp"

namespace fs = std::filesystem;
using namespace cvhnn;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void add_family_flags(CLI::App* cmd, FamilyFlags& f) {
    cmd->add_option("--structure", f.structure,
                    "hermitian | skew-hermitian | braided-hermitian | braided-skew-hermitian | rect | polar");
    cmd->add_option("--sym-a", f.sym_a, "rect: symmetry of A");
    cmd->add_option("--sign-a", f.sign_a, "rect: sign of A");
    cmd->add_option("--sym-b", f.sym_b, "rect: symmetry of B");
    cmd->add_option("--sign-b", f.sign_b, "rect: sign of B");
    cmd->add_option("--sym-g", f.sym_g, "polar: symmetry of the magnitude matrix");
    cmd->add_option("--sym-p", f.sym_p, "polar: symmetry of the phase matrix");
}

// --seed, then the config file, then CVHNN_SEED, then 0.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag, const std::optional<std::uint64_t>& config) {
    if (flag) return *flag;
    if (config) return *config;
    if (const char* env = std::getenv("CVHNN_SEED")) {
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(env, &used);
            if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
            return v;
        } catch (const std::exception&) {
            throw UsageError(std::string("CVHNN_SEED is not an unsigned integer: '") + env + "'");
        }
    }
    return 0;
}

unsigned resolve_jobs(unsigned jobs) { return jobs ? jobs : std::max(1u, std::thread::hardware_concurrency()); }

nlohmann::ordered_json report_json(const CycleReport& r) {
    nlohmann::ordered_json j;
    j["resolved"] = r.resolved();
    if (r.resolved())
        j["period"] = *r.period;
    else
        j["period"] = nullptr;
    j["transient"] = r.transient;
    j["steps_executed"] = r.steps_executed;
    return j;
}

void write_outputs(const ExperimentResult& result, const std::string& name, const fs::path& out,
                   const std::string& format) {
    fs::create_directories(out);
    const bool all = format == "all";
    if (all || format == "csv") {
        emit_rows_csv(result, out / (name + "_rows.csv"));
        emit_histogram_csv(result.histogram, out / (name + "_histogram.csv"));
    }
    if (all || format == "json") emit_json_summary(result.spec, result.histogram, out / (name + ".json"));
    if (all || format == "svg") emit_svg_histogram(result.histogram, out / (name + ".svg"), {64, name});
}

std::string summary_line(const std::string& name, const Histogram& h, std::optional<std::uint64_t> ref_period,
                         std::optional<double> ref_prob) {
    char buf[256];
    const auto mode = h.mode_period();
    std::snprintf(buf, sizeof buf, "%-8s mode L=%-4s Pr=%.3f  mean=%.2f sd=%.2f unresolved=%llu", name.c_str(),
                  mode ? std::to_string(*mode).c_str() : "-", h.mode_probability(), h.mean_period(),
                  h.stddev_period(), static_cast<unsigned long long>(h.unresolved()));
    std::string line = buf;
    if (ref_period) {
        std::snprintf(buf, sizeof buf, "  | reference L=%llu", static_cast<unsigned long long>(*ref_period));
        line += buf;
        if (ref_prob) {
            std::snprintf(buf, sizeof buf, " Pr=%.2f (delta %+.3f)", *ref_prob, h.probability(*ref_period) - *ref_prob);
            line += buf;
        }
    }
    return line;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Structured complex-valued Hopfield network dynamics"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "Follow one network from one start state");
    FamilyFlags run_family;
    std::string run_matrix, run_state, run_engine = "brent", run_mode = "parallel", run_threshold = "zero";
    std::size_t run_n = 8, run_sweeps = 10'000;
    std::uint64_t run_cap = kDefaultCycleCap, run_instance_k = 0;
    std::optional<std::uint64_t> run_seed;
    run->add_option("--matrix", run_matrix, "network JSON file {re, im, t_re, t_im}");
    add_family_flags(run, run_family);
    run->add_option("--n", run_n, "neurons for generated networks")->check(CLI::Range(1, 512));
    run->add_option("--threshold", run_threshold, "zero | uniform");
    run->add_option("--seed", run_seed, "master seed for generated networks");
    run->add_option("--instance", run_instance_k, "instance index (rng stream)");
    run->add_option("--state", run_state, "start state, e.g. \"+1+i,-1-i\"");
    run->add_option("--cap", run_cap, "parallel step cap")->check(CLI::PositiveNumber);
    run->add_option("--engine", run_engine, "brent | hashed")->check(CLI::IsMember({"brent", "hashed"}));
    run->add_option("--mode", run_mode, "parallel | serial")->check(CLI::IsMember({"parallel", "serial"}));
    run->add_option("--max-sweeps", run_sweeps, "serial sweep cap")->check(CLI::PositiveNumber);

    // experiment
    auto* exp = app.add_subcommand("experiment", "Run one configured Monte-Carlo experiment");
    std::string exp_config, exp_format = "all";
    std::optional<std::uint64_t> exp_trials, exp_seed, exp_cap;
    fs::path exp_out = ".";
    unsigned exp_jobs = 1;
    exp->add_option("--config", exp_config, "TOML experiment file")->required();
    exp->add_option("--trials", exp_trials, "override trial count")->check(CLI::PositiveNumber);
    exp->add_option("--seed", exp_seed, "master seed (falls back to config, then CVHNN_SEED)");
    exp->add_option("--cap", exp_cap, "override step cap")->check(CLI::PositiveNumber);
    exp->add_option("--out", exp_out, "output directory");
    exp->add_option("--format", exp_format, "csv | json | svg | all")->check(CLI::IsMember({"csv", "json", "svg", "all"}));
    exp->add_option("--jobs", exp_jobs, "worker threads (0 = all cores)");

    // oracle
    auto* orc = app.add_subcommand("oracle", "Exact cycle inventory over all 4^n states (n <= 10)");
    FamilyFlags orc_family;
    std::string orc_matrix, orc_threshold = "zero";
    std::size_t orc_n = 4;
    std::optional<std::uint64_t> orc_seed;
    std::uint64_t orc_instance = 0;
    std::string orc_out;
    unsigned orc_jobs = 1;
    orc->add_option("--matrix", orc_matrix, "network JSON file");
    add_family_flags(orc, orc_family);
    orc->add_option("--n", orc_n, "neurons")->check(CLI::Range(1, int(kOracleMaxNeurons)));
    orc->add_option("--threshold", orc_threshold, "zero | uniform");
    orc->add_option("--seed", orc_seed, "master seed");
    orc->add_option("--instance", orc_instance, "instance index (rng stream)");
    orc->add_option("--out", orc_out, "JSON output file (default: stdout)");
    orc->add_option("--jobs", orc_jobs, "worker threads (0 = all cores)");

    // verify
    auto* ver = app.add_subcommand("verify", "Run the convergence property suite; exit 1 on any violation");
    std::optional<std::uint64_t> ver_seed;
    ver->add_option("--seed", ver_seed, "seed for the random instances");

    // paper-grid
    auto* grid = app.add_subcommand("paper-grid", "Run every cell of a reference figure");
    std::string grid_figure = "all", grid_format = "all";
    std::uint64_t grid_trials = 2000;
    std::optional<std::uint64_t> grid_seed, grid_cap;
    std::string grid_out, grid_emit;
    unsigned grid_jobs = 1;
    grid->add_option("--figure", grid_figure, "fig1 ... fig10, a single cell such as fig3a, or all");
    grid->add_option("--trials", grid_trials, "trials per cell")->check(CLI::PositiveNumber);
    grid->add_option("--seed", grid_seed, "master seed");
    grid->add_option("--cap", grid_cap, "step cap")->check(CLI::PositiveNumber);
    grid->add_option("--out", grid_out, "write per-cell outputs to this directory");
    grid->add_option("--format", grid_format, "csv | json | svg | all")->check(CLI::IsMember({"csv", "json", "svg", "all"}));
    grid->add_option("--jobs", grid_jobs, "worker threads (0 = all cores)");
    grid->add_option("--emit-configs", grid_emit, "write one TOML config per cell to this directory and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*run) {
            std::optional<Network> net;
            std::optional<StateVector> s0;
            if (!run_matrix.empty()) {
                net = load_network_json(run_matrix);
                s0 = StateVector(net->size());
            } else {
                ExperimentSpec spec;
                spec.family = make_family(run_family);
                spec.threshold = parse_threshold(run_threshold);
                spec.n_min = spec.n_max = run_n;
                spec.master_seed = resolve_seed(run_seed, std::nullopt);
                Instance inst = generate_instance(spec, run_instance_k);
                net = std::move(inst.network);
                s0 = std::move(inst.initial);
            }
            if (!run_state.empty()) s0 = parse_state(run_state);
            if (s0->size() != net->size()) throw UsageError("--state length does not match the network size");

            nlohmann::ordered_json out;
            out["n"] = net->size();
            out["mode"] = run_mode;
            out["initial_state"] = to_string(*s0);
            if (run_mode == "parallel") {
                const CycleReport r = run_engine == "brent" ? detect_cycle_brent(*net, *s0, run_cap)
                                                            : detect_cycle_hashed(*net, *s0, run_cap);
                out["engine"] = run_engine;
                out["report"] = report_json(r);
            } else {
                const SerialRun r = run_serial_to_fixpoint(*net, *s0, {}, run_sweeps);
                out["converged"] = r.converged;
                out["sweeps_used"] = r.sweeps_used;
                out["final_state"] = to_string(r.final_state);
                out["energy"] = energy_serial(*net, r.final_state);
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }

        if (*exp) {
            ExperimentConfig cfg = load_experiment_config(exp_config);
            if (exp_trials) cfg.spec.trials = *exp_trials;
            if (exp_cap) cfg.spec.cap = *exp_cap;
            cfg.spec.master_seed = resolve_seed(exp_seed, cfg.seed);
            const ExperimentResult result = run_experiment(cfg.spec, resolve_jobs(exp_jobs));
            write_outputs(result, cfg.name, exp_out, exp_format);
            std::cout << summary_line(cfg.name, result.histogram, cfg.reference_period, cfg.reference_probability)
                      << "\n";
            return 0;
        }

        if (*orc) {
            std::optional<Network> net;
            if (!orc_matrix.empty()) {
                net = load_network_json(orc_matrix);
                if (net->size() > kOracleMaxNeurons) throw UsageError("oracle: network has more than 10 neurons");
            } else {
                ExperimentSpec spec;
                spec.family = make_family(orc_family);
                spec.threshold = parse_threshold(orc_threshold);
                spec.n_min = spec.n_max = orc_n;
                spec.master_seed = resolve_seed(orc_seed, std::nullopt);
                net = generate_instance(spec, orc_instance).network;
            }
            const CycleInventory inv = functional_graph_cycles(*net, resolve_jobs(orc_jobs));
            nlohmann::ordered_json j;
            j["n"] = inv.n;
            j["total_states"] = inv.total_states;
            j["cycle_count"] = inv.cycles.size();
            nlohmann::ordered_json cycles = nlohmann::ordered_json::array();
            std::map<std::uint64_t, std::uint64_t> by_period;
            for (const auto& c : inv.cycles) {
                nlohmann::ordered_json cj;
                cj["period"] = c.period;
                cj["representative"] = c.representative;
                cj["representative_state"] = to_string(decode_state(c.representative, inv.n));
                cj["basin_size"] = c.basin_size;
                cycles.push_back(cj);
                by_period[c.period] += c.basin_size;
            }
            nlohmann::ordered_json periods = nlohmann::ordered_json::object();
            for (auto [p, c] : by_period) periods[std::to_string(p)] = c;
            j["start_states_by_period"] = periods;
            j["cycles"] = cycles;
            const std::string text = j.dump(2) + "\n";
            if (orc_out.empty())
                std::cout << text;
            else
                write_text_file(orc_out, text);
            return 0;
        }

        if (*ver) {
            const auto results = run_verification(resolve_seed(ver_seed, std::nullopt));
            bool ok = true;
            for (const auto& r : results) {
                std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
                ok = ok && r.passed;
            }
            return ok ? 0 : kExitViolation;
        }

        if (*grid) {
            const auto cells = reference_figure(grid_figure);
            const std::uint64_t seed = resolve_seed(grid_seed, std::nullopt);
            if (!grid_emit.empty()) {
                fs::create_directories(grid_emit);
                for (const auto& cell : cells) {
                    ExperimentConfig cfg = reference_config(cell, grid_trials, seed);
                    if (grid_cap) cfg.spec.cap = *grid_cap;
                    write_text_file(fs::path(grid_emit) / (cell.id + ".toml"), to_toml(cfg));
                }
                std::cout << "wrote " << cells.size() << " configs to " << grid_emit << "\n";
                return 0;
            }
            for (const auto& cell : cells) {
                ExperimentConfig cfg = reference_config(cell, grid_trials, seed);
                if (grid_cap) cfg.spec.cap = *grid_cap;
                const ExperimentResult result = run_experiment(cfg.spec, resolve_jobs(grid_jobs));
                if (!grid_out.empty()) write_outputs(result, cell.id, grid_out, grid_format);
                std::cout << summary_line(cell.id, result.histogram, cell.period, cell.probability) << std::endl;
            }
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
