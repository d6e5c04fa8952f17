#include "cvhnn/reference.hpp"

#include <stdexcept>

namespace cvhnn {

namespace {

struct Outcome {
    std::uint64_t period;
    double probability;
};

using Sym = SymmetryKind;
using Sign = SignKind;

// Grid letters a..i: column = sign of A (positive, negative, arbitrary),
// row = sign of B in the same order.
void add_rect_figure(std::vector<ReferenceCell>& out, int figure, Sym sym_a, Sym sym_b, const Outcome (&cells)[9]) {
    constexpr Sign order[3] = {Sign::Positive, Sign::Negative, Sign::Arbitrary};
    for (int k = 0; k < 9; ++k) {
        const RectGrid g{sym_a, order[k % 3], sym_b, order[k / 3]};
        out.push_back({"fig" + std::to_string(figure) + char('a' + k), g, ThresholdMode::Zero, cells[k].period,
                       cells[k].probability});
    }
}

std::vector<ReferenceCell> build() {
    std::vector<ReferenceCell> out;
    const auto Z = ThresholdMode::Zero, U = ThresholdMode::UniformScaled;
    // The threshold figures print no probability, only a histogram concentrated at 4 or 8.
    out.push_back({"fig1a", NamedFamily::SkewHermitian, Z, 4, std::nullopt});
    out.push_back({"fig1b", NamedFamily::SkewHermitian, U, std::nullopt, std::nullopt});
    out.push_back({"fig2a", NamedFamily::BraidedHermitian, Z, 8, std::nullopt});
    out.push_back({"fig2b", NamedFamily::BraidedHermitian, U, std::nullopt, std::nullopt});
    out.push_back({"fig2c", NamedFamily::BraidedSkewHermitian, Z, 8, std::nullopt});
    out.push_back({"fig2d", NamedFamily::BraidedSkewHermitian, U, std::nullopt, std::nullopt});

    add_rect_figure(out, 3, Sym::Symmetric, Sym::Symmetric,
                    {{8, .95}, {8, .94}, {4, .98}, {8, .95}, {8, .95}, {4, .98}, {1, .98}, {2, .98}, {8, .02}});
    add_rect_figure(out, 4, Sym::Symmetric, Sym::Arbitrary,
                    {{8, .96}, {8, .96}, {4, .98}, {8, .96}, {8, .96}, {4, .98}, {1, .99}, {2, 1.0}, {2, .80}});
    add_rect_figure(out, 5, Sym::Antisymmetric, Sym::Antisymmetric,
                    {{8, .97}, {8, .98}, {2, .26}, {8, .98}, {8, .98}, {2, .26}, {4, .56}, {4, .55}, {8, .02}});
    add_rect_figure(out, 6, Sym::Antisymmetric, Sym::Arbitrary,
                    {{4, 1.0}, {4, 1.0}, {4, 1.0}, {4, 1.0}, {4, 1.0}, {4, 1.0}, {4, .92}, {4, .92}, {4, .81}});
    add_rect_figure(out, 7, Sym::Arbitrary, Sym::Symmetric,
                    {{8, .96}, {8, .96}, {4, 1.0}, {8, .96}, {8, .96}, {4, 1.0}, {1, .98}, {2, .98}, {4, .73}});
    add_rect_figure(out, 8, Sym::Arbitrary, Sym::Antisymmetric,
                    {{1, .99}, {2, 1.0}, {2, .76}, {1, .99}, {2, 1.0}, {2, .76}, {1, .99}, {2, 1.0}, {2, .86}});
    add_rect_figure(out, 9, Sym::Arbitrary, Sym::Arbitrary,
                    {{8, .98}, {8, .98}, {4, .99}, {8, .98}, {8, .98}, {4, .99}, {1, .99}, {2, .99}, {4, .02}});

    // Polar grid: column = symmetry of G, row = symmetry of P.
    constexpr Sym order[3] = {Sym::Symmetric, Sym::Antisymmetric, Sym::Arbitrary};
    const Outcome polar[9] = {{4, .02}, {4, .02}, {4, .02}, {2, .77}, {4, 1.0}, {2, .51}, {4, .02}, {8, .02}, {4, .02}};
    for (int k = 0; k < 9; ++k)
        out.push_back({std::string("fig10") + char('a' + k), PolarGrid{order[k % 3], order[k / 3]}, Z, polar[k].period,
                       polar[k].probability});
    return out;
}

}  // namespace

const std::vector<ReferenceCell>& reference_cells() {
    static const std::vector<ReferenceCell> cells = build();
    return cells;
}

std::vector<ReferenceCell> reference_figure(std::string_view figure) {
    std::vector<ReferenceCell> out;
    for (const auto& c : reference_cells()) {
        if (figure == "all" || c.id == figure ||
            (c.id.starts_with(figure) && c.id.size() == figure.size() + 1 && c.id.back() >= 'a' && c.id.back() <= 'i'))
            out.push_back(c);
    }
    if (out.empty()) throw std::invalid_argument("unknown figure '" + std::string(figure) + "'");
    return out;
}

const ReferenceCell& reference_cell(std::string_view id) {
    for (const auto& c : reference_cells())
        if (c.id == id) return c;
    throw std::invalid_argument("unknown reference cell '" + std::string(id) + "'");
}

ExperimentConfig reference_config(const ReferenceCell& cell, std::uint64_t trials, std::uint64_t seed) {
    ExperimentConfig cfg;
    cfg.name = cell.id;
    cfg.spec.family = cell.family;
    cfg.spec.threshold = cell.threshold;
    cfg.spec.trials = trials;
    cfg.spec.master_seed = seed;
    cfg.seed = seed;
    cfg.reference_period = cell.period;
    cfg.reference_probability = cell.probability;
    return cfg;
}

}  // namespace cvhnn
