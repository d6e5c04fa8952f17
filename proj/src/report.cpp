#include "cvhnn/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <variant>

#include <json.hpp>

namespace cvhnn {

namespace {

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string fixed2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string xml_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

nlohmann::ordered_json spec_json(const ExperimentSpec& spec) {
    nlohmann::ordered_json j;
    j["structure"] = family_name(spec.family);
    if (const auto* g = std::get_if<RectGrid>(&spec.family)) {
        j["sym_a"] = to_string(g->sym_a);
        j["sign_a"] = to_string(g->sign_a);
        j["sym_b"] = to_string(g->sym_b);
        j["sign_b"] = to_string(g->sign_b);
    } else if (const auto* p = std::get_if<PolarGrid>(&spec.family)) {
        j["sym_g"] = to_string(p->sym_g);
        j["sym_p"] = to_string(p->sym_p);
    }
    j["threshold"] = to_string(spec.threshold);
    j["trials"] = spec.trials;
    j["n_range"] = {spec.n_min, spec.n_max};
    j["cap"] = spec.cap;
    j["seed"] = spec.master_seed;
    return j;
}

}  // namespace

std::string structure_label(const StructureFamily& f) {
    if (const auto* g = std::get_if<RectGrid>(&f))
        return "rect:" + std::string(to_string(g->sym_a)) + ":" + std::string(to_string(g->sym_b));
    if (const auto* p = std::get_if<PolarGrid>(&f))
        return "polar:" + std::string(to_string(p->sym_g)) + ":" + std::string(to_string(p->sym_p));
    return family_name(f);
}

std::string format_rows_csv(const ExperimentResult& result) {
    const auto& spec = result.spec;
    std::string sign_a = "-", sign_b = "-";
    if (const auto* g = std::get_if<RectGrid>(&spec.family)) {
        sign_a = to_string(g->sign_a);
        sign_b = to_string(g->sign_b);
    }
    const std::string fixed_cols = structure_label(spec.family) + "," + sign_a + "," + sign_b + "," +
                                   std::string(to_string(spec.threshold)) + ",";
    std::string out = "instance_id,n,structure,sign_a,sign_b,threshold_mode,period,transient,steps_executed\n";
    for (const auto& row : result.rows) {
        const auto& r = row.report;
        out += std::to_string(row.instance_id) + "," + std::to_string(row.n) + "," + fixed_cols;
        out += r.resolved() ? std::to_string(*r.period) + "," + std::to_string(r.transient) : std::string("-1,-1");
        out += "," + std::to_string(r.steps_executed) + "\n";
    }
    return out;
}

std::string format_histogram_csv(const Histogram& h) {
    std::string out = "period,count,probability\n";
    for (auto [p, c] : h.counts()) out += std::to_string(p) + "," + std::to_string(c) + "," + fixed6(h.probability(p)) + "\n";
    if (h.unresolved() > 0) {
        const double prob = static_cast<double>(h.unresolved()) / static_cast<double>(h.trials());
        out += "-1," + std::to_string(h.unresolved()) + "," + fixed6(prob) + "\n";
    }
    return out;
}

Histogram parse_histogram_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != "period,count,probability")
        throw std::invalid_argument("histogram csv: missing or unexpected header");
    Histogram h;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto c1 = line.find(','), c2 = line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw std::invalid_argument("histogram csv: malformed row '" + line + "'");
        const long long period = std::stoll(line.substr(0, c1));
        const unsigned long long count = std::stoull(line.substr(c1 + 1, c2 - c1 - 1));
        if (period == -1)
            h.add_unresolved(count);
        else if (period >= 1)
            h.add_period(static_cast<std::uint64_t>(period), count);
        else
            throw std::invalid_argument("histogram csv: bad period in '" + line + "'");
    }
    return h;
}

std::string format_json_summary(const ExperimentSpec& spec, const Histogram& h) {
    nlohmann::ordered_json j;
    j["spec"] = spec_json(spec);
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (auto [p, c] : h.counts()) counts[std::to_string(p)] = c;
    j["counts"] = counts;
    j["unresolved"] = h.unresolved();
    j["trials"] = h.trials();
    if (const auto m = h.mode_period())
        j["mode_period"] = *m;
    else
        j["mode_period"] = nullptr;
    j["mode_probability"] = h.mode_probability();
    j["mean_period"] = h.mean_period();
    j["stddev_period"] = h.stddev_period();
    return j.dump(2) + "\n";
}

std::string format_svg_histogram(const Histogram& h, const SvgOptions& options) {
    struct Bar {
        std::string label;
        std::string key;
        double probability;
    };
    std::vector<Bar> bars;
    std::uint64_t overflow = 0;
    const double trials = h.trials() ? static_cast<double>(h.trials()) : 1.0;
    for (auto [p, c] : h.counts()) {
        if (p > options.max_period) {
            overflow += c;
            continue;
        }
        bars.push_back({std::to_string(p), std::to_string(p), static_cast<double>(c) / trials});
    }
    if (overflow) bars.push_back({"&gt;" + std::to_string(options.max_period), "overflow", overflow / trials});
    if (h.unresolved()) bars.push_back({"∞", "unresolved", h.unresolved() / trials});

    constexpr double width = 640, height = 360, left = 56, right = 16, top = 36, bottom = 48;
    const double plot_w = width - left - right, plot_h = height - top - bottom;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"360\" viewBox=\"0 0 640 360\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"640\" height=\"360\" fill=\"white\"/>\n";
    if (!options.title.empty())
        svg << "<text x=\"320\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
            << xml_escape(options.title) << "</text>\n";
    for (int k = 0; k <= 4; ++k) {
        const double frac = k / 4.0, y = top + plot_h * (1.0 - frac);
        svg << "<line x1=\"" << fixed2(left) << "\" y1=\"" << fixed2(y) << "\" x2=\"" << fixed2(left + plot_w)
            << "\" y2=\"" << fixed2(y) << "\" stroke=\"#dddddd\"/>\n";
        svg << "<text x=\"" << fixed2(left - 6) << "\" y=\"" << fixed2(y + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << fixed2(frac) << "</text>\n";
    }
    svg << "<line x1=\"" << fixed2(left) << "\" y1=\"" << fixed2(top + plot_h) << "\" x2=\"" << fixed2(left + plot_w)
        << "\" y2=\"" << fixed2(top + plot_h) << "\" stroke=\"black\"/>\n";
    const double slot = bars.empty() ? plot_w : plot_w / static_cast<double>(bars.size());
    for (std::size_t b = 0; b < bars.size(); ++b) {
        const double bh = bars[b].probability * plot_h;
        const double x = left + slot * static_cast<double>(b) + slot * 0.1;
        svg << "<rect class=\"bar\" data-period=\"" << bars[b].key << "\" data-probability=\""
            << fixed6(bars[b].probability) << "\" x=\"" << fixed2(x) << "\" y=\"" << fixed2(top + plot_h - bh)
            << "\" width=\"" << fixed2(slot * 0.8) << "\" height=\"" << fixed2(bh) << "\" fill=\"#4477aa\"/>\n";
        svg << "<text x=\"" << fixed2(x + slot * 0.4) << "\" y=\"" << fixed2(top + plot_h + 16)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << bars[b].label << "</text>\n";
    }
    svg << "<text x=\"" << fixed2(left + plot_w / 2) << "\" y=\"" << fixed2(height - 8)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">cycle length</text>\n";
    svg << "<text x=\"14\" y=\"" << fixed2(top + plot_h / 2) << "\" transform=\"rotate(-90 14 "
        << fixed2(top + plot_h / 2)
        << ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">probability</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit_rows_csv(const ExperimentResult& result, const std::filesystem::path& path) {
    write_text_file(path, format_rows_csv(result));
}

void emit_histogram_csv(const Histogram& h, const std::filesystem::path& path) {
    write_text_file(path, format_histogram_csv(h));
}

void emit_json_summary(const ExperimentSpec& spec, const Histogram& h, const std::filesystem::path& path) {
    write_text_file(path, format_json_summary(spec, h));
}

void emit_svg_histogram(const Histogram& h, const std::filesystem::path& path, const SvgOptions& options) {
    write_text_file(path, format_svg_histogram(h, options));
}

}  // namespace cvhnn
