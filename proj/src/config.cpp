#include "cvhnn/config.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>
#include <toml.hpp>

#include "cvhnn/report.hpp"

namespace cvhnn {

namespace {

template <typename T>
std::optional<T> get(const toml::table& t, std::string_view key, std::string_view origin) {
    const toml::node* node = t.get(key);
    if (!node) return std::nullopt;
    if (auto v = node->value<T>()) return v;
    throw std::invalid_argument(std::string(origin) + ": key '" + std::string(key) + "' has the wrong type");
}

std::string get_string(const toml::table& t, std::string_view key, std::string_view origin, std::string fallback) {
    return get<std::string>(t, key, origin).value_or(std::move(fallback));
}

std::uint64_t positive(std::int64_t v, std::string_view key, std::string_view origin) {
    if (v < 1) throw std::invalid_argument(std::string(origin) + ": '" + std::string(key) + "' must be >= 1");
    return static_cast<std::uint64_t>(v);
}

std::vector<double> number_array(const nlohmann::json& j, const char* key) {
    if (!j.is_array()) throw std::invalid_argument(std::string("network json: '") + key + "' must be an array");
    std::vector<double> out;
    for (const auto& v : j) {
        if (!v.is_number()) throw std::invalid_argument(std::string("network json: '") + key + "' must hold numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

}  // namespace

StructureFamily make_family(const FamilyFlags& f) {
    if (f.structure == "rect")
        return RectGrid{parse_symmetry(f.sym_a), parse_sign(f.sign_a), parse_symmetry(f.sym_b), parse_sign(f.sign_b)};
    if (f.structure == "polar") return PolarGrid{parse_symmetry(f.sym_g), parse_symmetry(f.sym_p)};
    return parse_named_family(f.structure);
}

ExperimentConfig parse_experiment_config(std::string_view toml_text, std::string_view origin) {
    toml::table tbl;
    try {
        tbl = toml::parse(toml_text, origin);
    } catch (const toml::parse_error& e) {
        std::ostringstream msg;
        msg << origin << ": " << e.description() << " (line " << e.source().begin.line << ")";
        throw std::invalid_argument(msg.str());
    }

    static constexpr std::string_view kKnown[] = {"name",   "structure", "sym_a", "sign_a",  "sym_b",    "sign_b",
                                                  "sym_g",  "sym_p",     "threshold", "trials", "n_range", "cap",
                                                  "seed",   "reference"};
    for (const auto& [key, node] : tbl) {
        bool known = false;
        for (auto k : kKnown) known = known || key.str() == k;
        if (!known) throw std::invalid_argument(std::string(origin) + ": unknown key '" + std::string(key.str()) + "'");
    }

    ExperimentConfig cfg;
    cfg.name = get_string(tbl, "name", origin, "experiment");
    FamilyFlags flags;
    flags.structure = get_string(tbl, "structure", origin, "");
    if (flags.structure.empty()) throw std::invalid_argument(std::string(origin) + ": missing 'structure'");
    flags.sym_a = get_string(tbl, "sym_a", origin, flags.sym_a);
    flags.sign_a = get_string(tbl, "sign_a", origin, flags.sign_a);
    flags.sym_b = get_string(tbl, "sym_b", origin, flags.sym_b);
    flags.sign_b = get_string(tbl, "sign_b", origin, flags.sign_b);
    flags.sym_g = get_string(tbl, "sym_g", origin, flags.sym_g);
    flags.sym_p = get_string(tbl, "sym_p", origin, flags.sym_p);
    try {
        cfg.spec.family = make_family(flags);
        cfg.spec.threshold = parse_threshold(get_string(tbl, "threshold", origin, "zero"));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string(origin) + ": " + e.what());
    }
    if (auto v = get<std::int64_t>(tbl, "trials", origin)) cfg.spec.trials = positive(*v, "trials", origin);
    if (auto v = get<std::int64_t>(tbl, "cap", origin)) cfg.spec.cap = positive(*v, "cap", origin);
    if (const toml::node* nr = tbl.get("n_range")) {
        const toml::array* arr = nr->as_array();
        if (!arr || arr->size() != 2 || !(*arr)[0].is_integer() || !(*arr)[1].is_integer())
            throw std::invalid_argument(std::string(origin) + ": 'n_range' must be [min, max]");
        cfg.spec.n_min = positive(*(*arr)[0].value<std::int64_t>(), "n_range", origin);
        cfg.spec.n_max = positive(*(*arr)[1].value<std::int64_t>(), "n_range", origin);
    }
    if (auto v = get<std::int64_t>(tbl, "seed", origin)) {
        if (*v < 0) throw std::invalid_argument(std::string(origin) + ": 'seed' must be non-negative");
        cfg.seed = static_cast<std::uint64_t>(*v);
        cfg.spec.master_seed = *cfg.seed;
    }
    if (const toml::node* ref = tbl.get("reference")) {
        const toml::table* rt = ref->as_table();
        if (!rt) throw std::invalid_argument(std::string(origin) + ": 'reference' must be a table");
        if (auto v = get<std::int64_t>(*rt, "period", origin)) cfg.reference_period = positive(*v, "period", origin);
        if (auto v = get<double>(*rt, "probability", origin)) cfg.reference_probability = *v;
    }
    try {
        cfg.spec.validate();
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string(origin) + ": " + e.what());
    }
    return cfg;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
    std::string text;
    try {
        text = read_text_file(path);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument(e.what());
    }
    return parse_experiment_config(text, path.string());
}

std::string to_toml(const ExperimentConfig& c) {
    std::ostringstream out;
    const auto& s = c.spec;
    out << "name = \"" << c.name << "\"\n";
    out << "structure = \"" << family_name(s.family) << "\"\n";
    if (const auto* g = std::get_if<RectGrid>(&s.family)) {
        out << "sym_a = \"" << to_string(g->sym_a) << "\"\n";
        out << "sign_a = \"" << to_string(g->sign_a) << "\"\n";
        out << "sym_b = \"" << to_string(g->sym_b) << "\"\n";
        out << "sign_b = \"" << to_string(g->sign_b) << "\"\n";
    } else if (const auto* p = std::get_if<PolarGrid>(&s.family)) {
        out << "sym_g = \"" << to_string(p->sym_g) << "\"\n";
        out << "sym_p = \"" << to_string(p->sym_p) << "\"\n";
    }
    out << "threshold = \"" << to_string(s.threshold) << "\"\n";
    out << "trials = " << s.trials << "\n";
    out << "n_range = [" << s.n_min << ", " << s.n_max << "]\n";
    out << "cap = " << s.cap << "\n";
    if (c.seed) out << "seed = " << *c.seed << "\n";
    if (c.reference_period || c.reference_probability) {
        out << "\n[reference]\n";
        if (c.reference_period) out << "period = " << *c.reference_period << "\n";
        if (c.reference_probability) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.2f", *c.reference_probability);
            out << "probability = " << buf << "\n";
        }
    }
    return out.str();
}

Network parse_network_json(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("network json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("re") || !j.contains("im"))
        throw std::invalid_argument("network json: expected an object with 're' and 'im'");
    const auto& re = j["re"];
    const auto& im = j["im"];
    if (!re.is_array() || !im.is_array() || re.size() != im.size() || re.empty())
        throw std::invalid_argument("network json: 're' and 'im' must be non-empty arrays of equal size");
    const std::size_t n = re.size();
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto rrow = number_array(re[i], "re"), irow = number_array(im[i], "im");
        if (rrow.size() != n || irow.size() != n) throw std::invalid_argument("network json: matrix is not square");
        for (std::size_t k = 0; k < n; ++k) m(i, k) = Complex(rrow[k], irow[k]);
    }
    ComplexVector t(n);
    const auto t_re = j.contains("t_re") ? number_array(j["t_re"], "t_re") : std::vector<double>(n, 0.0);
    const auto t_im = j.contains("t_im") ? number_array(j["t_im"], "t_im") : std::vector<double>(n, 0.0);
    if (t_re.size() != n || t_im.size() != n)
        throw std::invalid_argument("network json: threshold length does not match matrix size");
    for (std::size_t i = 0; i < n; ++i) t[i] = Complex(t_re[i], t_im[i]);
    return Network(std::move(m), std::move(t));
}

Network load_network_json(const std::filesystem::path& path) {
    std::string text;
    try {
        text = read_text_file(path);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument(e.what());
    }
    return parse_network_json(text);
}

StateVector parse_state(std::string_view text) {
    std::vector<QuadState> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        std::string tok;
        for (char ch : text.substr(pos, comma - pos))
            if (ch != ' ') tok += ch;
        // Accepted: "+1+i", "1-i", "-1+i", or the short form "+-".
        int re = 0, im = 0;
        if (tok.size() == 2 && (tok[0] == '+' || tok[0] == '-') && (tok[1] == '+' || tok[1] == '-')) {
            re = tok[0] == '+' ? 1 : -1;
            im = tok[1] == '+' ? 1 : -1;
        } else {
            std::string t = tok;
            if (!t.empty() && t[0] != '+' && t[0] != '-') t = "+" + t;
            if (t == "+1+i") re = 1, im = 1;
            else if (t == "+1-i") re = 1, im = -1;
            else if (t == "-1+i") re = -1, im = 1;
            else if (t == "-1-i") re = -1, im = -1;
            else throw std::invalid_argument("state: cannot parse neuron '" + tok + "'");
        }
        out.emplace_back(re, im);
        pos = comma + 1;
    }
    return StateVector(std::move(out));
}

}  // namespace cvhnn
