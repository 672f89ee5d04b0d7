#include "gblab/config.hpp"

#include <fstream>
#include <set>

namespace gblab::cli {

namespace {

using nlohmann::json;

Vec3 parse_vec3(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 3) {
        throw ConfigError(std::string(what) + " must be a [x, y, z] array");
    }
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

cx parse_complex(const json& j, const char* what) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    throw ConfigError(std::string(what) + " must be a number or a [re, im] pair");
}

}  // namespace

const std::map<std::string, double>& RunConfig::default_tolerances() {
    static const std::map<std::string, double> defaults{
        {"commutator_table", 1e-12},
        {"algebra_identity", 1e-12},
        {"metric_square", 1e-15},
        {"eta_involution", 1e-15},
        {"adjoint_pairing", 1e-12},
        {"coherent_norm", 1e-12},
        {"gb_residual", 1e-10},
        {"k0_expectation", 1e-10},
        {"j0_expectation", 1e-12},
        {"coherent_eigenvalue", 1e-10},
        {"series_vs_displacement", 1e-8},
        {"displacement_conjugation", 1e-8},
        {"pseudo_unitarity", 1e-8},
        {"translation_invariance", 1e-8},
        {"shifted_operator", 1e-8},
        {"transverse_energy", 1e-8},
        {"r_series_match", 1e-12},
        {"gauge_split", 1e-8},
        {"expectation_imag", 1e-10},
        {"wave_equation_fd", 1e-6},
        {"gradient_fd", 1e-6},
        {"fd_halving_factor", 3.5},
        {"negative_control", 1e-3},
    };
    return defaults;
}

RunConfig RunConfig::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config '" + path + "': " + e.what());
    }
    return from_json(j);
}

RunConfig RunConfig::from_json(const json& j) {
    static const std::set<std::string> known{
        "momenta", "weights", "n_max", "alpha", "transverse", "grid",
        "dimension_bound", "margin", "series_order", "guard_fraction",
        "fd_wave_step", "fd_gradient_step", "tolerances",
    };
    if (!j.is_object()) throw ConfigError("config root must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!known.count(key)) throw ConfigError("unknown config key '" + key + "'");
    }

    RunConfig c;
    c.tolerances = default_tolerances();

    if (!j.contains("momenta") || !j["momenta"].is_array() || j["momenta"].empty()) {
        throw ConfigError("config requires a non-empty 'momenta' array");
    }
    for (const auto& m : j["momenta"]) c.momenta.push_back(parse_vec3(m, "momenta entry"));
    for (const Vec3& k : c.momenta) {
        if (norm3(k) == 0.0) throw ConfigError("momenta entries must be nonzero");
    }

    c.weights.assign(c.momenta.size(), 1.0);
    if (j.contains("weights")) {
        const auto& w = j["weights"];
        if (!w.is_array() || w.size() != c.momenta.size()) {
            throw ConfigError("'weights' must align with 'momenta'");
        }
        for (std::size_t i = 0; i < c.momenta.size(); ++i) {
            c.weights[i] = w[i].get<double>();
            if (c.weights[i] <= 0.0) throw ConfigError("weights must be positive");
        }
    }

    if (!j.contains("n_max")) throw ConfigError("config requires 'n_max'");
    c.n_max = j["n_max"].get<int>();
    if (c.n_max < 1) throw ConfigError("'n_max' must be a positive integer");

    c.alpha.assign(c.momenta.size(), cx{0.0, 0.0});
    if (j.contains("alpha")) {
        const auto& a = j["alpha"];
        if (!a.is_array() || a.size() != c.momenta.size()) {
            throw ConfigError("'alpha' must align with 'momenta'");
        }
        for (std::size_t i = 0; i < c.momenta.size(); ++i) {
            c.alpha[i] = parse_complex(a[i], "alpha entry");
        }
    }

    c.transverse.assign(c.momenta.size(), {0, 0});
    if (j.contains("transverse")) {
        const auto& t = j["transverse"];
        if (!t.is_array() || t.size() != c.momenta.size()) {
            throw ConfigError("'transverse' must align with 'momenta'");
        }
        for (std::size_t i = 0; i < c.momenta.size(); ++i) {
            if (!t[i].is_array() || t[i].size() != 2) {
                throw ConfigError("'transverse' entries must be [n1, n2]");
            }
            c.transverse[i] = {t[i][0].get<int>(), t[i][1].get<int>()};
            if (c.transverse[i][0] < 0 || c.transverse[i][1] < 0) {
                throw ConfigError("transverse occupations must be nonnegative");
            }
        }
    }

    if (j.contains("grid")) {
        const auto& g = j["grid"];
        for (const char* key : {"lo", "hi", "points"}) {
            if (!g.contains(key) || !g[key].is_array() || g[key].size() != 4) {
                throw ConfigError("'grid' needs 4-element 'lo', 'hi' and 'points' arrays");
            }
        }
        for (int d = 0; d < 4; ++d) {
            c.grid.lo[d] = g["lo"][d].get<double>();
            c.grid.hi[d] = g["hi"][d].get<double>();
            c.grid.points[d] = g["points"][d].get<int>();
            if (c.grid.points[d] < 1) throw ConfigError("grid points must be >= 1");
        }
        c.has_grid = true;
    }

    if (j.contains("dimension_bound")) {
        c.dimension_bound = j["dimension_bound"].get<std::size_t>();
        if (c.dimension_bound < 2) throw ConfigError("'dimension_bound' too small");
    }
    if (j.contains("margin")) {
        c.margin = j["margin"].get<int>();
        if (c.margin < 0) throw ConfigError("'margin' must be nonnegative");
    }
    if (j.contains("series_order")) c.series_order = j["series_order"].get<int>();
    if (j.contains("guard_fraction")) {
        c.guard_fraction = j["guard_fraction"].get<double>();
        if (c.guard_fraction <= 0.0) throw ConfigError("'guard_fraction' must be positive");
    }
    if (j.contains("fd_wave_step")) c.fd_wave_step = j["fd_wave_step"].get<double>();
    if (j.contains("fd_gradient_step")) c.fd_gradient_step = j["fd_gradient_step"].get<double>();

    if (j.contains("tolerances")) {
        for (const auto& [name, value] : j["tolerances"].items()) {
            if (!c.tolerances.count(name)) {
                throw ConfigError("unknown tolerance name '" + name + "'");
            }
            c.tolerances[name] = value.get<double>();
        }
    }
    return c;
}

void RunConfig::apply_tolerance_override(const std::string& name, double value) {
    if (!tolerances.count(name)) throw ConfigError("unknown tolerance name '" + name + "'");
    tolerances[name] = value;
}

double RunConfig::tol(const std::string& name) const {
    const auto it = tolerances.find(name);
    if (it == tolerances.end()) throw ConfigError("unknown tolerance name '" + name + "'");
    return it->second;
}

coherent::CoherentSpec RunConfig::coherent_spec() const {
    return {momenta, alpha, guard_fraction};
}

coherent::PhysicalStateSpec RunConfig::physical_spec() const {
    return {transverse, coherent_spec()};
}

field::ModeSet RunConfig::modeset() const {
    std::vector<field::WeightedMomentum> wk;
    for (std::size_t i = 0; i < momenta.size(); ++i) wk.push_back({momenta[i], weights[i]});
    return field::ModeSet(std::move(wk));
}

coherent::CoherentSpec RunConfig::coherent_spec_at(std::size_t i) const {
    return {{momenta.at(i)}, {alpha.at(i)}, guard_fraction};
}

coherent::PhysicalStateSpec RunConfig::physical_spec_at(std::size_t i) const {
    return {{transverse.at(i)}, coherent_spec_at(i)};
}

field::ModeSet RunConfig::modeset_at(std::size_t i) const {
    return field::ModeSet({{momenta.at(i), weights.at(i)}});
}

nlohmann::ordered_json RunConfig::echo() const {
    nlohmann::ordered_json j;
    for (const Vec3& k : momenta) j["momenta"].push_back({k[0], k[1], k[2]});
    j["weights"] = weights;
    j["n_max"] = n_max;
    for (const cx& a : alpha) j["alpha"].push_back({a.real(), a.imag()});
    for (const auto& t : transverse) j["transverse"].push_back({t[0], t[1]});
    if (has_grid) {
        j["grid"]["lo"] = grid.lo;
        j["grid"]["hi"] = grid.hi;
        j["grid"]["points"] = grid.points;
    }
    j["dimension_bound"] = dimension_bound;
    j["margin"] = margin;
    j["series_order"] = series_order;
    j["guard_fraction"] = guard_fraction;
    j["fd_wave_step"] = fd_wave_step;
    j["fd_gradient_step"] = fd_gradient_step;
    for (const auto& [name, value] : tolerances) j["tolerances"][name] = value;
    return j;
}

}  // namespace gblab::cli
