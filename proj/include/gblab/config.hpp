#ifndef GBLAB_CONFIG_HPP
#define GBLAB_CONFIG_HPP

#include <map>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "gblab/coherent.hpp"
#include "gblab/field.hpp"

namespace gblab::cli {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// JSON run configuration shared by all subcommands. Tolerances start from
// the built-in defaults, are overridden by the config file's "tolerances"
// object and then by repeated --tolerance NAME=VALUE flags; every tolerance
// a command uses is echoed in its report.
struct RunConfig {
    std::vector<Vec3> momenta;
    std::vector<double> weights;        // default: 1 per momentum
    int n_max = 8;
    std::vector<cx> alpha;              // aligned with momenta
    std::vector<std::array<int, 2>> transverse;  // default: zeros
    bool has_grid = false;
    field::GridSpec grid;
    std::size_t dimension_bound = FockBasis::default_dimension_bound;
    int margin = 2;                     // safe margin for polynomial identities
    int series_order = -1;              // -1: full occupation box
    double guard_fraction = 0.25;
    double fd_wave_step = 1e-2;
    double fd_gradient_step = 1e-4;
    std::map<std::string, double> tolerances;

    static const std::map<std::string, double>& default_tolerances();
    static RunConfig load_file(const std::string& path);
    static RunConfig from_json(const nlohmann::json& j);

    void apply_tolerance_override(const std::string& name, double value);
    double tol(const std::string& name) const;  // throws ConfigError on unknown name

    coherent::CoherentSpec coherent_spec() const;
    coherent::PhysicalStateSpec physical_spec() const;
    field::ModeSet modeset() const;
    // spec/modeset restricted to one momentum, for per-sector evaluation
    coherent::CoherentSpec coherent_spec_at(std::size_t i) const;
    coherent::PhysicalStateSpec physical_spec_at(std::size_t i) const;
    field::ModeSet modeset_at(std::size_t i) const;

    nlohmann::ordered_json echo() const;
};

}  // namespace gblab::cli

#endif
