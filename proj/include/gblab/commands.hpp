#ifndef GBLAB_COMMANDS_HPP
#define GBLAB_COMMANDS_HPP

#include <optional>

#include "gblab/config.hpp"
#include "gblab/report.hpp"

namespace gblab::cli {

// Bracket-table and fock-invariant verification on the configured basis.
Report cmd_verify_algebra(const RunConfig& config);

// Physical-state and coherent-sector residuals. Guard violations come back
// as failing checks, not exceptions. Displacement-path comparisons run on
// per-momentum scalar/longitudinal pair bases; state-level checks run on the
// per-momentum four-polarization bases.
Report cmd_gb_check(const RunConfig& config);

// Gauge-split verification on the configured spacetime grid; optionally
// dumps per-point deviations as CSV. flip_signature is the negative control.
Report cmd_expectation(const RunConfig& config, bool flip_signature,
                       std::ostream* csv = nullptr);

// Parameter sweep ("n_max" or "alpha" magnitude); one CSV row per value.
Report cmd_sweep(const RunConfig& config, const std::string& param,
                 const std::vector<double>& values, std::ostream& csv);

// Parse/evaluate an operator expression; optionally report its physical
// expectation on the configured physical state.
Report cmd_eval(const RunConfig& config, const std::string& expression, bool on_state);

}  // namespace gblab::cli

#endif
