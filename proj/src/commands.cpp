#include "gblab/commands.hpp"

#include <cmath>
#include <limits>
#include <cstdio>
#include <ostream>
#include <random>

#include "gblab/algebra.hpp"
#include "gblab/expr.hpp"

namespace gblab::cli {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string momentum_tag(const RunConfig& c, std::size_t i) {
    return c.momenta.size() > 1 ? " @k" + std::to_string(i) : "";
}

State random_state(const BasisPtr& b, std::mt19937& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    State s(b);
    for (std::size_t i = 0; i < b->dim(); ++i) s[i] = cx{gauss(rng), gauss(rng)};
    const double n = s.euclidean_norm();
    if (n > 0) s.scale(cx{1.0 / n, 0.0});
    return s;
}

// fock_core invariants on a small basis: the 16-pair commutator table, the
// metric, the eta-adjoint involution/anti-homomorphism and its pairing
// property on random states.
void fock_invariant_checks(Report& rep, const RunConfig& config, const BasisPtr& basis) {
    Stopwatch sw;
    const auto mask1 = safe_mask(basis, 1);
    const Metric eta(basis);
    const double g[4] = {1.0, -1.0, -1.0, -1.0};

    double table_worst = 0.0;
    const Vec3 k = config.momenta.front();
    for (int l1 = 0; l1 < 4; ++l1) {
        for (int l2 = 0; l2 < 4; ++l2) {
            const Operator a1 = annihilator(basis, Mode(k, static_cast<Polarization>(l1)));
            const Operator a2 = annihilator(basis, Mode(k, static_cast<Polarization>(l2)));
            const double expected = l1 == l2 ? -g[l1] : 0.0;
            const Operator res = commutator(a1, eta_adjoint(a2)) -
                                 cx{expected, 0.0} * Operator::identity(basis);
            table_worst = std::max(table_worst, res.masked_max_abs(mask1));
        }
    }
    rep.add_residual("commutator_table", table_worst, config.tol("commutator_table"), sw.lap(),
                     "[a_l, a_l'^dag] + g_ll' I on the margin-1 subspace, all 16 pairs");

    const Operator eta_op = eta.as_operator();
    rep.add_residual("metric_square", (eta_op * eta_op - Operator::identity(basis)).max_abs_entry(),
                     config.tol("metric_square"), sw.lap());

    std::mt19937 rng(12345);
    const State phi = random_state(basis, rng);
    const State psi = random_state(basis, rng);
    Operator sample = Operator::zero(basis);
    for (int l = 0; l < 4; ++l) {
        const Operator a = annihilator(basis, Mode(k, static_cast<Polarization>(l)));
        sample = sample + cx{0.25 * (l + 1), 0.125} * a + cx{0.5, -0.25 * l} * eta_adjoint(a);
    }
    rep.add_residual("eta_involution", (eta_adjoint(eta_adjoint(sample)) - sample).max_abs_entry(),
                     config.tol("eta_involution"), sw.lap(),
                     "A^ddag^ddag - A on a random ladder polynomial");

    const cx lhs = physical_inner(phi, sample.apply(psi));
    const cx rhs = physical_inner(eta_adjoint(sample).apply(phi), psi);
    const double scale = std::max(1.0, std::abs(lhs));
    rep.add_residual("adjoint_pairing", std::abs(lhs - rhs) / scale,
                     config.tol("adjoint_pairing"), sw.lap(),
                     "<phi, A psi> vs <A^ddag phi, psi>, relative");
}

// Per-momentum gb-check work; tagged checks are appended to the report.
void gb_check_sector(Report& rep, const RunConfig& config, std::size_t i) {
    const std::string tag = momentum_tag(config, i);
    const Vec3 k = config.momenta[i];
    const double omega = norm3(k);
    const double weight = config.weights[i];
    const auto& [n1, n2] = config.transverse[i];
    const coherent::CoherentSpec spec = config.coherent_spec_at(i);
    Stopwatch sw;

    // displacement-path checks on the scalar/longitudinal pair basis
    const BasisPtr pair =
        build_basis(scalar_longitudinal_pair(std::span(&k, 1)), config.n_max,
                    config.dimension_bound);
    const State series = coherent::coherent_state_series(pair, spec, config.series_order);
    rep.add_residual("coherent_norm" + tag, std::abs(physical_inner(series, series) - cx{1.0, 0.0}),
                     config.tol("coherent_norm"), sw.lap(),
                     "physical <alpha|alpha> vs 1, exact series path");

    const Operator a3 = annihilator(pair, Mode(k, Polarization::longitudinal));
    State eig = a3.apply(series);
    eig.axpy(-spec.alpha[0], series);
    rep.add_residual("coherent_eigenvalue" + tag, eig.euclidean_norm(),
                     config.tol("coherent_eigenvalue"), sw.lap(),
                     "Euclidean |a3|alpha> - alpha|alpha>|");

    const State displaced = coherent::coherent_state_displaced(pair, spec);
    rep.add_residual("series_vs_displacement" + tag, (displaced - series).euclidean_norm(),
                     config.tol("series_vs_displacement"), sw.lap());

    const int dmargin = coherent::displacement_safe_margin(config.n_max, spec.max_abs_alpha(),
                                                           config.tol("pseudo_unitarity"));
    rep.add_residual("pseudo_unitarity" + tag,
                     coherent::pseudo_unitarity_residual(coherent::displacement_pair(pair, spec),
                                                         dmargin),
                     config.tol("pseudo_unitarity"), sw.lap(),
                     "G^ddag G - I, margin " + std::to_string(dmargin));

    const auto trans = coherent::translation_invariance_check(
        pair, spec, config.tol("translation_invariance"));
    rep.add_residual("translation_invariance" + tag,
                     std::max(trans.residual_l, trans.residual_ldag),
                     config.tol("translation_invariance"), sw.lap(),
                     "conjugated L and L^dag vs themselves, margin " +
                         std::to_string(trans.margin));

    // state-level checks on the four-polarization basis
    const BasisPtr full = build_basis(all_polarizations(std::span(&k, 1)), config.n_max,
                                      config.dimension_bound);
    const State phys = coherent::physical_state(full, config.physical_spec_at(i));
    rep.add_residual("gb_residual" + tag, coherent::gb_residual(full, phys),
                     config.tol("gb_residual"), sw.lap(),
                     "Euclidean |(a0 - a3)|psi>|, exact series path");

    const algebra::GeneratorSet su11 = algebra::su11_generators(full, k);
    rep.add_residual("k0_expectation" + tag, std::abs(expectation(phys, su11.zero)),
                     config.tol("k0_expectation"), sw.lap());

    const algebra::GeneratorSet su2 = algebra::su2_generators(full, k);
    rep.add_residual("j0_expectation" + tag,
                     std::abs(expectation(phys, su2.zero) - cx{0.5 * (n1 + n2), 0.0}),
                     config.tol("j0_expectation"), sw.lap());

    const double w = weight;
    const algebra::HamiltonianSpec ham = algebra::hamiltonian(full, std::span(&w, 1));
    rep.add_residual("transverse_energy" + tag,
                     std::abs(expectation(phys, ham.h) - cx{w * omega * (n1 + n2), 0.0}),
                     config.tol("transverse_energy"), sw.lap(),
                     "<H> vs w*omega*(n1+n2) = " + fmt(w * omega * (n1 + n2)));

    // r-series correspondence at matched truncation order
    const State base = State::vacuum(pair);
    const cx c0 = -spec.alpha[0];
    const State r_state =
        coherent::r_series_state(pair, base, std::span(&k, 1), std::span(&c0, 1), config.n_max);
    const State series_matched = coherent::coherent_state_series(pair, spec, config.n_max);
    rep.add_residual("r_series_match" + tag, (r_state - series_matched).euclidean_norm(),
                     config.tol("r_series_match"), sw.lap(),
                     "operator route vs closed-form route at order n_max");
}

void write_csv_row(std::ostream& os, std::span<const std::string> cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) os << ',';
        os << cells[i];
    }
    os << '\n';
}

}  // namespace

Report cmd_verify_algebra(const RunConfig& config) {
    Report rep("verify-algebra", config.echo());
    const BasisPtr basis =
        build_basis(all_polarizations(config.momenta), config.n_max, config.dimension_bound);

    fock_invariant_checks(rep, config, basis);

    Stopwatch sw;
    const algebra::AlgebraReport alg =
        algebra::verify_algebra(basis, config.margin, config.tol("algebra_identity"));
    const double elapsed = sw.lap();
    if (alg.safe_subspace_trivial) {
        rep.add_warning("margin " + std::to_string(config.margin) +
                        " leaves at most the vacuum in the safe subspace; the algebra "
                        "identities hold trivially");
    }
    rep.add_residual("algebra_suite", alg.worst(), alg.tolerance, elapsed,
                     std::to_string(alg.identities.size()) + " bracket identities, margin " +
                         std::to_string(alg.margin));

    nlohmann::ordered_json identities;
    for (const auto& id : alg.identities) {
        identities[id.name] = {{"max_residual", id.max_residual}, {"pass", id.pass}};
    }
    rep.attach("algebra_identities", std::move(identities));
    return rep;
}

Report cmd_gb_check(const RunConfig& config) {
    Report rep("gb-check", config.echo());
    // the adequacy guard is a property of the whole momentum set
    double total = 0.0;
    for (const cx& a : config.alpha) total += std::norm(a);
    if (total > config.guard_fraction * config.n_max) {
        rep.add_failure("adequacy_guard",
                        "sum |alpha|^2 = " + fmt(total) + " exceeds " +
                            fmt(config.guard_fraction) + " * n_max = " +
                            fmt(config.guard_fraction * config.n_max));
        return rep;
    }
    for (std::size_t i = 0; i < config.momenta.size(); ++i) {
        try {
            gb_check_sector(rep, config, i);
        } catch (const coherent::GuardError& e) {
            rep.add_failure("adequacy_guard" + momentum_tag(config, i), e.what());
        }
    }
    return rep;
}

Report cmd_expectation(const RunConfig& config, bool flip_signature, std::ostream* csv) {
    Report rep("expectation", config.echo());
    if (!config.has_grid) {
        rep.add_failure("grid", "config has no 'grid' section");
        return rep;
    }
    Stopwatch sw;
    const field::ModeSet modeset = config.modeset();
    const coherent::CoherentSpec spec = config.coherent_spec();

    // per-momentum sector states; <a> on a product state factorizes exactly
    std::vector<field::ModeAmplitudes> amps, ref_amps;
    try {
        for (std::size_t i = 0; i < config.momenta.size(); ++i) {
            const BasisPtr full =
                build_basis(all_polarizations(std::span(&config.momenta[i], 1)), config.n_max,
                            config.dimension_bound);
            const State psi = coherent::physical_state(full, config.physical_spec_at(i));
            coherent::PhysicalStateSpec ref_spec = config.physical_spec_at(i);
            ref_spec.coherent.alpha[0] = cx{0.0, 0.0};
            const State ref = coherent::physical_state(full, ref_spec);
            const auto a = field::extract_amplitudes(psi, config.modeset_at(i));
            const auto r = field::extract_amplitudes(ref, config.modeset_at(i));
            amps.insert(amps.end(), a.begin(), a.end());
            ref_amps.insert(ref_amps.end(), r.begin(), r.end());
        }
    } catch (const coherent::GuardError& e) {
        rep.add_failure("adequacy_guard", e.what());
        return rep;
    }

    const std::vector<field::SpacetimePoint> grid = config.grid.make_points();
    const auto split = field::check_gauge_split(amps, ref_amps, spec, modeset, grid,
                                                flip_signature, csv != nullptr);
    rep.add_residual("gauge_split", split.max_deviation, config.tol("gauge_split"), sw.lap(),
                     flip_signature ? "signature lowering flipped (negative control)"
                                    : std::to_string(grid.size()) + " grid points");
    rep.add_residual("expectation_imag", split.max_imag, config.tol("expectation_imag"),
                     sw.lap(), "largest imaginary part discarded in <A^mu>");

    // wave-equation residual of the gauge function on a probe subset
    std::vector<field::SpacetimePoint> probes;
    for (std::size_t i = 0; i < grid.size(); i += std::max<std::size_t>(1, grid.size() / 16)) {
        probes.push_back(grid[i]);
    }
    const double h = config.fd_wave_step;
    const double res_h = field::wave_residual_fd(spec, modeset, probes, h);
    rep.add_residual("wave_equation_fd", res_h, config.tol("wave_equation_fd"), sw.lap(),
                     "relative |box Lambda|, step " + fmt(h));

    // convergence order of the stencil, measured where the h^2 term cannot
    // vanish: axis-aligned null momenta zero the symmetric difference exactly
    const coherent::CoherentSpec probe_spec{{Vec3{0.3, 0.4, 1.2}}, {cx{0.5, 0.0}}, 1e9};
    const field::ModeSet probe_set({{Vec3{0.3, 0.4, 1.2}, 1.0}});
    const double probe_h = field::wave_residual_fd(probe_spec, probe_set, probes, h);
    const double probe_h2 = field::wave_residual_fd(probe_spec, probe_set, probes, h / 2.0);
    rep.add_at_least("fd_halving_factor", probe_h / probe_h2, config.tol("fd_halving_factor"),
                     sw.lap(), "box residual reduction on halving the step, generic momentum");

    rep.add_residual("gradient_fd", field::gradient_fd_error(spec, modeset, probes,
                                                             config.fd_gradient_step),
                     config.tol("gradient_fd"), sw.lap(),
                     "analytic gradient vs central differences, step " +
                         fmt(config.fd_gradient_step));

    if (csv) {
        *csv << "t,x,y,z,mu,A,A_T,dLambda,deviation\n";
        for (const auto& row : split.rows) {
            write_csv_row(*csv, std::vector<std::string>{
                                    fmt(row.x.t), fmt(row.x.x), fmt(row.x.y), fmt(row.x.z),
                                    std::to_string(row.mu), fmt(row.a_state),
                                    fmt(row.a_reference), fmt(row.grad_lambda),
                                    fmt(row.deviation)});
        }
    }
    return rep;
}

Report cmd_sweep(const RunConfig& config, const std::string& param,
                 const std::vector<double>& values, std::ostream& csv) {
    Report rep("sweep", config.echo());
    if (param != "n_max" && param != "alpha") {
        throw ConfigError("unknown sweep parameter '" + param + "'; expected n_max or alpha");
    }
    if (values.empty()) {
        throw ConfigError("sweep requires a non-empty value list");
    }

    const std::vector<std::string> columns{"coherent_norm", "coherent_eigenvalue",
                                           "series_vs_displacement", "pseudo_unitarity",
                                           "translation_invariance", "gb_residual",
                                           "k0_expectation", "transverse_energy"};
    std::vector<std::string> header{param};
    header.insert(header.end(), columns.begin(), columns.end());
    write_csv_row(csv, header);

    std::vector<double> series_path_history;
    for (const double value : values) {
        RunConfig point = config;
        if (param == "n_max") {
            point.n_max = static_cast<int>(value);
            if (point.n_max < 1 || double(point.n_max) != value) {
                throw ConfigError("n_max sweep values must be positive integers");
            }
        } else {
            for (cx& a : point.alpha) {
                const double mag = std::abs(a);
                a = mag > 0.0 ? a * (value / mag) : cx{value, 0.0};
            }
        }
        const Report sub = cmd_gb_check(point);
        std::vector<std::string> row{param == "n_max" ? std::to_string(point.n_max)
                                                      : fmt(value)};
        for (const std::string& col : columns) {
            double worst = 0.0;
            bool found = false;
            for (const Check& c : sub.checks()) {
                if (c.name.rfind(col, 0) == 0) {
                    worst = std::max(worst, c.measured);
                    found = true;
                }
            }
            row.push_back(found ? fmt(worst) : "nan");
            if (!found) worst = std::numeric_limits<double>::quiet_NaN();
            if (col == "series_vs_displacement") series_path_history.push_back(worst);
        }
        write_csv_row(csv, row);

        const std::string tag = param + "=" + row.front();
        if (sub.overall_pass()) {
            rep.add_info("sweep_point " + tag, 1.0, "all gb-check residuals within tolerance");
        } else {
            for (const Check& c : sub.checks()) {
                if (!c.pass) {
                    rep.add_residual(c.name + " @" + tag, c.measured, c.tolerance, 0.0, c.note);
                }
            }
        }
    }

    if (param == "n_max") {
        for (std::size_t i = 1; i < series_path_history.size(); ++i) {
            if (series_path_history[i] > series_path_history[i - 1] * 1.5 &&
                series_path_history[i] > 1e-14) {
                rep.add_warning(
                    "coherent-path residual did not decrease monotonically with n_max "
                    "(soft check)");
                break;
            }
        }
    }
    return rep;
}

Report cmd_eval(const RunConfig& config, const std::string& expression, bool on_state) {
    Report rep("eval", config.echo());
    const expr::Ast ast = expr::parse(expression);
    const BasisPtr basis =
        build_basis(all_polarizations(config.momenta), config.n_max, config.dimension_bound);
    Stopwatch sw;
    const Operator op = expr::eval(*ast, basis, config.momenta);
    const double elapsed = sw.lap();

    rep.add_info("nnz", double(op.nnz()), "canonical form " + expr::print_canonical(*ast));
    rep.add_info("max_abs_entry", op.max_abs_entry());
    rep.add_info("eta_self_adjoint_residual", (op - eta_adjoint(op)).max_abs_entry(),
                 "0 means the operator is its own physical adjoint");

    const int degree = std::min(expr::ladder_degree(*ast), config.n_max);
    const auto mask = safe_mask(basis, degree);
    const std::vector<cx> diag = op.diagonal();
    cx id_coeff{0.0, 0.0};
    for (std::size_t s = 0; s < basis->dim(); ++s) {
        if (mask[s]) {
            id_coeff = diag[s];
            break;
        }
    }
    const Operator dev = op - id_coeff * Operator::identity(basis);
    const double id_residual = dev.masked_max_abs(mask);
    std::string note = "distance to " + fmt(id_coeff.real()) +
                       (id_coeff.imag() != 0.0 ? "+" + fmt(id_coeff.imag()) + "i" : "") +
                       " * I on the margin-" + std::to_string(degree) + " subspace";
    if (id_residual <= 1e-12) {
        note += "; the operator IS that multiple of the identity there";
    }
    rep.add_info("identity_proportionality", id_residual, note);
    rep.add_info("eval_wall_time_s", elapsed);

    if (on_state) {
        try {
            const State psi = coherent::physical_state(basis, config.physical_spec());
            const cx e = expectation(psi, op);
            rep.add_info("expectation_re", e.real(),
                         "physical expectation on the configured physical state");
            rep.add_info("expectation_im", e.imag());
        } catch (const coherent::GuardError& e) {
            rep.add_failure("adequacy_guard", e.what());
        }
    }
    return rep;
}

}  // namespace gblab::cli
