#include "gblab/field.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gblab::field {

namespace {

constexpr double two_pi_cubed = 8.0 * std::numbers::pi * std::numbers::pi * std::numbers::pi;

double mode_prefactor(double omega, double weight) {
    return weight / std::sqrt(2.0 * omega * two_pi_cubed);
}

double k_dot_x(const Vec3& k, double omega, const SpacetimePoint& x) {
    return omega * x.t - (k[0] * x.x + k[1] * x.y + k[2] * x.z);
}

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

PolarizationBasis polarization_basis(const Vec3& k) {
    const double omega = norm3(k);
    if (omega == 0.0) throw std::invalid_argument("polarization_basis: zero momentum");
    const Vec3 khat{k[0] / omega, k[1] / omega, k[2] / omega};

    // transverse pair: Gram-Schmidt of the axis least aligned with k
    std::size_t axis = 0;
    for (std::size_t j = 1; j < 3; ++j) {
        if (std::abs(khat[j]) < std::abs(khat[axis])) axis = j;
    }
    Vec3 e1{0.0, 0.0, 0.0};
    e1[axis] = 1.0;
    const double proj = khat[axis];
    for (std::size_t j = 0; j < 3; ++j) e1[j] -= proj * khat[j];
    const double n1 = norm3(e1);
    for (double& c : e1) c /= n1;
    const Vec3 e2 = cross(khat, e1);

    PolarizationBasis out;
    out.eps[0] = {1.0, 0.0, 0.0, 0.0};
    out.eps[1] = {0.0, e1[0], e1[1], e1[2]};
    out.eps[2] = {0.0, e2[0], e2[1], e2[2]};
    out.eps[3] = {0.0, khat[0], khat[1], khat[2]};
    return out;
}

ModeSet::ModeSet(std::vector<WeightedMomentum> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (norm3(entries_[i].k) == 0.0) {
            throw std::invalid_argument("ModeSet: zero momentum");
        }
        if (entries_[i].weight <= 0.0) {
            throw std::invalid_argument("ModeSet: weights must be positive");
        }
        for (std::size_t j = i + 1; j < entries_.size(); ++j) {
            if (entries_[i].k == entries_[j].k) {
                throw std::invalid_argument("ModeSet: duplicate momentum");
            }
        }
    }
}

const WeightedMomentum& ModeSet::weighted(const Vec3& k) const {
    for (const auto& wk : entries_) {
        if (wk.k == k) return wk;
    }
    throw std::invalid_argument("ModeSet: momentum not in modeset");
}

std::vector<ModeAmplitudes> extract_amplitudes(const State& psi, const ModeSet& modeset) {
    const BasisPtr& b = psi.basis();
    std::vector<ModeAmplitudes> out;
    out.reserve(modeset.entries().size());
    for (const WeightedMomentum& wk : modeset.entries()) {
        ModeAmplitudes ma;
        ma.k = wk.k;
        ma.weight = wk.weight;
        for (int l = 0; l < 4; ++l) {
            const Mode m(wk.k, static_cast<Polarization>(l));
            if (!b->find_mode(m)) {
                throw std::invalid_argument("extract_amplitudes: basis does not cover modeset");
            }
            ma.a[l] = expectation(psi, annihilator(b, m));
            ma.a_dag[l] = expectation(psi, creator(b, m));
        }
        out.push_back(ma);
    }
    return out;
}

std::array<double, 4> assemble_A(std::span<const ModeAmplitudes> amps,
                                 const SpacetimePoint& x, double* max_imag) {
    std::array<cx, 4> acc{};
    for (const ModeAmplitudes& ma : amps) {
        const double omega = norm3(ma.k);
        const double pref = mode_prefactor(omega, ma.weight);
        const PolarizationBasis pb = polarization_basis(ma.k);
        const double phase = k_dot_x(ma.k, omega, x);
        const cx em = std::polar(1.0, -phase);
        const cx ep = std::polar(1.0, phase);
        for (int l = 0; l < 4; ++l) {
            const cx term = pref * (ma.a[l] * em + ma.a_dag[l] * ep);
            for (int mu = 0; mu < 4; ++mu) {
                acc[mu] += term * pb.eps[l][mu];
            }
        }
    }
    std::array<double, 4> out{};
    double imag = 0.0;
    for (int mu = 0; mu < 4; ++mu) {
        out[mu] = acc[mu].real();
        imag = std::max(imag, std::abs(acc[mu].imag()));
    }
    if (max_imag) *max_imag = std::max(*max_imag, imag);
    return out;
}

std::array<double, 4> expect_A(const State& psi, const ModeSet& modeset,
                               const SpacetimePoint& x, double* max_imag) {
    const auto amps = extract_amplitudes(psi, modeset);
    return assemble_A(amps, x, max_imag);
}

GaugeFunction gauge_function(const coherent::CoherentSpec& spec, const ModeSet& modeset,
                             const SpacetimePoint& x) {
    GaugeFunction out{0.0, {0.0, 0.0, 0.0, 0.0}};
    for (std::size_t i = 0; i < spec.momenta.size(); ++i) {
        const WeightedMomentum& wk = modeset.weighted(spec.momenta[i]);
        const double omega = norm3(wk.k);
        const double pref = mode_prefactor(omega, wk.weight);
        const cx alpha = spec.alpha[i];
        const cx em = std::polar(1.0, -k_dot_x(wk.k, omega, x));
        out.lambda += pref * 2.0 * (cx{0.0, 1.0} * alpha / omega * em).real();
        // d_mu e^{-ik.x} = -i k_mu e^{-ik.x} with k_mu = (omega, -kvec)
        const std::array<double, 4> k_lower{omega, -wk.k[0], -wk.k[1], -wk.k[2]};
        for (int mu = 0; mu < 4; ++mu) {
            out.grad[mu] += pref * 2.0 * (alpha * k_lower[mu] / omega * em).real();
        }
    }
    return out;
}

std::vector<SpacetimePoint> GridSpec::make_points() const {
    std::vector<SpacetimePoint> out;
    std::array<std::vector<double>, 4> axes;
    for (int d = 0; d < 4; ++d) {
        if (points[d] < 1) throw std::invalid_argument("GridSpec: points must be >= 1");
        for (int i = 0; i < points[d]; ++i) {
            const double f = points[d] == 1 ? 0.0 : double(i) / double(points[d] - 1);
            axes[d].push_back(lo[d] + f * (hi[d] - lo[d]));
        }
    }
    out.reserve(static_cast<std::size_t>(points[0]) * points[1] * points[2] * points[3]);
    for (const double t : axes[0]) {
        for (const double x : axes[1]) {
            for (const double y : axes[2]) {
                for (const double z : axes[3]) {
                    out.push_back({t, x, y, z});
                }
            }
        }
    }
    return out;
}

GaugeSplitReport check_gauge_split(std::span<const ModeAmplitudes> state_amps,
                                   std::span<const ModeAmplitudes> reference_amps,
                                   const coherent::CoherentSpec& spec, const ModeSet& modeset,
                                   std::span<const SpacetimePoint> grid,
                                   bool flip_signature, bool keep_rows) {
    if (state_amps.size() != reference_amps.size()) {
        throw std::invalid_argument("check_gauge_split: amplitude lists differ in length");
    }
    for (std::size_t i = 0; i < state_amps.size(); ++i) {
        for (int l = 1; l <= 2; ++l) {
            if (std::abs(state_amps[i].a[l] - reference_amps[i].a[l]) > 1e-6) {
                throw std::invalid_argument(
                    "check_gauge_split: transverse content of state and reference differ");
            }
        }
    }
    const double spatial_lowering = flip_signature ? 1.0 : -1.0;
    GaugeSplitReport rep;
    for (const SpacetimePoint& x : grid) {
        const auto a_up = assemble_A(state_amps, x, &rep.max_imag);
        const auto at_up = assemble_A(reference_amps, x, &rep.max_imag);
        const GaugeFunction gf = gauge_function(spec, modeset, x);
        for (int mu = 0; mu < 4; ++mu) {
            const double lower = mu == 0 ? 1.0 : spatial_lowering;
            const double a_lo = lower * a_up[mu];
            const double at_lo = lower * at_up[mu];
            const double dev = a_lo - at_lo - gf.grad[mu];
            rep.max_deviation = std::max(rep.max_deviation, std::abs(dev));
            if (keep_rows) {
                rep.rows.push_back({x, mu, a_lo, at_lo, gf.grad[mu], dev});
            }
        }
    }
    return rep;
}

GaugeSplitReport check_gauge_split(const State& state, const State& reference,
                                   const coherent::CoherentSpec& spec, const ModeSet& modeset,
                                   std::span<const SpacetimePoint> grid,
                                   bool flip_signature, bool keep_rows) {
    const auto amps = extract_amplitudes(state, modeset);
    const auto ref_amps = extract_amplitudes(reference, modeset);
    return check_gauge_split(amps, ref_amps, spec, modeset, grid, flip_signature, keep_rows);
}

namespace {

double lambda_at(const coherent::CoherentSpec& spec, const ModeSet& ms,
                 const SpacetimePoint& x) {
    return gauge_function(spec, ms, x).lambda;
}

SpacetimePoint shifted(const SpacetimePoint& x, int dim, double delta) {
    SpacetimePoint out = x;
    switch (dim) {
        case 0: out.t += delta; break;
        case 1: out.x += delta; break;
        case 2: out.y += delta; break;
        default: out.z += delta; break;
    }
    return out;
}

}  // namespace

double wave_residual_fd(const coherent::CoherentSpec& spec, const ModeSet& modeset,
                        std::span<const SpacetimePoint> probes, double h) {
    double max_res = 0.0;
    double max_lambda = 0.0;
    for (const SpacetimePoint& x : probes) {
        const double center = lambda_at(spec, modeset, x);
        max_lambda = std::max(max_lambda, std::abs(center));
        double box = 0.0;
        for (int d = 0; d < 4; ++d) {
            const double second = (lambda_at(spec, modeset, shifted(x, d, h)) - 2.0 * center +
                                   lambda_at(spec, modeset, shifted(x, d, -h))) /
                                  (h * h);
            box += d == 0 ? second : -second;
        }
        max_res = std::max(max_res, std::abs(box));
    }
    return max_lambda == 0.0 ? 0.0 : max_res / max_lambda;
}

double gradient_fd_error(const coherent::CoherentSpec& spec, const ModeSet& modeset,
                         std::span<const SpacetimePoint> probes, double h) {
    double max_err = 0.0;
    double scale = 0.0;
    for (const SpacetimePoint& x : probes) {
        const GaugeFunction gf = gauge_function(spec, modeset, x);
        for (int d = 0; d < 4; ++d) {
            const double fd = (lambda_at(spec, modeset, shifted(x, d, h)) -
                               lambda_at(spec, modeset, shifted(x, d, -h))) /
                              (2.0 * h);
            max_err = std::max(max_err, std::abs(gf.grad[d] - fd));
            scale = std::max(scale, std::abs(gf.grad[d]));
        }
    }
    return scale == 0.0 ? 0.0 : max_err / scale;
}

}  // namespace gblab::field
