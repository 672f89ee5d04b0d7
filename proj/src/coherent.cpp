#include "gblab/coherent.hpp"

#include <cmath>
#include <sstream>

namespace gblab::coherent {

namespace {

constexpr std::size_t dense_conjugation_limit = 2048;

DenseMatrix single_mode_lowering(std::size_t radix) {
    DenseMatrix a(radix);
    for (std::size_t n = 1; n < radix; ++n) {
        a.at(n - 1, n) = std::sqrt(double(n));
    }
    return a;
}

// Single-mode displacement factor. For the longitudinal mode the generator
// is conj(alpha) a - alpha a^dag; for the scalar mode the sign choice of G0
// turns it into conj(alpha) a + alpha a^dag once the a0 = -a sign is folded.
DenseMatrix displacement_factor(std::size_t radix, cx alpha, Polarization pol) {
    const DenseMatrix a = single_mode_lowering(radix);
    DenseMatrix x(radix);
    const cx ca = std::conj(alpha);
    const double creation_sign = pol == Polarization::scalar ? 1.0 : -1.0;
    for (std::size_t i = 0; i < radix; ++i) {
        for (std::size_t j = 0; j < radix; ++j) {
            x.at(i, j) = ca * a.at(i, j) + creation_sign * alpha * a.at(j, i);
        }
    }
    return expm(x);
}

Operator displacement(const BasisPtr& b, const CoherentSpec& spec, bool scalar_factors,
                      bool longitudinal_factors) {
    spec.validate(*b);
    const std::size_t radix = static_cast<std::size_t>(b->n_max()) + 1;
    std::vector<std::pair<std::size_t, DenseMatrix>> factors;
    for (std::size_t i = 0; i < spec.momenta.size(); ++i) {
        if (spec.alpha[i] == cx{0.0, 0.0}) continue;
        if (longitudinal_factors) {
            const auto mi = b->find_mode(spec.momenta[i], Polarization::longitudinal);
            factors.emplace_back(*mi, displacement_factor(radix, spec.alpha[i],
                                                          Polarization::longitudinal));
        }
        if (scalar_factors) {
            const auto mi = b->find_mode(spec.momenta[i], Polarization::scalar);
            factors.emplace_back(*mi, displacement_factor(radix, spec.alpha[i],
                                                          Polarization::scalar));
        }
    }
    if (factors.empty()) return Operator::identity(b);
    return embed_mode_factors(b, factors);
}

Operator conjugate(const Operator& gi, const Operator& a, const Operator& g) {
    if (a.dim() <= dense_conjugation_limit) {
        const DenseMatrix ag = sparse_times_dense(a, to_dense(g));
        return from_dense(a.basis(), gemm(to_dense(gi), ag));
    }
    return gi * (a * g);
}

Operator pair_difference(const BasisPtr& b, const Vec3& k, bool daggered) {
    const Operator a0 = annihilator(b, Mode(k, Polarization::scalar));
    const Operator a3 = annihilator(b, Mode(k, Polarization::longitudinal));
    if (daggered) return eta_adjoint(a0) - eta_adjoint(a3);
    return a0 - a3;
}

}  // namespace

void CoherentSpec::validate(const FockBasis& b) const {
    if (momenta.size() != alpha.size()) {
        throw std::invalid_argument("CoherentSpec: alpha list must align with momenta");
    }
    double total = 0.0;
    for (const cx& a : alpha) total += std::norm(a);
    const double budget = guard_fraction * b.n_max();
    if (total > budget) {
        std::ostringstream os;
        os << "truncation-adequacy guard violated: sum |alpha|^2 = " << total
           << " exceeds " << guard_fraction << " * n_max = " << budget;
        throw GuardError(os.str());
    }
    for (const Vec3& k : momenta) {
        if (!b.contains(k, Polarization::scalar) || !b.contains(k, Polarization::longitudinal)) {
            throw std::invalid_argument(
                "CoherentSpec: basis lacks the scalar/longitudinal pair for a momentum");
        }
    }
}

CoherentSpec CoherentSpec::negated() const {
    CoherentSpec out = *this;
    for (cx& a : out.alpha) a = -a;
    return out;
}

double CoherentSpec::max_abs_alpha() const {
    double m = 0.0;
    for (const cx& a : alpha) m = std::max(m, std::abs(a));
    return m;
}

Operator displacement_g3(const BasisPtr& b, const CoherentSpec& spec) {
    return displacement(b, spec, false, true);
}

Operator displacement_g0(const BasisPtr& b, const CoherentSpec& spec) {
    return displacement(b, spec, true, false);
}

Operator displacement_pair(const BasisPtr& b, const CoherentSpec& spec) {
    return displacement(b, spec, true, true);
}

double pseudo_unitarity_residual(const Operator& g, int margin) {
    const Operator res = eta_adjoint(g) * g - Operator::identity(g.basis());
    return res.masked_max_abs(safe_mask(g.basis(), margin));
}

State coherent_state_series(const BasisPtr& b, const CoherentSpec& spec, int order) {
    spec.validate(*b);
    const int n_max = b->n_max();
    const std::size_t n_modes = b->n_modes();

    // per-mode coefficient tables; modes outside the coherent pairs pin n = 0
    std::vector<std::vector<cx>> table(n_modes, std::vector<cx>(n_max + 1, cx{0.0, 0.0}));
    std::vector<unsigned char> pair_mode(n_modes, 0);
    for (auto& t : table) t[0] = 1.0;
    for (std::size_t i = 0; i < spec.momenta.size(); ++i) {
        const std::size_t m0 = *b->find_mode(spec.momenta[i], Polarization::scalar);
        const std::size_t m3 = *b->find_mode(spec.momenta[i], Polarization::longitudinal);
        pair_mode[m0] = pair_mode[m3] = 1;
        cx c0{1.0, 0.0}, c3{1.0, 0.0};
        for (int n = 0; n <= n_max; ++n) {
            table[m0][n] = c0;
            table[m3][n] = c3;
            c0 *= -spec.alpha[i] / std::sqrt(double(n) + 1.0);
            c3 *= spec.alpha[i] / std::sqrt(double(n) + 1.0);
        }
    }

    State out(b);
    for (std::size_t s = 0; s < b->dim(); ++s) {
        cx amp{1.0, 0.0};
        int degree = 0;
        for (std::size_t m = 0; m < n_modes; ++m) {
            const int n = b->occupation(s, m);
            amp *= table[m][n];
            if (amp == cx{0.0, 0.0}) break;
            if (pair_mode[m]) degree += n;
        }
        if (order >= 0 && degree > order) continue;
        out[s] = amp;
    }
    return out;
}

State coherent_state_displaced(const BasisPtr& b, const CoherentSpec& spec) {
    const CoherentSpec neg = spec.negated();
    const Operator g3_inv = displacement_g3(b, neg);
    const Operator g0_inv = displacement_g0(b, neg);
    return g3_inv.apply(g0_inv.apply(State::vacuum(b)));
}

double gb_residual(const BasisPtr& b, const State& state) {
    require_same_basis(b, state.basis(), "gb_residual");
    double worst = 0.0;
    std::vector<Vec3> seen;
    for (const Mode& m : b->modes()) {
        bool dup = false;
        for (const Vec3& k : seen) dup = dup || k == m.momentum;
        if (dup) continue;
        seen.push_back(m.momentum);
        if (!b->contains(m.momentum, Polarization::scalar) ||
            !b->contains(m.momentum, Polarization::longitudinal)) {
            continue;
        }
        const Operator l = pair_difference(b, m.momentum, false);
        worst = std::max(worst, l.apply(state).euclidean_norm());
    }
    return worst;
}

State physical_state(const BasisPtr& b, const PhysicalStateSpec& spec) {
    spec.coherent.validate(*b);
    if (spec.transverse.size() != spec.coherent.momenta.size()) {
        throw std::invalid_argument("physical_state: transverse list must align with momenta");
    }
    State pair = coherent_state_series(b, spec.coherent);
    // fold in the transverse number-state factors by shifting the pair-state
    // amplitudes to the requested occupations
    std::size_t offset = 0;
    for (std::size_t i = 0; i < spec.coherent.momenta.size(); ++i) {
        const auto& [n1, n2] = spec.transverse[i];
        if (n1 < 0 || n2 < 0 || n1 > b->n_max() || n2 > b->n_max()) {
            throw std::invalid_argument("physical_state: transverse occupation outside cutoff");
        }
        const auto m1 = b->find_mode(spec.coherent.momenta[i], Polarization::transverse1);
        const auto m2 = b->find_mode(spec.coherent.momenta[i], Polarization::transverse2);
        if ((n1 > 0 && !m1) || (n2 > 0 && !m2)) {
            throw std::invalid_argument("physical_state: transverse mode missing from basis");
        }
        if (m1) offset += static_cast<std::size_t>(n1) * b->stride(*m1);
        if (m2) offset += static_cast<std::size_t>(n2) * b->stride(*m2);
    }
    if (offset == 0) return pair;
    State out(b);
    for (std::size_t s = 0; s < b->dim(); ++s) {
        if (pair[s] != cx{0.0, 0.0}) out[s + offset] = pair[s];
    }
    return out;
}

State r_series_state(const BasisPtr& b, const State& base, std::span<const Vec3> momenta,
                     std::span<const cx> c, int order) {
    require_same_basis(b, base.basis(), "r_series_state");
    if (momenta.size() != c.size()) {
        throw std::invalid_argument("r_series_state: coefficient list must align with momenta");
    }
    if (order < 0 || order > b->n_max()) {
        throw std::invalid_argument("r_series_state: order must lie in [0, n_max]");
    }
    Operator big_l_dag = Operator::zero(b);
    for (std::size_t i = 0; i < momenta.size(); ++i) {
        big_l_dag = big_l_dag + c[i] * pair_difference(b, momenta[i], true);
    }
    State result = base;
    State term = base;
    for (int m = 1; m <= order; ++m) {
        term = big_l_dag.apply(term);
        term.scale(cx{1.0 / double(m), 0.0});
        result += term;
    }
    return result;
}

Operator shifted_operator(const BasisPtr& b, const Operator& a, const CoherentSpec& spec) {
    require_same_basis(b, a.basis(), "shifted_operator");
    const Operator g = displacement_pair(b, spec);
    const Operator gi = displacement_pair(b, spec.negated());
    return conjugate(gi, a, g);
}

TranslationReport translation_invariance_check(const BasisPtr& b, const CoherentSpec& spec,
                                               double tolerance) {
    const Operator g = displacement_pair(b, spec);
    const Operator gi = displacement_pair(b, spec.negated());
    const int margin = displacement_safe_margin(b->n_max(), spec.max_abs_alpha(), tolerance);
    const auto mask = safe_mask(b, margin);
    TranslationReport rep{0.0, 0.0, margin};
    for (const Vec3& k : spec.momenta) {
        const Operator l = pair_difference(b, k, false);
        const Operator ld = pair_difference(b, k, true);
        rep.residual_l =
            std::max(rep.residual_l, (conjugate(gi, l, g) - l).masked_max_abs(mask));
        rep.residual_ldag =
            std::max(rep.residual_ldag, (conjugate(gi, ld, g) - ld).masked_max_abs(mask));
    }
    return rep;
}

int displacement_safe_margin(int n_max, double max_abs_alpha, double tolerance) {
    const double x = max_abs_alpha * std::sqrt(double(n_max));
    double term = 1.0;
    for (int m = 0; m <= n_max; ++m) {
        if (term * term <= tolerance / 16.0) return m;
        term *= x / double(m + 1);
    }
    return n_max;
}

}  // namespace gblab::coherent
