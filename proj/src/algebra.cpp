#include "gblab/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace gblab::algebra {

namespace {

Mode require_mode(const BasisPtr& b, const Vec3& k, Polarization p, const char* who) {
    Mode m(k, p);
    if (!b->find_mode(m)) {
        throw std::invalid_argument(std::string(who) + ": required mode missing from basis");
    }
    return m;
}

std::vector<Vec3> distinct_momenta(const BasisPtr& b) {
    std::vector<Vec3> out;
    for (const Mode& m : b->modes()) {
        bool seen = false;
        for (const Vec3& k : out) {
            if (k == m.momentum) {
                seen = true;
                break;
            }
        }
        if (!seen) out.push_back(m.momentum);
    }
    return out;
}

}  // namespace

GeneratorSet su2_generators(const BasisPtr& b, const Vec3& k) {
    const Mode m1 = require_mode(b, k, Polarization::transverse1, "su2_generators");
    const Mode m2 = require_mode(b, k, Polarization::transverse2, "su2_generators");
    const Operator a1 = annihilator(b, m1), a2 = annihilator(b, m2);
    const Operator n1 = eta_adjoint(a1) * a1, n2 = eta_adjoint(a2) * a2;
    GeneratorSet g{
        .plus = eta_adjoint(a1) * a2,
        .minus = eta_adjoint(a2) * a1,
        .three = cx{0.5, 0.0} * (n1 - n2),
        .zero = cx{0.5, 0.0} * (n1 + n2),
        .kind = GeneratorKind::su2,
        .momentum = k,
    };
    return g;
}

GeneratorSet su11_generators(const BasisPtr& b, const Vec3& k) {
    const Mode m0 = require_mode(b, k, Polarization::scalar, "su11_generators");
    const Mode m3 = require_mode(b, k, Polarization::longitudinal, "su11_generators");
    const Operator a0 = annihilator(b, m0), a3 = annihilator(b, m3);
    const Operator n0 = eta_adjoint(a0) * a0, n3 = eta_adjoint(a3) * a3;
    GeneratorSet g{
        .plus = eta_adjoint(a3) * a0,
        .minus = eta_adjoint(a0) * a3,
        .three = cx{0.5, 0.0} * (n0 + n3),
        .zero = cx{0.5, 0.0} * (n0 - n3),
        .kind = GeneratorKind::su11,
        .momentum = k,
    };
    return g;
}

HamiltonianSpec hamiltonian(const BasisPtr& b, std::span<const double> weights) {
    const std::vector<Vec3> momenta = distinct_momenta(b);
    if (!weights.empty() && weights.size() != momenta.size()) {
        throw std::invalid_argument("hamiltonian: weights length must match momentum count");
    }
    HamiltonianSpec spec;
    spec.momenta = momenta;
    Operator h = Operator::zero(b);
    Operator cas = Operator::zero(b);
    for (std::size_t i = 0; i < momenta.size(); ++i) {
        const Vec3& k = momenta[i];
        for (int l = 0; l < 4; ++l) {
            require_mode(b, k, static_cast<Polarization>(l), "hamiltonian");
        }
        const double w = weights.empty() ? 1.0 : weights[i];
        const double omega = norm3(k);
        const cx c{w * omega, 0.0};
        for (int l = 1; l < 4; ++l) {
            h = h + c * number_op(b, Mode(k, static_cast<Polarization>(l)));
        }
        h = h - c * number_op(b, Mode(k, Polarization::scalar));
        const GeneratorSet j = su2_generators(b, k);
        const GeneratorSet kk = su11_generators(b, k);
        cas = cas + (cx{2.0, 0.0} * c) * (j.zero - kk.zero);
        spec.omegas.push_back(omega);
        spec.weights.push_back(w);
    }
    spec.h = std::move(h);
    spec.casimir_form = std::move(cas);
    return spec;
}

namespace {

void push_identity(AlgebraReport& rep, const std::vector<unsigned char>& mask,
                   const std::string& name, const Operator& residual) {
    const double r = residual.masked_max_abs(mask);
    rep.identities.push_back({name, r, r <= rep.tolerance});
}

}  // namespace

bool AlgebraReport::all_pass() const {
    for (const auto& id : identities) {
        if (!id.pass) return false;
    }
    return true;
}

double AlgebraReport::worst() const {
    double w = 0.0;
    for (const auto& id : identities) w = std::max(w, id.max_residual);
    return w;
}

AlgebraReport verify_algebra(const BasisPtr& b, int margin, double tolerance) {
    AlgebraReport rep;
    rep.margin = margin;
    rep.tolerance = tolerance;
    const auto mask = safe_mask(b, margin);
    std::size_t safe_dim = 0;
    for (const auto m : mask) safe_dim += m;
    rep.safe_subspace_trivial = safe_dim <= 1;

    const std::vector<Vec3> momenta = distinct_momenta(b);
    const HamiltonianSpec ham = hamiltonian(b);
    const cx two{2.0, 0.0};

    std::vector<GeneratorSet> js, ks;
    for (const Vec3& k : momenta) {
        js.push_back(su2_generators(b, k));
        ks.push_back(su11_generators(b, k));
    }

    for (std::size_t i = 0; i < momenta.size(); ++i) {
        const std::string tag = momenta.size() > 1 ? " @k" + std::to_string(i) : "";
        const GeneratorSet& j = js[i];
        const GeneratorSet& k = ks[i];

        push_identity(rep, mask, "[J+,J-]-2J3" + tag, commutator(j.plus, j.minus) - two * j.three);
        push_identity(rep, mask, "[J3,J+]-J+" + tag, commutator(j.three, j.plus) - j.plus);
        push_identity(rep, mask, "[J3,J-]+J-" + tag, commutator(j.three, j.minus) + j.minus);
        push_identity(rep, mask, "[K+,K-]+2K3" + tag, commutator(k.plus, k.minus) + two * k.three);
        push_identity(rep, mask, "[K3,K+]-K+" + tag, commutator(k.three, k.plus) - k.plus);
        push_identity(rep, mask, "[K3,K-]+K-" + tag, commutator(k.three, k.minus) + k.minus);

        push_identity(rep, mask, "[J0,J+]" + tag, commutator(j.zero, j.plus));
        push_identity(rep, mask, "[J0,J-]" + tag, commutator(j.zero, j.minus));
        push_identity(rep, mask, "[J0,J3]" + tag, commutator(j.zero, j.three));
        push_identity(rep, mask, "[K0,K+]" + tag, commutator(k.zero, k.plus));
        push_identity(rep, mask, "[K0,K-]" + tag, commutator(k.zero, k.minus));
        push_identity(rep, mask, "[K0,K3]" + tag, commutator(k.zero, k.three));

        push_identity(rep, mask, "[H,J+]" + tag, commutator(ham.h, j.plus));
        push_identity(rep, mask, "[H,J-]" + tag, commutator(ham.h, j.minus));
        push_identity(rep, mask, "[H,J3]" + tag, commutator(ham.h, j.three));
        push_identity(rep, mask, "[H,K+]" + tag, commutator(ham.h, k.plus));
        push_identity(rep, mask, "[H,K-]" + tag, commutator(ham.h, k.minus));
        push_identity(rep, mask, "[H,K3]" + tag, commutator(ham.h, k.three));

        const Operator* jops[4] = {&j.plus, &j.minus, &j.three, &j.zero};
        const Operator* kops[4] = {&k.plus, &k.minus, &k.three, &k.zero};
        const char* jn[4] = {"J+", "J-", "J3", "J0"};
        const char* kn[4] = {"K+", "K-", "K3", "K0"};
        for (int a = 0; a < 4; ++a) {
            for (int c = 0; c < 4; ++c) {
                push_identity(rep, mask,
                              std::string("[") + jn[a] + "," + kn[c] + "]" + tag,
                              commutator(*jops[a], *kops[c]));
            }
        }
    }

    // generators attached to different momenta commute
    for (std::size_t i = 0; i < momenta.size(); ++i) {
        for (std::size_t l = i + 1; l < momenta.size(); ++l) {
            const std::string tag = " @k" + std::to_string(i) + ",k" + std::to_string(l);
            push_identity(rep, mask, "[J+,J+']" + tag, commutator(js[i].plus, js[l].plus));
            push_identity(rep, mask, "[J+,K+']" + tag, commutator(js[i].plus, ks[l].plus));
            push_identity(rep, mask, "[K+,K+']" + tag, commutator(ks[i].plus, ks[l].plus));
        }
    }

    push_identity(rep, mask, "H-2*sum(w*omega*(J0-K0))", ham.h - ham.casimir_form);
    return rep;
}

std::vector<SpectrumEntry> spectrum(const HamiltonianSpec& h) {
    if (!h.h.is_diagonal()) {
        throw std::logic_error("spectrum: Hamiltonian has off-diagonal entries");
    }
    const BasisPtr& b = h.h.basis();
    const Metric eta(b);
    const std::vector<cx> diag = h.h.diagonal();
    std::vector<SpectrumEntry> out;
    out.reserve(b->dim());
    for (std::size_t s = 0; s < b->dim(); ++s) {
        out.push_back({b->occupations(s), diag[s].real(), eta.signs()[s] > 0 ? 1 : -1});
    }
    return out;
}

}  // namespace gblab::algebra
