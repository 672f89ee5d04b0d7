#include "gblab/ladders.hpp"

#include <cmath>
#include <stdexcept>

#include "gblab/kernels.hpp"

namespace gblab {

Metric::Metric(BasisPtr b) : basis_(std::move(b)), signs_(basis_->dim(), 1.0) {
    std::vector<std::size_t> scalar_modes;
    for (std::size_t m = 0; m < basis_->n_modes(); ++m) {
        if (basis_->modes()[m].pol == Polarization::scalar) scalar_modes.push_back(m);
    }
    if (scalar_modes.empty()) return;
    for (std::size_t s = 0; s < basis_->dim(); ++s) {
        int parity = 0;
        for (const std::size_t m : scalar_modes) parity += basis_->occupation(s, m);
        signs_[s] = (parity % 2 == 0) ? 1.0 : -1.0;
    }
}

Operator Metric::as_operator() const {
    std::vector<cx> d(signs_.begin(), signs_.end());
    return Operator::diagonal(basis_, std::move(d));
}

Metric metric(const BasisPtr& b) { return Metric(b); }

Operator annihilator(const BasisPtr& b, const Mode& m) {
    const std::size_t mi = b->mode_index(m);
    const std::size_t stride = b->stride(mi);
    const double sign = ladder_sign(m.pol);
    const int n_max = b->n_max();
    return Operator::build(b, b->dim(), [&](std::size_t r, auto& entries) {
        const int n = b->occupation(r, mi);
        if (n < n_max) {
            entries.emplace_back(static_cast<std::int32_t>(r + stride),
                                 cx{sign * std::sqrt(double(n) + 1.0), 0.0});
        }
    });
}

Operator creator(const BasisPtr& b, const Mode& m) {
    const std::size_t mi = b->mode_index(m);
    const std::size_t stride = b->stride(mi);
    return Operator::build(b, b->dim(), [&](std::size_t r, auto& entries) {
        const int n = b->occupation(r, mi);
        if (n > 0) {
            entries.emplace_back(static_cast<std::int32_t>(r - stride),
                                 cx{std::sqrt(double(n)), 0.0});
        }
    });
}

Operator eta_adjoint(const Operator& a) {
    const Metric eta(a.basis());
    Operator out = a.conj_transpose();
    // signs are exact +-1, so the double application returns a bit for bit
    out.row_col_scale(eta.signs(), eta.signs());
    return out;
}

cx physical_inner(const State& phi, const State& psi) {
    require_same_basis(phi.basis(), psi.basis(), "physical_inner");
    const Metric eta(phi.basis());
    return kernels::dot_conj_signed(phi.amplitudes().data(), eta.signs().data(),
                                    psi.amplitudes().data(), phi.dim());
}

cx expectation(const State& psi, const Operator& a) {
    return physical_inner(psi, a.apply(psi));
}

Operator number_op(const BasisPtr& b, const Mode& m) {
    return eta_adjoint(annihilator(b, m)) * annihilator(b, m);
}

std::vector<unsigned char> safe_mask(const BasisPtr& b, int margin) {
    if (margin < 0 || margin > b->n_max()) {
        throw std::invalid_argument("safe_mask: margin outside [0, n_max]");
    }
    const int cap = b->n_max() - margin;
    std::vector<unsigned char> mask(b->dim(), 1);
    for (std::size_t s = 0; s < b->dim(); ++s) {
        for (std::size_t m = 0; m < b->n_modes(); ++m) {
            if (b->occupation(s, m) > cap) {
                mask[s] = 0;
                break;
            }
        }
    }
    return mask;
}

Operator safe_projector(const BasisPtr& b, int margin) {
    const auto mask = safe_mask(b, margin);
    std::vector<cx> d(b->dim());
    for (std::size_t s = 0; s < b->dim(); ++s) d[s] = mask[s] ? 1.0 : 0.0;
    return Operator::diagonal(b, std::move(d));
}

}  // namespace gblab
