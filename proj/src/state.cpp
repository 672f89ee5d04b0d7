#include "gblab/state.hpp"

#include <cmath>
#include <stdexcept>

#include "gblab/kernels.hpp"

namespace gblab {

State State::vacuum(BasisPtr b) {
    State s(std::move(b));
    s.amp_[0] = 1.0;
    return s;
}

State State::basis_state(BasisPtr b, std::span<const int> occupations) {
    State s(b);
    s.amp_[b->index_of(occupations)] = 1.0;
    return s;
}

double State::euclidean_norm() const {
    return std::sqrt(kernels::norm2_sq(amp_.data(), amp_.size()));
}

double State::max_abs() const { return kernels::max_abs(amp_.data(), amp_.size()); }

State& State::operator+=(const State& o) {
    if (amp_.size() != o.amp_.size()) {
        throw std::invalid_argument("State: basis mismatch in +=");
    }
    kernels::axpy(cx{1.0, 0.0}, o.amp_.data(), amp_.data(), amp_.size());
    return *this;
}

State& State::operator-=(const State& o) {
    if (amp_.size() != o.amp_.size()) {
        throw std::invalid_argument("State: basis mismatch in -=");
    }
    kernels::axpy(cx{-1.0, 0.0}, o.amp_.data(), amp_.data(), amp_.size());
    return *this;
}

State& State::scale(cx a) {
    kernels::scal(a, amp_.data(), amp_.size());
    return *this;
}

State& State::axpy(cx a, const State& x) {
    if (amp_.size() != x.amp_.size()) {
        throw std::invalid_argument("State: basis mismatch in axpy");
    }
    kernels::axpy(a, x.amp_.data(), amp_.data(), amp_.size());
    return *this;
}

}  // namespace gblab
