#ifndef GBLAB_STATE_HPP
#define GBLAB_STATE_HPP

#include <span>
#include <vector>

#include "gblab/basis.hpp"

namespace gblab {

// Dense complex vector on a FockBasis. The physical (indefinite) norm is
// computed through the metric in ladders.hpp; the Euclidean norm here is
// the auxiliary one used for residuals.
class State {
public:
    State() = default;
    explicit State(BasisPtr b) : basis_(std::move(b)), amp_(basis_->dim()) {}

    static State vacuum(BasisPtr b);
    static State basis_state(BasisPtr b, std::span<const int> occupations);

    const BasisPtr& basis() const { return basis_; }
    std::size_t dim() const { return amp_.size(); }
    std::span<cx> amplitudes() { return amp_; }
    std::span<const cx> amplitudes() const { return amp_; }
    cx& operator[](std::size_t i) { return amp_[i]; }
    const cx& operator[](std::size_t i) const { return amp_[i]; }

    double euclidean_norm() const;
    double max_abs() const;

    State& operator+=(const State& o);
    State& operator-=(const State& o);
    State& scale(cx a);
    // *this += a * x
    State& axpy(cx a, const State& x);

    friend State operator-(State a, const State& b) {
        a -= b;
        return a;
    }

private:
    BasisPtr basis_;
    std::vector<cx> amp_;
};

}  // namespace gblab

#endif
