#ifndef GBLAB_LADDERS_HPP
#define GBLAB_LADDERS_HPP

#include "gblab/operator.hpp"

namespace gblab {

// Diagonal sign operator: (-1)^(total occupation of scalar-polarization
// modes). Squares to the identity; the physical inner product and the
// physical adjoint are defined through it.
class Metric {
public:
    explicit Metric(BasisPtr b);
    const BasisPtr& basis() const { return basis_; }
    std::span<const double> signs() const { return signs_; }
    Operator as_operator() const;

private:
    BasisPtr basis_;
    std::vector<double> signs_;
};

Metric metric(const BasisPtr& b);

// Ladder operators. The scalar-mode annihilator carries the sign that makes
// the metric-adjoint creator act as a^ddag|n> = sqrt(n+1)|n+1> while
// [a, a^ddag] = -1 on that mode.
Operator annihilator(const BasisPtr& b, const Mode& m);
// creator = eta_adjoint(annihilator); built directly, identical entries
Operator creator(const BasisPtr& b, const Mode& m);

// Physical adjoint A^ddag = eta * conj_transpose(A) * eta. Involution, and
// an exact one: applying it twice returns the original entries bit for bit.
Operator eta_adjoint(const Operator& a);

// <phi| eta |psi>
cx physical_inner(const State& phi, const State& psi);
// <psi| eta A |psi>  (states carrying unit physical norm give expectations)
cx expectation(const State& psi, const Operator& a);

// eta_adjoint(annihilator) * annihilator; eigenvalue -n on the scalar mode
Operator number_op(const BasisPtr& b, const Mode& m);

// Diagonal projector onto states with every occupation <= n_max - margin.
// Algebraic identities are asserted only on this subspace: rows at the
// cutoff boundary violate commutators on any finite space.
Operator safe_projector(const BasisPtr& b, int margin);
std::vector<unsigned char> safe_mask(const BasisPtr& b, int margin);

}  // namespace gblab

#endif
