#ifndef GBLAB_COHERENT_HPP
#define GBLAB_COHERENT_HPP

#include <stdexcept>

#include "gblab/dense.hpp"
#include "gblab/ladders.hpp"

namespace gblab::coherent {

// Truncation-adequacy guard violated: amplitudes too large for the cutoff.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One complex amplitude per momentum, shared by the scalar and longitudinal
// modes at that momentum. The guard sum|alpha|^2 <= guard_fraction * n_max
// keeps displacement-path truncation leakage below the stated tolerances.
struct CoherentSpec {
    std::vector<Vec3> momenta;
    std::vector<cx> alpha;
    double guard_fraction = 0.25;

    void validate(const FockBasis& b) const;  // throws GuardError / invalid_argument
    CoherentSpec negated() const;
    double max_abs_alpha() const;
};

// Transverse occupations per momentum plus the coherent pair content.
struct PhysicalStateSpec {
    std::vector<std::array<int, 2>> transverse;  // n_{k,1}, n_{k,2}
    CoherentSpec coherent;
};

// exp sum_k (conj(alpha_k) a_{k,3} - alpha_k a_{k,3}^ddag)
Operator displacement_g3(const BasisPtr& b, const CoherentSpec& spec);
// exp sum_k (-conj(alpha_k) a_{k,0} + alpha_k a_{k,0}^ddag); the flipped sign
// keeps G0 eta-pseudo-unitary despite [a0, a0^ddag] = -1
Operator displacement_g0(const BasisPtr& b, const CoherentSpec& spec);
// g3 * g0 in one tensor embedding (the factors commute)
Operator displacement_pair(const BasisPtr& b, const CoherentSpec& spec);

// eta G^dagger eta G - I, max entry on the policy-margin safe subspace
double pseudo_unitarity_residual(const Operator& g, int margin);

// Exact truncated polynomial in creation operators applied to the vacuum.
// order < 0 keeps the whole occupation box (the per-mode closed-form
// coefficients); order >= 0 caps the total ladder degree across the pair
// modes, which is what the term-by-term comparison with r_series_state needs.
State coherent_state_series(const BasisPtr& b, const CoherentSpec& spec, int order = -1);

// G3^-1(alpha) G0^-1(alpha) |0>; must agree with the series construction
State coherent_state_displaced(const BasisPtr& b, const CoherentSpec& spec);

// max over momenta of the EUCLIDEAN norm of (a_{k,0} - a_{k,3})|state>.
// The physical norm of that vector is identically zero, so only the
// auxiliary norm distinguishes "condition satisfied" from "violated by a
// zero-norm amount".
double gb_residual(const BasisPtr& b, const State& state);

// Product of transverse number states with the coherent pair state
State physical_state(const BasisPtr& b, const PhysicalStateSpec& spec);

// (1 + sum c_k L_k^ddag + ... ) |base>, truncated at `order` in total powers
// of L^ddag = a0^ddag - a3^ddag, with the exponential 1/m! weights
State r_series_state(const BasisPtr& b, const State& base, std::span<const Vec3> momenta,
                     std::span<const cx> c, int order);

// G-conjugated operator: (G3 G0)^-1 A (G3 G0)
Operator shifted_operator(const BasisPtr& b, const Operator& a, const CoherentSpec& spec);

struct TranslationReport {
    double residual_l;
    double residual_ldag;
    int margin;
};

// L and L^ddag are invariant under the alpha-translation; reports the
// max-entry residual of the conjugated operators on the safe subspace.
TranslationReport translation_invariance_check(const BasisPtr& b, const CoherentSpec& spec,
                                               double tolerance = 1e-8);

// Smallest margin m such that the squared amplitude of a boundary-reaching
// excursion, ((|alpha| sqrt(n_max))^m / m!)^2, is below tolerance/16. This is
// what controls truncation leakage of displacement-path identities.
int displacement_safe_margin(int n_max, double max_abs_alpha, double tolerance);

}  // namespace gblab::coherent

#endif
