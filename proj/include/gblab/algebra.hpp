#ifndef GBLAB_ALGEBRA_HPP
#define GBLAB_ALGEBRA_HPP

#include <string>

#include "gblab/ladders.hpp"

namespace gblab::algebra {

enum class GeneratorKind { su2, su11 };

// The four generators attached to one momentum. For su(2) these are built
// from the transverse pair, for su(1,1) from the scalar/longitudinal pair;
// `zero` is the central element in both cases.
struct GeneratorSet {
    Operator plus, minus, three, zero;
    GeneratorKind kind;
    Vec3 momentum;
};

// J+ = a1^ddag a2, J- = a2^ddag a1, J3 = (n1 - n2)/2, J0 = (n1 + n2)/2
GeneratorSet su2_generators(const BasisPtr& b, const Vec3& k);
// K+ = a3^ddag a0, K- = a0^ddag a3, K3 = (a0^ddag a0 + a3^ddag a3)/2,
// K0 = (a0^ddag a0 - a3^ddag a3)/2
GeneratorSet su11_generators(const BasisPtr& b, const Vec3& k);

struct HamiltonianSpec {
    Operator h;             // sum_k w_k omega_k (a1^ddag a1 + a2^ddag a2 + a3^ddag a3 - a0^ddag a0)
    Operator casimir_form;  // 2 sum_k w_k omega_k (J0 - K0); equals h
    std::vector<Vec3> momenta;
    std::vector<double> omegas;
    std::vector<double> weights;
};

// Requires all four polarizations for every momentum in the basis.
// Weights default to 1 per momentum.
HamiltonianSpec hamiltonian(const BasisPtr& b, std::span<const double> weights = {});

struct IdentityResidual {
    std::string name;
    double max_residual;
    bool pass;
};

struct AlgebraReport {
    std::vector<IdentityResidual> identities;
    int margin;
    double tolerance;
    bool safe_subspace_trivial = false;  // margin left only the vacuum

    bool all_pass() const;
    double worst() const;
};

// Checks the full bracket table on the margin-projected subspace: su(2) and
// su(1,1) brackets, centrality of J0/K0, [H, generator] for all eight
// generators, the cross-brackets between the two sets, and the agreement of
// H with its Casimir form.
AlgebraReport verify_algebra(const BasisPtr& b, int margin, double tolerance = 1e-12);

struct SpectrumEntry {
    std::vector<int> occupations;
    double eigenvalue;
    int metric_sign;
};

// Reads the diagonal of H (errors out on off-diagonal entries) and pairs
// each occupation state with its energy and its physical-norm sign.
std::vector<SpectrumEntry> spectrum(const HamiltonianSpec& h);

}  // namespace gblab::algebra

#endif
