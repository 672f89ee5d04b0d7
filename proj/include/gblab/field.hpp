#ifndef GBLAB_FIELD_HPP
#define GBLAB_FIELD_HPP

#include "gblab/coherent.hpp"
#include "gblab/ladders.hpp"

namespace gblab::field {

// Real polarization 4-vectors eps[lambda][mu] for one momentum:
// eps(0) = (1,0,0,0), eps(3) = (0, k/|k|), eps(1)/eps(2) spatial unit
// vectors orthogonal to k and to each other, with eps(0)+eps(3) = k^mu/omega.
struct PolarizationBasis {
    std::array<std::array<double, 4>, 4> eps;
};

PolarizationBasis polarization_basis(const Vec3& k);

struct WeightedMomentum {
    Vec3 k;
    double weight = 1.0;
};

// Discrete stand-in for the momentum integral: distinct nonzero momenta with
// positive quadrature weights.
class ModeSet {
public:
    ModeSet(std::vector<WeightedMomentum> entries);
    std::span<const WeightedMomentum> entries() const { return entries_; }
    const WeightedMomentum& weighted(const Vec3& k) const;  // throws if missing

private:
    std::vector<WeightedMomentum> entries_;
};

// Metric signature (+,-,-,-): k.x = omega t - kvec.xvec
struct SpacetimePoint {
    double t = 0.0, x = 0.0, y = 0.0, z = 0.0;
};

// Physical-inner-product expectations of the ladder operators of one
// momentum; a and a_dag are sandwiched independently so that the
// conjugate-pair structure of the field expansion is measured, not assumed.
struct ModeAmplitudes {
    Vec3 k;
    double weight = 1.0;
    std::array<cx, 4> a{};
    std::array<cx, 4> a_dag{};
};

// Matrix-sandwich extraction; the state's basis must contain all four
// polarizations of every momentum in the modeset.
std::vector<ModeAmplitudes> extract_amplitudes(const State& psi, const ModeSet& modeset);

// <A^mu(x)> assembled from per-mode amplitudes (upper index); max_imag, when
// given, receives the largest imaginary part discarded on the way.
std::array<double, 4> assemble_A(std::span<const ModeAmplitudes> amps,
                                 const SpacetimePoint& x, double* max_imag = nullptr);

// Spec surface: expectation of A^mu on a state over a modeset.
std::array<double, 4> expect_A(const State& psi, const ModeSet& modeset,
                               const SpacetimePoint& x, double* max_imag = nullptr);

// Gauge function of the coherent content and its coordinate gradient
// d Lambda / dx^mu (a lower-index object by construction; no signature
// enters it). Lambda solves the wave equation because every momentum is null.
struct GaugeFunction {
    double lambda;
    std::array<double, 4> grad;  // (d/dt, d/dx, d/dy, d/dz) Lambda
};

GaugeFunction gauge_function(const coherent::CoherentSpec& spec, const ModeSet& modeset,
                             const SpacetimePoint& x);

struct GridSpec {
    std::array<double, 4> lo{0.0, 0.0, 0.0, 0.0};
    std::array<double, 4> hi{0.0, 0.0, 0.0, 0.0};
    std::array<int, 4> points{1, 1, 1, 1};
    std::vector<SpacetimePoint> make_points() const;
};

struct GaugeSplitRow {
    SpacetimePoint x;
    int mu;
    double a_state;
    double a_reference;
    double grad_lambda;
    double deviation;
};

struct GaugeSplitReport {
    double max_deviation = 0.0;
    double max_imag = 0.0;
    std::vector<GaugeSplitRow> rows;
};

// max over grid and mu of |<A_mu(state)> - <A_mu(reference)> - d_mu Lambda|,
// with A^mu lowered by the signature (flip_signature negates the spatial
// lowering, the negative control for the convention dependence).
GaugeSplitReport check_gauge_split(std::span<const ModeAmplitudes> state_amps,
                                   std::span<const ModeAmplitudes> reference_amps,
                                   const coherent::CoherentSpec& spec, const ModeSet& modeset,
                                   std::span<const SpacetimePoint> grid,
                                   bool flip_signature = false, bool keep_rows = false);

GaugeSplitReport check_gauge_split(const State& state, const State& reference,
                                   const coherent::CoherentSpec& spec, const ModeSet& modeset,
                                   std::span<const SpacetimePoint> grid,
                                   bool flip_signature = false, bool keep_rows = false);

// max_x |box_h Lambda| / max_x |Lambda| with 3-point central second
// differences per dimension at step h (O(h^2))
double wave_residual_fd(const coherent::CoherentSpec& spec, const ModeSet& modeset,
                        std::span<const SpacetimePoint> probes, double h);

// max deviation between the analytic gradient and central differences of
// Lambda at step h, relative to the gradient scale
double gradient_fd_error(const coherent::CoherentSpec& spec, const ModeSet& modeset,
                         std::span<const SpacetimePoint> probes, double h);

}  // namespace gblab::field

#endif
