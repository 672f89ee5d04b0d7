#ifndef GBLAB_MODE_HPP
#define GBLAB_MODE_HPP

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace gblab {

using cx = std::complex<double>;
using Vec3 = std::array<double, 3>;

inline double norm3(const Vec3& v) {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

// Photon polarization labels. The scalar mode is the one carrying the
// indefinite metric: its number states alternate in sign of the physical
// norm.
enum class Polarization : int {
    scalar = 0,
    transverse1 = 1,
    transverse2 = 2,
    longitudinal = 3,
};

// One bosonic oscillator: a momentum 3-vector plus a polarization label.
// Natural units, so the frequency is the Euclidean norm of the momentum.
struct Mode {
    Vec3 momentum;
    Polarization pol;

    Mode(const Vec3& k, Polarization p) : momentum(k), pol(p) {
        if (norm3(k) == 0.0) {
            throw std::invalid_argument("Mode: zero momentum is not allowed");
        }
    }

    double omega() const { return norm3(momentum); }

    bool operator==(const Mode&) const = default;
};

// Sign sigma_m in [a_m, a_m^ddag] = sigma_m: -1 for the scalar mode,
// +1 for the three positive-metric modes.
inline double ladder_sign(Polarization p) {
    return p == Polarization::scalar ? -1.0 : 1.0;
}

}  // namespace gblab

#endif
