#pragma once

// Null space of the circular-mean transform.  A direction-even profile g is
// annihilated exactly when, for every spatial frequency xi, its angular
// profile (F g)(xi, .) is odd under reflection about the axis perpendicular
// to xi.  The projector onto that class acts per xi and per even angular
// order m as a 2x2 reflection projector on the (cos m., sin m.) coefficient
// pair; it is idempotent by construction and annihilates isotropic input
// (order 0) identically.
//
// Conventions: the reflection axis angle is a(xi) = alpha(xi) + pi/2 with
// alpha = atan2(xi_2, xi_1); the zero-frequency bin (axis undefined) and the
// angular Nyquist order n_ang/2 (whose sine component is invisible at the
// sample angles) are assigned wholly to the complement, so the projector is
// exactly idempotent on the stored representation.

#include <cstdint>
#include <vector>

#include "field/strength.hpp"

namespace iscat {

// Even angular Fourier modes of a sampled strength:
//   f(x, theta_j) = sum_m cosine[m](x) cos(m theta_j) + sine[m](x) sin(m theta_j)
// exactly (trigonometric interpolation of the pi-periodic angle samples).
struct AngularModes {
    GridSpec2D grid;
    std::uint32_t n_ang = 0;
    std::vector<int> orders;                  // 0, 2, 4, ..., n_ang/2
    std::vector<std::vector<double>> cosine;  // per order
    std::vector<std::vector<double>> sine;    // per order (zero for 0, Nyquist)
};

AngularModes angular_modes(const LocalStrength& f);

struct AngularSplit {
    LocalStrength odd;   // null-space component (signed sample planes)
    LocalStrength even;  // complement; odd + even == input, sample by sample
    double odd_fraction = 0.0;  // ||odd|| / ||input||, L2 over samples
};

// Splits f into its annihilated component and the recoverable complement.
// Requires the direction-even sample layout (plane j == plane j + n_ang/2);
// violating it is a contract error.
AngularSplit null_space_project(const LocalStrength& f);

}  // namespace iscat
