#pragma once

// Fourier analysis of the circular-mean data over the center variable.  For
// each radius the transform values are mapped to the continuum-convention
// spatial spectrum, F(xi, r) = Int e^{-i x'.xi} (Sb)(x', r) dx'.  Moving the
// transform under the circle integral (Fubini, y = x' + r theta) gives the
// working identity of the whole inversion chain:
//   F(xi, r) = Int_{S^1} e^{i r theta.xi} (F b)(xi, theta) d|theta|,
// i.e. the r-dependence at fixed xi is a Bessel-type expansion in the even
// angular modes of (F b)(xi, .) about the direction of xi (see slices.hpp).

#include <complex>
#include <cstdint>
#include <vector>

#include "core/grid.hpp"
#include "sradon/radon.hpp"

namespace iscat {

struct FourierRadon {
    GridSpec2D centers;          // spatial lattice; xi via freq_x/freq_y
    std::vector<double> radii;   // copied from the input
    std::vector<std::complex<double>> values;  // [ir * centers.size() + q]

    std::complex<double> at(std::size_t ir, std::size_t q) const {
        return values[ir * centers.size() + q];
    }
};

// One 2-D transform per radius.  Requires the lattice (uniform) layout.
FourierRadon fourier_radon(const RadonGrid& rg);

}  // namespace iscat
