#pragma once

// Circular-mean transform of the directional strength: integrals of
// b(x' + r theta, theta) over the unit circle of directions theta, in arc
// length, so a strength that is constant c on the circle's footprint maps to
// 2 pi c.  The direction argument of b is the radial direction at each circle
// point, which is what couples the transform to the anisotropy and gives it a
// null space (see nullspace.hpp).

#include <array>
#include <cstdint>
#include <vector>

#include "core/grid.hpp"
#include "field/strength.hpp"

namespace iscat {

// Sampled transform values over a set of centers x' and radii r.  Centers may
// be a uniform lattice (required by the Fourier analysis downstream) or an
// arbitrary list.
struct RadonGrid {
    bool uniform = false;
    GridSpec2D centers;  // meaningful only when uniform
    std::vector<std::array<double, 2>> center_list;  // always filled
    std::vector<double> radii;                       // increasing, > 0
    std::vector<double> values;  // [ir * n_centers + ic]

    std::size_t n_centers() const { return center_list.size(); }
    double at(std::size_t ir, std::size_t ic) const {
        return values[ir * center_list.size() + ic];
    }
};

// Transform at a single (center, radius): trapezoid rule over n_ang equal
// direction angles (exact spectral accuracy for the periodic integrand up to
// the strength's own angular bandwidth), bilinear interpolation of b in
// space.  The integrand is the sampled field's bilinear extension over the
// whole grid hull (zero beyond it), not just the declared disk — identical
// for honest strengths, but essential for null-space projections whose
// slow spatial tails escape the disk yet still cancel in the mean.
double radon_point(const LocalStrength& b, double cx, double cy, double r,
                   std::uint32_t n_ang);

// Transform on a uniform center lattice.  Requires n_ang >= 64 and, when more
// than one radius is given, radii spacing no coarser than the strength grid
// (the radii must resolve the support).
RadonGrid radon_forward(const LocalStrength& b, const GridSpec2D& centers,
                        const std::vector<double>& radii,
                        std::uint32_t n_ang = 256);

// Same transform on an arbitrary center list (output is not usable by
// fourier_radon, which needs the lattice form).
RadonGrid radon_forward(const LocalStrength& b,
                        const std::vector<std::array<double, 2>>& centers,
                        const std::vector<double>& radii,
                        std::uint32_t n_ang = 256);

}  // namespace iscat
