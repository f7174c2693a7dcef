#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "core/grid.hpp"

namespace iscat {

// Closed support disk for boundary heterogeneity.  All strength and
// anisotropy fields vanish outside it.
struct DiskSupport {
    std::array<double, 2> center{0.0, 0.0};
    double radius = 1.0;
    double dist(double px, double py) const;  // distance from (px,py) to disk
    bool contains(double px, double py) const;
};

// Node-wise symmetric 2x2 anisotropy tensor A(x) = [[a11, a12],[a12, a22]].
// The quadratic directional strength it induces is b(x,theta) =
// <theta, A(x) theta>.  A must be positive semidefinite node-wise and
// supported in the disk.
struct AnisotropyField {
    GridSpec2D grid;
    DiskSupport support;
    std::vector<double> a11, a22, a12;

    // Smallest eigenvalue over all nodes.
    double min_eigenvalue() const;
    // Clips negative eigenvalues to zero in place.  Returns the number of
    // nodes changed; callers must surface a warning when nonzero (silent
    // repair is not allowed).
    std::size_t clip_psd(double tol = 0.0);
    // Largest |entry| outside the support disk (should be ~0).
    double support_leak() const;
};

}  // namespace iscat
