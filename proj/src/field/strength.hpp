#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "core/grid.hpp"
#include "field/anisotropy.hpp"

namespace iscat {

struct InvalidModel : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Directional local strength b(x, theta): the principal-symbol weight of the
// boundary field's covariance.  Sampled on the grid at n_ang equispaced
// angles theta_j = 2 pi j / n_ang (n_ang even, >= 32).  Invariants enforced
// at construction:
//   * evenness b(x,theta) = b(x,theta+pi) exactly (plane j == plane j+n/2),
//   * b >= 0,
//   * support inside the disk (b == 0 at nodes outside it).
// When the strength is quadratic, b(x,theta) = <theta, A(x) theta>, the
// tensor planes are kept so directions between angle samples evaluate
// exactly; otherwise evaluation interpolates linearly in angle.
struct LocalStrength {
    GridSpec2D grid;
    DiskSupport support;
    double eps = 0.5;  // covariance regularity exponent, must be > 0
    std::uint32_t n_ang = 64;
    std::vector<std::vector<double>> planes;  // planes[j][node] = b(x, theta_j)

    bool quadratic = false;
    std::vector<double> qa11, qa22, qa12;

    double theta(std::uint32_t j) const { return 2.0 * M_PI * j / n_ang; }

    // b at a grid node for an arbitrary direction angle.
    double eval_node(std::size_t node, double ang) const;
    // b at an arbitrary point (bilinear in space) and direction.
    double eval(double px, double py, double ang) const;

    double max_value() const;
};

// Builds the quadratic strength from an anisotropy tensor field.  Throws
// InvalidModel if A has negative eigenvalues beyond `psd_tol` (use
// AnisotropyField::clip_psd first when repairing user input is intended).
LocalStrength build_quadratic_strength(const AnisotropyField& A, double eps,
                                       std::uint32_t n_ang,
                                       double psd_tol = 1e-12);

// Builds a sampled strength from an arbitrary rule b(x, y, theta).  The rule
// is symmetrized over theta -> theta+pi to enforce evenness exactly and
// clamped at zero; values at nodes outside the support disk are dropped.
LocalStrength make_strength(const GridSpec2D& grid, const DiskSupport& support,
                            double eps, std::uint32_t n_ang,
                            const std::function<double(double, double, double)>& rule);

}  // namespace iscat
