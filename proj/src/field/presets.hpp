#pragma once

#include <cstdint>

#include "field/anisotropy.hpp"
#include "field/strength.hpp"

namespace iscat {

// Built-in models used by tests and the command-line pipeline.  All presets
// vanish identically at grid nodes outside the support disk and taper
// C-infinity-smoothly inside it.

// Three-lobe anisotropy: A(x) = envelope(x) * sum_i amp_i w_i(x) u_i u_i^T
// with unit directions u_i at angles {0, 60, 120} degrees and Gaussian lobe
// weights w_i centered off-origin.  Positive semidefinite by construction
// (sum of PSD rank-one terms, nonnegative weights) with three genuinely
// distinct component fields a11, a22, a12.
AnisotropyField preset_three_lobe(const GridSpec2D& grid,
                                  const DiskSupport& support);

// Rank-one directional-derivative model: A(x) = v(x) v(x)^T with
// v(x) = (1, 0)^T on an inner plateau (|x - c| <= plateau_frac * R) tapering
// to zero by taper_frac * R.  tr A = |v|^2 equals 1 exactly on the plateau,
// which is the target of the trace-recovery check.  A field obtained by
// differentiating an isotropic field of order 2 eps along v has exactly this
// strength with anisotropy order eps; the caller picks eps accordingly.
AnisotropyField preset_directional(const GridSpec2D& grid,
                                   const DiskSupport& support,
                                   double plateau_frac = 0.45,
                                   double taper_frac = 0.75);

// Isotropic strength b(x, theta) = chi(x).  With `hard_edge` true, chi is the
// sharp disk indicator (useful for closed-form covariance cross-checks at
// interior points); otherwise chi is a C-infinity plateau equal to 1 for
// |x - c| <= 0.7 R and 0 past 0.95 R.
LocalStrength preset_isotropic(const GridSpec2D& grid,
                               const DiskSupport& support, double eps,
                               std::uint32_t n_ang, bool hard_edge = false);

// Non-quadratic directional phantom: b(x,theta) = g(x) * (1 +
// 0.5 cos 2(theta - theta0) + 0.3 cos 4 theta) with a Gaussian-bump g tapered
// to zero inside the disk.  The cos(4 theta) part puts it outside the
// quadratic class, exercising the higher angular modes of the circular-mean
// transform and its null space.
LocalStrength preset_directional_waves(const GridSpec2D& grid,
                                       const DiskSupport& support, double eps,
                                       std::uint32_t n_ang,
                                       double theta0 = 0.52359877559829887);

}  // namespace iscat
