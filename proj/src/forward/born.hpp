#pragma once

#include <complex>

#include "field/synthesis.hpp"
#include "forward/density.hpp"
#include "forward/greens.hpp"

namespace iscat {

// Scattered field above the plane: (S+ phi)(x) = h^2 sum_z g_k(x - z) phi(z)
// (nonsingular for x3 > 0).
std::complex<double> scattered_field(const BoundaryDensity& phi,
                                     const Point3& x);

// First Born term
//   u1(x,y,k) = (1/(4 pi^2 k^p)) int_D e^{ik(|x-z|+|y-z|)} lambda(z)
//               / (|x-z||y-z|) dz
// by direct midpoint quadrature on lambda's grid.  Requires k*h <= 1/4 so
// the phase is resolved (throws std::invalid_argument otherwise), and
// x3, y3 > 0.
std::complex<double> born_u1(const FieldRealization& lambda, const Point3& x,
                             const Point3& y, double k, double p);

}  // namespace iscat
