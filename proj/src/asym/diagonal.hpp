#pragma once

#include <vector>

#include "field/strength.hpp"
#include "forward/greens.hpp"

namespace iscat {

// Deterministic high-frequency limit of the backscatter correlation.  As
// k -> infinity, with p the impedance normalization exponent and eps the
// covariance regularity,
//
//   E |u_1(x,x,k)|^2  =  R(x,x) k^(-2-2eps-2p)  +  O(k^(-3-2p)),
//
//   R(x,x) = 1/(4^(3+eps) pi^4) *
//            Int_D b(z, (z-x')^0) (1 + x3^2/|z-x'|^2)^(1+eps) / |x-z|^4 dz,
//
// where x' is the planar projection of x and (z-x')^0 the planar unit
// direction from it (b is even in its direction argument, so the sign is
// immaterial).  The integrand is equivalently
//   b * |z-x'|^(-2-2eps) * (|z-x'|^2 + x3^2)^(eps-1),
// which is the form evaluated here: the direction, strength sample, and
// |z-x'| powers depend only on x', so a sweep over heights x3 at a fixed
// center reuses them.

// Per-center quadrature rule: build once for (strength, x'), evaluate at any
// height.  Node sums use the strength's own grid; cells closer to x' than a
// few spacings are refined with a tensor Gauss-Legendre subrule so centers
// near the support rim stay accurate.
class DiagonalRule {
  public:
    DiagonalRule(const LocalStrength& b, double x1, double x2);

    // R at (x1, x2, x3); x3 >= 0.
    double eval(double x3) const;

    double eps() const { return eps_; }
    // Distance from the center to the support disk (strictly positive).
    double clearance() const { return clearance_; }

  private:
    struct Node {
        double rho2;  // squared planar distance to the center
        double coef;  // b * area * |z-x'|^(-2-2eps) * normalization
    };
    std::vector<Node> nodes_;
    double eps_ = 0.5;
    double clearance_ = 0.0;
};

// One-shot evaluation of R(x,x).  Throws std::domain_error if the projection
// of x lies inside (or on) the support disk -- the kernel is singular there
// -- or if x3 < 0.
double diagonal_R(const LocalStrength& b, const Point3& x);

}  // namespace iscat
