#pragma once

#include <complex>
#include <vector>

#include "core/grid.hpp"

namespace iscat {

// Boundary single-layer operator at wavenumber k: the planar convolution
//   (S phi)(x') = int e^{ik|x'-z'|}/(4 pi |x'-z'|) phi(z') dz'
// applied through its Fourier multiplier
//   m(xi) = 1/(2 sqrt(|xi|^2 - k^2))   for |xi| > k,
//   m(xi) = i/(2 sqrt(k^2 - |xi|^2))   for |xi| < k,
// on a 2x zero-padded grid (linear convolution; periodic images pushed to
// distance >= the domain size).  Frequency cells crossed by the singular
// ring |xi| = k take the analytic radial average of m over the cell, which
// both regularizes the integrable 1/sqrt singularity and guarantees the
// ring is never sampled pointwise.
class SlpOperator {
  public:
    // Requires grid Nyquist (pi/h) > 2k so the ring lies well inside the
    // resolved band; throws std::invalid_argument otherwise.
    SlpOperator(const GridSpec2D& grid, double k);

    const GridSpec2D& grid() const { return grid_; }
    double k() const { return k_; }

    // out = S phi (both length grid.size()).
    void apply(const std::vector<std::complex<double>>& phi,
               std::vector<std::complex<double>>& out) const;
    // out = S* phi (conjugate multiplier); used for norm estimation.
    void apply_adjoint(const std::vector<std::complex<double>>& phi,
                       std::vector<std::complex<double>>& out) const;

    std::vector<std::complex<double>> apply(
        const std::vector<std::complex<double>>& phi) const;

    // Largest-singular-value estimate of chi_D S chi_D by power iteration
    // on the normal operator; `mask` is 1 on D and 0 elsewhere.
    double masked_norm(const std::vector<double>& mask, int iterations) const;

  private:
    void apply_impl(const std::vector<std::complex<double>>& phi,
                    std::vector<std::complex<double>>& out,
                    bool adjoint) const;

    GridSpec2D grid_;
    double k_;
    std::uint32_t px_, py_;                 // padded dimensions (2x)
    std::vector<std::complex<double>> mult_;  // multiplier on padded bins
    std::vector<std::complex<double>> mod_;   // half-cell shift modulation
};

// Direct quadrature of the same operator on the grid nodes: far pairs use
// the pointwise kernel times the cell area, pairs within two cells refine
// the source cell with an 8x8 Gauss-Legendre rule, and the diagonal cell
// splits off the 1/(4 pi r) part, whose integral over an h x h cell is
// h ln(1+sqrt(2))/pi, integrating the smooth remainder by the same rule.
// O(N^2); intended as an independent cross-check on small grids.
std::vector<std::complex<double>> nystrom_apply(
    const GridSpec2D& grid, double k,
    const std::vector<std::complex<double>>& phi);

}  // namespace iscat
