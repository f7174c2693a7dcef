#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "field/covariance.hpp"

namespace iscat {

// One Gaussian realization of the boundary field.
struct FieldRealization {
    Field2D field;
    std::uint64_t seed = 0;
    // Largest |value| outside the support disk.  The per-node modulation
    // scheme leaks nothing, so this is round-off scale; stored so consumers
    // can assert it.
    double support_leak = 0.0;
};

// Seed-independent part of the sampler: angular-mode coefficients of
// sqrt(b), the radial spectral filter, per-frequency angles, and the support
// collar.  Building it costs one pass over (modes x angles x nodes); drawing
// a realization afterwards costs one FFT per retained mode.  Ensemble loops
// should build the plan once and call sample() per member -- the output is
// identical, draw for draw, to sample_field on the same model.
class SynthesisPlan {
  public:
    explicit SynthesisPlan(const CovarianceModel& model);

    FieldRealization sample(std::uint64_t seed) const;

    const GridSpec2D& grid() const { return grid_; }

  private:
    GridSpec2D grid_;
    DiskSupport support_;
    double scale_ = 0.0;
    std::vector<int> modes_;
    std::vector<std::vector<std::complex<double>>> coef_;
    std::vector<double> radial_;  // (1+|xi|^2)^(-(1+eps)/2) per node
    std::vector<double> phi_;     // frequency angle per node
    std::vector<double> ramp_;    // support collar per node
};

// Draws lambda(x) = Re Int e^{i x.xi} sqrt(sigma(x,xi)) dW(xi) on the grid.
//
// Realization: complex white noise g_xi (counter-based, keyed by the grid
// index of xi, so the draw is independent of thread count and identical for
// identical seeds) is filtered by sqrt(sigma) and inverse-FFT'd.  The
// x-dependence of sqrt(sigma) is handled by an exact angular-mode split:
//   sqrt(b(x,theta)) = Sum_m c_m(x) e^{i m theta}   (even m only),
// so lambda(x) = sqrt(2/(Lx Ly)) * Re Sum_m c_m(x) * BWD[e^{i m phi(xi)}
// (1+|xi|^2)^(-(1+eps)/2) g_xi](x), one inverse FFT per retained mode.
// Modes are retained up to |m| <= min(16, n_ang/2 - 2); for the quadratic
// strength class the truncation error is far below sampling noise unless the
// tensor is rank-one, where the |cos| angular profile makes the tail O(m^-2)
// (still <1% in b at m = 16).  The result is multiplied by a C-infinity bump
// equal to 1 on the support disk and 0 outside a 2-cell collar.
//
// Equivalent to SynthesisPlan(model).sample(seed); prefer a shared plan for
// ensembles.
FieldRealization sample_field(const CovarianceModel& model,
                              std::uint64_t seed);

}  // namespace iscat
