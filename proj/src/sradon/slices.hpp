#pragma once

// Extraction of the two recoverable spectral values from circular-mean data.
// At fixed xi the r-dependence of the transformed data is
//   F(xi, r) = sum_{m even} a_m(xi) 2 pi i^m J_m(r |xi|),
// where a_m are the cosine coefficients of the angular profile of
// (F b)(xi, .) measured from the direction of xi (the sine coefficients are
// the null space and leave no trace in r).  Fitting the even-order Bessel
// system over a radius window therefore recovers exactly the invariant part,
// and the two slice values are its evaluations along xi and perpendicular to
// xi:
//   slice_par(xi)  = (F b)(xi, xi^0)        = sum_m a_m,
//   slice_perp(xi) = (F b)(xi, (xi^perp)^0) = sum_m (-1)^(m/2) a_m.
// Both are Hermitian in xi by construction (real data, shared real design).

#include <complex>
#include <cstdint>
#include <vector>

#include "core/grid.hpp"
#include "sradon/frad.hpp"

namespace iscat {

struct SpectralSlices {
    GridSpec2D lattice;  // spatial lattice whose freq set indexes the arrays
    double xi_max = 0.0;
    std::vector<std::complex<double>> par, perp;
    std::vector<std::uint8_t> in_band;  // |xi| <= xi_max (slices valid here)
    std::vector<std::uint8_t> masked;   // in-band bins dropped by the fit
    double masked_fraction = 0.0;       // masked / in-band
};

// Fits the even Bessel system per in-band frequency over radii within
// [r_lo, r_hi], with angular orders m = 0, 2, ..., max_order and spectral
// ridge regularization 1e-8 times the largest singular value.  Frequencies
// whose design matrix exceeds `cond_cap` are masked (slice values zero)
// rather than failing the whole extraction.  The window must span at least
// two oscillation periods at xi_max, and the zero-frequency bin stores the
// r-independent DC value divided by 2 pi in both slices (so their sum is the
// trace identity value).
SpectralSlices extract_slices(const FourierRadon& fr, double r_lo, double r_hi,
                              double xi_max, int max_order = 16,
                              double cond_cap = 1e8);

}  // namespace iscat
