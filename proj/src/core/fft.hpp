#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "core/grid.hpp"

namespace iscat::fft {

// Unnormalized in-place 2-D DFT over row-major data (ny rows of nx), sign -1
// for e^{-i..} (forward), +1 for e^{+i..}.  Plans are FFTW_ESTIMATE only so
// results do not depend on planner timing; execution is thread-safe, planning
// is serialized internally.
void dft2d(std::uint32_t nx, std::uint32_t ny, std::complex<double>* data,
           int sign);

// Continuum-convention forward transform of grid samples:
//   F f(xi) = Int f(x) e^{-i x.xi} dx  ~=  h^2 Sum_j f(x_j) e^{-i x_j.xi},
// returned on the grid's FFT frequency set (freq_x/freq_y ordering).  The
// origin phase e^{-i xi.origin} is included, so transforms of the same
// physical function on different grids are comparable bin-by-bin.
std::vector<std::complex<double>> forward_phys(const GridSpec2D& g,
                                               const std::vector<double>& f);
std::vector<std::complex<double>> forward_phys(
    const GridSpec2D& g, const std::vector<std::complex<double>>& f);

// Inverse of forward_phys (continuum convention, (2pi)^-2 Int e^{+i x.xi}).
std::vector<std::complex<double>> inverse_phys(
    const GridSpec2D& g, const std::vector<std::complex<double>>& F);

}  // namespace iscat::fft
