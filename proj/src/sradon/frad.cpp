#include "sradon/frad.hpp"

#include <stdexcept>

#include "core/fft.hpp"

namespace iscat {

FourierRadon fourier_radon(const RadonGrid& rg) {
    if (!rg.uniform)
        throw std::invalid_argument(
            "fourier_radon: unsupported layout - centers must form a uniform "
            "lattice");
    if (rg.centers.size() != rg.n_centers())
        throw std::invalid_argument(
            "fourier_radon: center lattice does not match the value layout");
    FourierRadon fr;
    fr.centers = rg.centers;
    fr.radii = rg.radii;
    fr.values.resize(rg.values.size());
    const std::size_t n = rg.centers.size();
    std::vector<double> slice(n);
    for (std::size_t ir = 0; ir < rg.radii.size(); ++ir) {
        for (std::size_t q = 0; q < n; ++q) slice[q] = rg.values[ir * n + q];
        const auto F = fft::forward_phys(rg.centers, slice);
        for (std::size_t q = 0; q < n; ++q) fr.values[ir * n + q] = F[q];
    }
    return fr;
}

}  // namespace iscat
