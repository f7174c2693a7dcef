#include "field/anisotropy.hpp"

#include <cmath>

namespace iscat {

double DiskSupport::dist(double px, double py) const {
    const double r = std::hypot(px - center[0], py - center[1]);
    return r <= radius ? 0.0 : r - radius;
}

bool DiskSupport::contains(double px, double py) const {
    return std::hypot(px - center[0], py - center[1]) <= radius;
}

double AnisotropyField::min_eigenvalue() const {
    double mn = 0.0;
    bool first = true;
    for (std::size_t i = 0; i < a11.size(); ++i) {
        const double mean = 0.5 * (a11[i] + a22[i]);
        const double disc =
            std::sqrt(0.25 * (a11[i] - a22[i]) * (a11[i] - a22[i]) +
                      a12[i] * a12[i]);
        const double lo = mean - disc;
        if (first || lo < mn) mn = lo;
        first = false;
    }
    return mn;
}

std::size_t AnisotropyField::clip_psd(double tol) {
    std::size_t changed = 0;
    for (std::size_t i = 0; i < a11.size(); ++i) {
        const double mean = 0.5 * (a11[i] + a22[i]);
        const double half = 0.5 * (a11[i] - a22[i]);
        const double disc = std::sqrt(half * half + a12[i] * a12[i]);
        double lo = mean - disc, hi = mean + disc;
        if (lo >= -tol) continue;
        ++changed;
        // Eigvec for hi: angle phi with tan(2 phi) = 2 a12/(a11-a22).
        const double phi = 0.5 * std::atan2(2.0 * a12[i], a11[i] - a22[i]);
        const double c = std::cos(phi), s = std::sin(phi);
        lo = 0.0;
        if (hi < 0.0) hi = 0.0;
        a11[i] = hi * c * c + lo * s * s;
        a22[i] = hi * s * s + lo * c * c;
        a12[i] = (hi - lo) * c * s;
    }
    return changed;
}

double AnisotropyField::support_leak() const {
    double leak = 0.0;
    for (std::uint32_t j = 0; j < grid.ny; ++j)
        for (std::uint32_t i = 0; i < grid.nx; ++i) {
            if (support.contains(grid.x(i), grid.y(j))) continue;
            const std::size_t q = grid.idx(i, j);
            leak = std::max({leak, std::abs(a11[q]), std::abs(a22[q]),
                             std::abs(a12[q])});
        }
    return leak;
}

}  // namespace iscat
