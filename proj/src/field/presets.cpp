#include "field/presets.hpp"

#include <cmath>

#include "field/bump.hpp"

namespace iscat {

namespace {

AnisotropyField empty_tensor(const GridSpec2D& grid,
                             const DiskSupport& support) {
    AnisotropyField A;
    A.grid = grid;
    A.support = support;
    A.a11.assign(grid.size(), 0.0);
    A.a22.assign(grid.size(), 0.0);
    A.a12.assign(grid.size(), 0.0);
    return A;
}

}  // namespace

AnisotropyField preset_three_lobe(const GridSpec2D& grid,
                                  const DiskSupport& support) {
    AnisotropyField A = empty_tensor(grid, support);
    const double R = support.radius;
    const double cx = support.center[0], cy = support.center[1];

    // Lobe centers sit at radius 0.35 R, lobe width 0.35 R.
    const double lobe_ang[3] = {M_PI / 2, M_PI / 2 + 2 * M_PI / 3,
                                M_PI / 2 + 4 * M_PI / 3};
    const double dir_ang[3] = {0.0, M_PI / 3, 2 * M_PI / 3};
    const double amp[3] = {1.0, 0.8, 0.6};
    const double sig = 0.35 * R;

    double ux[3], uy[3], bx[3], by[3];
    for (int i = 0; i < 3; ++i) {
        ux[i] = std::cos(dir_ang[i]);
        uy[i] = std::sin(dir_ang[i]);
        bx[i] = cx + 0.35 * R * std::cos(lobe_ang[i]);
        by[i] = cy + 0.35 * R * std::sin(lobe_ang[i]);
    }

    for (std::uint32_t j = 0; j < grid.ny; ++j)
        for (std::uint32_t i = 0; i < grid.nx; ++i) {
            const double x = grid.x(i), y = grid.y(j);
            const double rad = std::hypot(x - cx, y - cy);
            const double env = smooth_plateau(rad, 0.55 * R, 0.92 * R);
            if (env == 0.0) continue;
            const std::size_t q = grid.idx(i, j);
            for (int t = 0; t < 3; ++t) {
                const double dx = x - bx[t], dy = y - by[t];
                const double w =
                    env * amp[t] *
                    std::exp(-(dx * dx + dy * dy) / (2.0 * sig * sig));
                A.a11[q] += w * ux[t] * ux[t];
                A.a22[q] += w * uy[t] * uy[t];
                A.a12[q] += w * ux[t] * uy[t];
            }
        }
    return A;
}

AnisotropyField preset_directional(const GridSpec2D& grid,
                                   const DiskSupport& support,
                                   double plateau_frac, double taper_frac) {
    AnisotropyField A = empty_tensor(grid, support);
    const double R = support.radius;
    for (std::uint32_t j = 0; j < grid.ny; ++j)
        for (std::uint32_t i = 0; i < grid.nx; ++i) {
            const double rad = std::hypot(grid.x(i) - support.center[0],
                                          grid.y(j) - support.center[1]);
            const double chi =
                smooth_plateau(rad, plateau_frac * R, taper_frac * R);
            // v = (chi, 0), so the only nonzero entry is a11 = chi^2.
            A.a11[grid.idx(i, j)] = chi * chi;
        }
    return A;
}

LocalStrength preset_isotropic(const GridSpec2D& grid,
                               const DiskSupport& support, double eps,
                               std::uint32_t n_ang, bool hard_edge) {
    const double R = support.radius;
    const double cx = support.center[0], cy = support.center[1];
    return make_strength(grid, support, eps, n_ang,
                         [=](double x, double y, double) {
                             const double rad = std::hypot(x - cx, y - cy);
                             if (hard_edge) return rad <= R ? 1.0 : 0.0;
                             return smooth_plateau(rad, 0.7 * R, 0.95 * R);
                         });
}

LocalStrength preset_directional_waves(const GridSpec2D& grid,
                                       const DiskSupport& support, double eps,
                                       std::uint32_t n_ang, double theta0) {
    const double R = support.radius;
    const double cx = support.center[0], cy = support.center[1];
    return make_strength(
        grid, support, eps, n_ang, [=](double x, double y, double th) {
            const double rad = std::hypot(x - cx, y - cy);
            const double g = std::exp(-rad * rad / (2.0 * 0.3 * 0.3 * R * R)) *
                             smooth_plateau(rad, 0.6 * R, 0.9 * R);
            return g * (1.0 + 0.5 * std::cos(2.0 * (th - theta0)) +
                        0.3 * std::cos(4.0 * th));
        });
}

}  // namespace iscat
