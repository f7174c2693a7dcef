#include "core/grid.hpp"

#include <cmath>

namespace iscat {

double GridSpec2D::freq_x(std::uint32_t i) const {
    const double d = 2.0 * M_PI / extent[0];
    return d * (i <= nx / 2 ? double(i) : double(i) - double(nx));
}

double GridSpec2D::freq_y(std::uint32_t j) const {
    const double d = 2.0 * M_PI / extent[1];
    return d * (j <= ny / 2 ? double(j) : double(j) - double(ny));
}

bool GridSpec2D::square_cells(double rtol) const {
    return std::abs(hx() - hy()) <= rtol * std::max(hx(), hy());
}

bool GridSpec2D::contains_disk(std::array<double, 2> c, double r,
                               double margin_cells) const {
    const double m = margin_cells * h();
    return c[0] - r - m >= origin[0] && c[1] - r - m >= origin[1] &&
           c[0] + r + m <= origin[0] + extent[0] - hx() &&
           c[1] + r + m <= origin[1] + extent[1] - hy();
}

double bilinear(const GridSpec2D& g, const std::vector<double>& f, double px,
                double py) {
    const double u = (px - g.origin[0]) / g.hx();
    const double v = (py - g.origin[1]) / g.hy();
    if (u < 0.0 || v < 0.0 || u > g.nx - 1.0 || v > g.ny - 1.0) return 0.0;
    std::uint32_t i0 = std::uint32_t(u), j0 = std::uint32_t(v);
    if (i0 >= g.nx - 1) i0 = g.nx - 2;
    if (j0 >= g.ny - 1) j0 = g.ny - 2;
    const double a = u - i0, b = v - j0;
    const double f00 = f[g.idx(i0, j0)], f10 = f[g.idx(i0 + 1, j0)];
    const double f01 = f[g.idx(i0, j0 + 1)], f11 = f[g.idx(i0 + 1, j0 + 1)];
    return (1 - a) * (1 - b) * f00 + a * (1 - b) * f10 + (1 - a) * b * f01 +
           a * b * f11;
}

}  // namespace iscat
