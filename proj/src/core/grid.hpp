#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace iscat {

// Uniform node-centered grid on the boundary plane.  Nodes sit at
//   x_i = origin + i*h,  i = 0..n-1  (per axis),
// so the node set tiles the period [origin, origin + extent) used by the FFT.
// Cells must be square: the spectral synthesis and the single-layer multiplier
// both assume a single spacing h.
struct GridSpec2D {
    std::uint32_t nx = 0, ny = 0;
    std::array<double, 2> origin{0.0, 0.0};
    std::array<double, 2> extent{0.0, 0.0};

    double hx() const { return extent[0] / nx; }
    double hy() const { return extent[1] / ny; }
    double h() const { return hx(); }
    std::size_t size() const { return std::size_t(nx) * ny; }

    double x(std::uint32_t i) const { return origin[0] + i * hx(); }
    double y(std::uint32_t j) const { return origin[1] + j * hy(); }
    std::size_t idx(std::uint32_t i, std::uint32_t j) const {
        return std::size_t(j) * nx + i;
    }

    // Angular FFT frequency for index i on an n-point axis of length L:
    // xi_i = 2*pi/L * (i <= n/2 ? i : i - n).
    double freq_x(std::uint32_t i) const;
    double freq_y(std::uint32_t j) const;

    bool square_cells(double rtol = 1e-9) const;
    // True if the closed disk (center, radius) lies inside the grid with at
    // least `margin_cells` node rows to spare on every side.
    bool contains_disk(std::array<double, 2> center, double radius,
                       double margin_cells) const;
};

// Bilinear interpolation of a row-major field sampled on `g`; points outside
// the node hull evaluate to zero (fields here vanish outside their support
// disk, which the grid contains with margin).
double bilinear(const GridSpec2D& g, const std::vector<double>& f, double px,
                double py);

// Row-major scalar field plus its grid.
struct Field2D {
    GridSpec2D grid;
    std::vector<double> values;
};

}  // namespace iscat
