#include "forward/born.hpp"

#include <cmath>
#include <stdexcept>

namespace iscat {

std::complex<double> scattered_field(const BoundaryDensity& phi,
                                     const Point3& x) {
    if (!(x[2] > 0.0))
        throw std::domain_error(
            "scattered_field: evaluation point must be above the plane");
    const GridSpec2D& g = phi.grid;
    const double cell = g.h() * g.h(), k = phi.k;
    const double x32 = x[2] * x[2];
    std::complex<double> acc = 0.0;
    for (std::uint32_t j = 0; j < g.ny; ++j)
        for (std::uint32_t i = 0; i < g.nx; ++i) {
            const std::complex<double> p = phi.phi[g.idx(i, j)];
            if (p == 0.0) continue;
            const double d1 = x[0] - g.x(i), d2 = x[1] - g.y(j);
            const double r = std::sqrt(d1 * d1 + d2 * d2 + x32);
            const double ph = k * r;
            acc += p * std::complex<double>(std::cos(ph), std::sin(ph)) /
                   (4.0 * M_PI * r);
        }
    return acc * cell;
}

std::complex<double> born_u1(const FieldRealization& lambda, const Point3& x,
                             const Point3& y, double k, double p) {
    if (!(x[2] > 0.0) || !(y[2] > 0.0))
        throw std::domain_error("born_u1: points must be above the plane");
    const GridSpec2D& g = lambda.field.grid;
    const double h = g.h();
    if (k * h > 0.25)
        throw std::invalid_argument(
            "born_u1: k*h > 1/4, the grid cannot resolve the phase");
    const double x32 = x[2] * x[2], y32 = y[2] * y[2];
    std::complex<double> acc = 0.0;
    for (std::uint32_t j = 0; j < g.ny; ++j)
        for (std::uint32_t i = 0; i < g.nx; ++i) {
            const double lam = lambda.field.values[g.idx(i, j)];
            if (lam == 0.0) continue;
            const double z1 = g.x(i), z2 = g.y(j);
            const double a1 = x[0] - z1, a2 = x[1] - z2;
            const double b1 = y[0] - z1, b2 = y[1] - z2;
            const double rx = std::sqrt(a1 * a1 + a2 * a2 + x32);
            const double ry = std::sqrt(b1 * b1 + b2 * b2 + y32);
            const double ph = k * (rx + ry);
            acc += lam / (rx * ry) *
                   std::complex<double>(std::cos(ph), std::sin(ph));
        }
    return acc * h * h / (4.0 * M_PI * M_PI * std::pow(k, p));
}

}  // namespace iscat
