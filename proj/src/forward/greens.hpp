#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace iscat {

using Point3 = std::array<double, 3>;

inline double dist3(const Point3& a, const Point3& b) {
    const double d0 = a[0] - b[0], d1 = a[1] - b[1], d2 = a[2] - b[2];
    return std::sqrt(d0 * d0 + d1 * d1 + d2 * d2);
}

// Outgoing free-space kernel e^{ik|x|}/(4 pi |x|).
inline std::complex<double> greens(const Point3& x, double k) {
    const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    if (r == 0.0) throw std::domain_error("greens: evaluation at the origin");
    const double ph = k * r;
    return std::complex<double>(std::cos(ph), std::sin(ph)) /
           (4.0 * M_PI * r);
}

// Incident trace on the boundary plane for a source at y (y3 > 0): the
// direct and image terms coincide at x3 = 0, so the trace is 2 g_k(z - y).
inline std::complex<double> incident(double z1, double z2, const Point3& y,
                                     double k) {
    if (!(y[2] > 0.0))
        throw std::domain_error("incident: source must lie above the plane");
    return 2.0 * greens({z1 - y[0], z2 - y[1], -y[2]}, k);
}

}  // namespace iscat
