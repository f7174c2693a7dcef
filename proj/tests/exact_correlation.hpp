#pragma once

// Test-support oracle shared by the forward and asymptotics suites.

#include <cmath>
#include <complex>
#include <vector>

#include "core/fft.hpp"
#include "field/bump.hpp"
#include "field/strength.hpp"
#include "forward/greens.hpp"

namespace iscat_test {

// Exact ensemble value of E[u_1(k1) conj(u_1(k2))] at a common backscatter
// point, for an angle-independent strength.  The sampled field is linear in
// its per-frequency white noise, so the expectation collapses to a single
// frequency-lattice sum: with F_k the transform of (Born weight at k) *
// sqrt(b) * (support collar), and r^2 the radial spectral filter,
//   E[u_1(k1) conj u_1(k2)] = (1/(Lx Ly)) sum_xi r^2(xi) F_k1(xi) conj F_k2(xi).
// This costs one transform per wavenumber and has no Monte-Carlo error.
inline std::complex<double> exact_born_correlation(const iscat::LocalStrength& b,
                                                   const iscat::Point3& x,
                                                   double k1, double k2,
                                                   double p) {
    const iscat::GridSpec2D& g = b.grid;
    const std::size_t n = g.size();
    const double collar = 2.0 * g.h();
    const double x32 = x[2] * x[2];
    auto make_f = [&](double k) {
        std::vector<std::complex<double>> f(n);
        const double pref =
            g.hx() * g.hy() / (4.0 * M_PI * M_PI * std::pow(k, p));
        for (std::uint32_t j = 0; j < g.ny; ++j)
            for (std::uint32_t i = 0; i < g.nx; ++i) {
                const std::size_t q = g.idx(i, j);
                const double d1 = x[0] - g.x(i), d2 = x[1] - g.y(j);
                const double r = std::sqrt(d1 * d1 + d2 * d2 + x32);
                const double ph = 2.0 * k * r;
                const double c0 = std::sqrt(std::max(0.0, b.planes[0][q]));
                const double ramp =
                    iscat::smooth_ramp(b.support.dist(g.x(i), g.y(j)) / collar);
                f[q] = pref * c0 * ramp / (r * r) *
                       std::complex<double>(std::cos(ph), std::sin(ph));
            }
        iscat::fft::dft2d(g.nx, g.ny, f.data(), +1);
        return f;
    };
    const auto f1 = make_f(k1);
    const auto f2 = k1 == k2 ? f1 : make_f(k2);
    std::complex<double> acc = 0.0;
    for (std::uint32_t j = 0; j < g.ny; ++j)
        for (std::uint32_t i = 0; i < g.nx; ++i) {
            const double x1 = g.freq_x(i), x2 = g.freq_y(j);
            const double r2 =
                std::pow(1.0 + x1 * x1 + x2 * x2, -(1.0 + b.eps));
            const std::size_t q = g.idx(i, j);
            acc += r2 * f1[q] * std::conj(f2[q]);
        }
    return acc / (g.extent[0] * g.extent[1]);
}

}  // namespace iscat_test
