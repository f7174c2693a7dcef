#include "sradon/nullspace.hpp"

#include <cmath>
#include <stdexcept>

#include "core/fft.hpp"

namespace iscat {

AngularModes angular_modes(const LocalStrength& f) {
    const std::uint32_t n = f.n_ang;
    const std::size_t sz = f.grid.size();
    AngularModes am;
    am.grid = f.grid;
    am.n_ang = n;
    for (int m = 0; m <= int(n / 2); m += 2) am.orders.push_back(m);
    am.cosine.assign(am.orders.size(), std::vector<double>(sz, 0.0));
    am.sine.assign(am.orders.size(), std::vector<double>(sz, 0.0));
    for (std::size_t mi = 0; mi < am.orders.size(); ++mi) {
        const int m = am.orders[mi];
        // Normalization of the discrete angular transform: mean for m = 0,
        // 2/n for interior orders, 1/n for the Nyquist order (cos only).
        const double wc =
            (m == 0 || m == int(n / 2)) ? 1.0 / n : 2.0 / n;
        for (std::uint32_t j = 0; j < n; ++j) {
            const double th = f.theta(j);
            const double cw = wc * std::cos(m * th);
            const double sw = wc * std::sin(m * th);
            const auto& p = f.planes[j];
            auto& C = am.cosine[mi];
            auto& S = am.sine[mi];
            if (cw != 0.0)
                for (std::size_t q = 0; q < sz; ++q) C[q] += cw * p[q];
            if (m != 0 && m != int(n / 2) && sw != 0.0)
                for (std::size_t q = 0; q < sz; ++q) S[q] += sw * p[q];
        }
    }
    return am;
}

AngularSplit null_space_project(const LocalStrength& f) {
    const std::uint32_t n = f.n_ang;
    const std::size_t sz = f.grid.size();
    const double tol = 1e-12 * std::max(1.0, f.max_value());
    for (std::uint32_t j = 0; j < n / 2; ++j)
        for (std::size_t q = 0; q < sz; ++q)
            if (std::abs(f.planes[j][q] - f.planes[j + n / 2][q]) > tol)
                throw std::invalid_argument(
                    "null_space_project: strength must be even in direction "
                    "(plane j must equal plane j + n_ang/2)");

    const AngularModes am = angular_modes(f);
    const GridSpec2D& g = f.grid;

    // Per order, antisymmetrize the spatial spectrum of the (cos, sin)
    // coefficient pair about the axis perpendicular to xi.
    std::vector<std::vector<double>> odd_cos(am.orders.size(),
                                             std::vector<double>(sz, 0.0));
    std::vector<std::vector<double>> odd_sin(am.orders.size(),
                                             std::vector<double>(sz, 0.0));
    for (std::size_t mi = 0; mi < am.orders.size(); ++mi) {
        const int m = am.orders[mi];
        if (m == 0 || m == int(n / 2)) continue;  // wholly in the complement
        auto Ch = fft::forward_phys(g, am.cosine[mi]);
        auto Sh = fft::forward_phys(g, am.sine[mi]);
        for (std::uint32_t j = 0; j < g.ny; ++j)
            for (std::uint32_t i = 0; i < g.nx; ++i) {
                const std::size_t q = g.idx(i, j);
                const double x1 = g.freq_x(i), x2 = g.freq_y(j);
                // The zero bin has no reflection axis, and on the spatial
                // Nyquist lines the lattice folds +/- frequencies together,
                // so the reflection is not representable there; both go
                // wholly to the complement (their content is negligible for
                // resolved fields, and this keeps the split an exact
                // projector with Hermitian spectra).
                const bool nyq_x = (g.nx % 2 == 0) && (i == g.nx / 2);
                const bool nyq_y = (g.ny % 2 == 0) && (j == g.ny / 2);
                if ((x1 == 0.0 && x2 == 0.0) || nyq_x || nyq_y) {
                    Ch[q] = 0.0;
                    Sh[q] = 0.0;
                    continue;
                }
                const double axis = std::atan2(x2, x1) + 0.5 * M_PI;
                const double c = std::cos(2.0 * m * axis);
                const double s = std::sin(2.0 * m * axis);
                const auto C = Ch[q], S = Sh[q];
                Ch[q] = 0.5 * ((1.0 - c) * C - s * S);
                Sh[q] = 0.5 * ((1.0 + c) * S - s * C);
            }
        const auto Cn = fft::inverse_phys(g, Ch);
        const auto Sn = fft::inverse_phys(g, Sh);
        for (std::size_t q = 0; q < sz; ++q) {
            odd_cos[mi][q] = Cn[q].real();
            odd_sin[mi][q] = Sn[q].real();
        }
    }

    AngularSplit out;
    out.odd.grid = f.grid;
    out.odd.support = f.support;
    out.odd.eps = f.eps;
    out.odd.n_ang = n;
    out.odd.planes.assign(n, std::vector<double>(sz, 0.0));
    out.even = out.odd;

    // Resynthesize the odd planes on the first half circle and mirror, so
    // the outputs keep the direction evenness bit for bit.
    for (std::uint32_t j = 0; j < n / 2; ++j) {
        const double th = f.theta(j);
        auto& pod = out.odd.planes[j];
        for (std::size_t mi = 0; mi < am.orders.size(); ++mi) {
            const int m = am.orders[mi];
            if (m == 0 || m == int(n / 2)) continue;
            const double cm = std::cos(m * th), sm = std::sin(m * th);
            const auto& C = odd_cos[mi];
            const auto& S = odd_sin[mi];
            for (std::size_t q = 0; q < sz; ++q)
                pod[q] += cm * C[q] + sm * S[q];
        }
        out.odd.planes[j + n / 2] = pod;
        auto& pev = out.even.planes[j];
        const auto& pin = f.planes[j];
        for (std::size_t q = 0; q < sz; ++q) pev[q] = pin[q] - pod[q];
        out.even.planes[j + n / 2] = pev;
    }

    double no = 0.0, nf = 0.0;
    for (std::uint32_t j = 0; j < n; ++j)
        for (std::size_t q = 0; q < sz; ++q) {
            no += out.odd.planes[j][q] * out.odd.planes[j][q];
            nf += f.planes[j][q] * f.planes[j][q];
        }
    out.odd_fraction = nf > 0.0 ? std::sqrt(no / nf) : 0.0;
    return out;
}

}  // namespace iscat
