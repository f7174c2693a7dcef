#include "forward/measure.hpp"

#include <cmath>
#include <stdexcept>

#include "core/parallel.hpp"
#include "core/quad.hpp"
#include "forward/born.hpp"
#include "forward/density.hpp"

namespace iscat {

BornBackscatter::BornBackscatter(const FieldRealization& lambda,
                                 const Point3& x, double p, double bin_width)
    : db_(bin_width), p_(p) {
    if (!(x[2] > 0.0))
        throw std::domain_error(
            "BornBackscatter: measurement point must be above the plane");
    const GridSpec2D& g = lambda.field.grid;
    const double cell = g.h() * g.h(), x32 = x[2] * x[2];

    double dmin = 1e300, dmax = 0.0;
    for (std::uint32_t j = 0; j < g.ny; ++j)
        for (std::uint32_t i = 0; i < g.nx; ++i) {
            if (lambda.field.values[g.idx(i, j)] == 0.0) continue;
            const double d1 = x[0] - g.x(i), d2 = x[1] - g.y(j);
            const double d = std::sqrt(d1 * d1 + d2 * d2 + x32);
            dmin = std::min(dmin, d);
            dmax = std::max(dmax, d);
        }
    if (dmax == 0.0) {  // identically zero field
        d0_ = 0.0;
        return;
    }
    d0_ = dmin;
    const std::size_t nbins = std::size_t((dmax - dmin) / db_) + 2;
    if (nbins > (std::size_t(1) << 24))
        throw std::invalid_argument(
            "BornBackscatter: distance range too large for the bin width");
    w_.assign(nbins, 0.0);
    for (std::uint32_t j = 0; j < g.ny; ++j)
        for (std::uint32_t i = 0; i < g.nx; ++i) {
            const double lam = lambda.field.values[g.idx(i, j)];
            if (lam == 0.0) continue;
            const double d1 = x[0] - g.x(i), d2 = x[1] - g.y(j);
            const double d = std::sqrt(d1 * d1 + d2 * d2 + x32);
            const double t = (d - d0_) / db_;
            const std::size_t b = std::size_t(t);
            const double frac = t - double(b);
            const double wgt = lam * cell / (d * d);
            w_[b] += wgt * (1.0 - frac);
            w_[b + 1] += wgt * frac;
        }
}

std::complex<double> BornBackscatter::eval(double k) const {
    if (w_.empty()) return 0.0;
    const double ph0 = 2.0 * k * d0_, phs = 2.0 * k * db_;
    std::complex<double> rot(std::cos(ph0), std::sin(ph0));
    const std::complex<double> step(std::cos(phs), std::sin(phs));
    std::complex<double> acc = 0.0;
    for (std::size_t b = 0; b < w_.size(); ++b) {
        if (w_[b] != 0.0) acc += w_[b] * rot;
        rot *= step;
        // unit-modulus drift correction
        if ((b & 0xfff) == 0xfff) rot /= std::abs(rot);
    }
    return acc / (4.0 * M_PI * M_PI * std::pow(k, p_));
}

double measure(const FieldRealization& lambda, const Point3& x,
               const MeasurementConfig& config, ForwardSolver solver,
               PointDiagnostics* diag, bool* short_band_warning) {
    const double K = config.band_K;
    if (!(K > 1.0))
        throw std::invalid_argument("measure: band must satisfy K > 1");
    if (short_band_warning) *short_band_warning = K < 8.0;

    const int panels = std::max(1, int(std::lround(K - 1.0)));
    const int order =
        std::max(1, int((config.band_nodes + panels - 1) / panels));
    const auto& gl = quad::gauss_legendre(order);
    const double wexp = 2.0 * (1.0 + config.eps + config.p);

    // Node table: wavenumber and quadrature weight per node.
    const std::size_t n_nodes = std::size_t(panels) * order;
    std::vector<double> kn(n_nodes), wn(n_nodes), Fn(n_nodes);
    for (int pnl = 0; pnl < panels; ++pnl) {
        const double a = 1.0 + (K - 1.0) * pnl / panels;
        const double b = 1.0 + (K - 1.0) * (pnl + 1) / panels;
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (int q = 0; q < order; ++q) {
            kn[pnl * order + q] = mid + half * gl.x[q];
            wn[pnl * order + q] = half * gl.w[q];
        }
    }

    if (solver == ForwardSolver::born) {
        const BornBackscatter born(lambda, x, config.p);
        par::parallel_for(n_nodes, [&](std::size_t n) {
            Fn[n] = std::pow(kn[n], wexp) * std::norm(born.eval(kn[n]));
        });
    } else {
        par::parallel_for(n_nodes, [&](std::size_t n) {
            const auto phi = solve_density(lambda, x, kn[n], config);
            Fn[n] =
                std::pow(kn[n], wexp) * std::norm(scattered_field(phi, x));
        });
    }

    if (diag) {
        diag->k_nodes.assign(kn.begin(), kn.end());
        diag->integrand.assign(Fn.begin(), Fn.end());
        diag->running_K.clear();
        diag->running_avg.clear();
    }
    double total = 0.0, last_panel = 0.0;
    for (int pnl = 0; pnl < panels; ++pnl) {
        double psum = 0.0;
        for (int q = 0; q < order; ++q)
            psum += wn[pnl * order + q] * Fn[pnl * order + q];
        total += psum;
        last_panel = psum;
        if (diag) {
            const double b = 1.0 + (K - 1.0) * (pnl + 1) / panels;
            diag->running_K.push_back(b);
            diag->running_avg.push_back(b > 1.0 ? total / (b - 1.0) : 0.0);
        }
    }
    if (diag) diag->tail_fraction = total > 0.0 ? last_panel / total : 0.0;
    return total / (K - 1.0);
}

}  // namespace iscat
