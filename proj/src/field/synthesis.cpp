#include "field/synthesis.hpp"

#include <cmath>
#include <complex>

#include "core/fft.hpp"
#include "core/rng.hpp"
#include "field/bump.hpp"

namespace iscat {

SynthesisPlan::SynthesisPlan(const CovarianceModel& model)
    : grid_(model.b.grid), support_(model.b.support) {
    const LocalStrength& b = model.b;
    const GridSpec2D& g = grid_;
    const std::size_t n = g.size();
    const std::uint32_t n_ang = b.n_ang;

    // sqrt(b) angle planes feed the angular-mode coefficients.
    std::vector<std::vector<double>> sq(n_ang, std::vector<double>(n));
    for (std::uint32_t j = 0; j < n_ang; ++j)
        for (std::size_t q = 0; q < n; ++q)
            sq[j][q] = std::sqrt(std::max(0.0, b.planes[j][q]));

    const std::uint32_t m_max =
        std::min<std::uint32_t>(16, n_ang / 2 >= 2 ? n_ang / 2 - 2 : 0);

    // Retained-mode scan: modes with negligible sup|c_m| cost an FFT each and
    // contribute nothing (isotropic strengths keep only m = 0).
    double c0_max = 0.0;
    for (std::uint32_t m = 0; m <= m_max; m += 2) {
        std::vector<std::complex<double>> cm(n, 0.0);
        for (std::uint32_t j = 0; j < n_ang; ++j) {
            const double ph = -double(m) * b.theta(j);
            const std::complex<double> tw(std::cos(ph), std::sin(ph));
            const auto& row = sq[j];
            for (std::size_t q = 0; q < n; ++q) cm[q] += tw * row[q];
        }
        double mx = 0.0;
        for (auto& v : cm) {
            v /= double(n_ang);
            mx = std::max(mx, std::abs(v));
        }
        if (m == 0) c0_max = mx;
        if (mx > 1e-14 * std::max(1.0, c0_max)) {
            modes_.push_back(int(m));
            coef_.push_back(std::move(cm));
        }
    }

    // Radial filter (1+|xi|^2)^(-(1+eps)/2) and per-frequency angle.
    radial_.resize(n);
    phi_.resize(n);
    for (std::uint32_t j = 0; j < g.ny; ++j)
        for (std::uint32_t i = 0; i < g.nx; ++i) {
            const double x1 = g.freq_x(i), x2 = g.freq_y(j);
            const std::size_t q = g.idx(i, j);
            radial_[q] =
                std::pow(1.0 + x1 * x1 + x2 * x2, -0.5 * (1.0 + b.eps));
            phi_[q] = (x1 == 0.0 && x2 == 0.0) ? 0.0 : std::atan2(x2, x1);
        }

    // sqrt(2): lambda is the real part of a proper complex field, which
    // halves the variance.  Each noise increment carries
    // sqrt(dxi1 dxi2)/(2 pi) = 1/sqrt(Lx Ly).
    scale_ = std::sqrt(2.0 / (g.extent[0] * g.extent[1]));

    // C-infinity support collar: 1 on the disk, 0 past two cells outside.
    const double collar = 2.0 * g.h();
    ramp_.resize(n);
    for (std::uint32_t j = 0; j < g.ny; ++j)
        for (std::uint32_t i = 0; i < g.nx; ++i)
            ramp_[g.idx(i, j)] =
                smooth_ramp(support_.dist(g.x(i), g.y(j)) / collar);
}

FieldRealization SynthesisPlan::sample(std::uint64_t seed) const {
    const GridSpec2D& g = grid_;
    const std::size_t n = g.size();

    // White noise per frequency node, fixed by (seed, node index) alone.
    std::vector<std::complex<double>> noise(n);
    for (std::size_t q = 0; q < n; ++q)
        noise[q] = rng::complex_normal(seed, 0, q);

    std::vector<std::complex<double>> acc(n, 0.0);
    std::vector<std::complex<double>> buf(n);
    for (std::size_t t = 0; t < modes_.size(); ++t) {
        const int m = modes_[t];
        for (int sign : {+1, -1}) {
            if (m == 0 && sign < 0) continue;
            for (std::size_t q = 0; q < n; ++q) {
                const double ph = sign * m * phi_[q];
                buf[q] = noise[q] * radial_[q] *
                         std::complex<double>(std::cos(ph), std::sin(ph));
            }
            fft::dft2d(g.nx, g.ny, buf.data(), +1);
            if (sign > 0)
                for (std::size_t q = 0; q < n; ++q) acc[q] += coef_[t][q] * buf[q];
            else
                for (std::size_t q = 0; q < n; ++q)
                    acc[q] += std::conj(coef_[t][q]) * buf[q];
        }
    }

    FieldRealization out;
    out.seed = seed;
    out.field.grid = g;
    out.field.values.resize(n);
    for (std::size_t q = 0; q < n; ++q)
        out.field.values[q] = scale_ * acc[q].real() * ramp_[q];
    double leak = 0.0;
    for (std::uint32_t j = 0; j < g.ny; ++j)
        for (std::uint32_t i = 0; i < g.nx; ++i)
            if (support_.dist(g.x(i), g.y(j)) > 0.0)
                leak = std::max(leak, std::abs(out.field.values[g.idx(i, j)]));
    out.support_leak = leak;
    return out;
}

FieldRealization sample_field(const CovarianceModel& model,
                              std::uint64_t seed) {
    return SynthesisPlan(model).sample(seed);
}

}  // namespace iscat
