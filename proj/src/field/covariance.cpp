#include "field/covariance.hpp"

#include <cmath>
#include <complex>

#include "core/fft.hpp"
#include "core/rng.hpp"
#include "field/synthesis.hpp"

namespace iscat {

double CovarianceModel::symbol(std::size_t q, double xi1, double xi2) const {
    const double r2 = xi1 * xi1 + xi2 * xi2;
    const double rad = std::pow(1.0 + r2, -1.0 - b.eps);
    if (r2 == 0.0) {
        double mean = 0.0;
        for (const auto& p : b.planes) mean += p[q];
        return mean / b.n_ang * rad;
    }
    return b.eval_node(q, std::atan2(xi2, xi1)) * rad;
}

namespace {

std::size_t snap(const GridSpec2D& g, std::array<double, 2> z,
                 std::uint32_t& i, std::uint32_t& j) {
    const double u = (z[0] - g.origin[0]) / g.hx();
    const double v = (z[1] - g.origin[1]) / g.hy();
    i = std::uint32_t(std::min<double>(g.nx - 1.0, std::max(0.0, std::round(u))));
    j = std::uint32_t(std::min<double>(g.ny - 1.0, std::max(0.0, std::round(v))));
    return g.idx(i, j);
}

}  // namespace

double covariance_kernel(const CovarianceModel& model, std::array<double, 2> z1,
                         std::array<double, 2> z2) {
    const GridSpec2D& g = model.b.grid;
    std::uint32_t i1, j1, i2, j2;
    const std::size_t q1 = snap(g, z1, i1, j1);
    snap(g, z2, i2, j2);

    std::vector<std::complex<double>> plane(g.size());
    for (std::uint32_t j = 0; j < g.ny; ++j)
        for (std::uint32_t i = 0; i < g.nx; ++i)
            plane[g.idx(i, j)] = model.symbol(q1, g.freq_x(i), g.freq_y(j));
    fft::dft2d(g.nx, g.ny, plane.data(), +1);

    // Offset on the periodic grid: c depends on z1 - z2 only.
    const std::uint32_t di = (i1 + g.nx - i2) % g.nx;
    const std::uint32_t dj = (j1 + g.ny - j2) % g.ny;
    const double cell = (2.0 * M_PI / g.extent[0]) * (2.0 * M_PI / g.extent[1]);
    return plane[g.idx(di, dj)].real() * cell / (4.0 * M_PI * M_PI);
}

std::vector<PairStat> empirical_covariance(
    const CovarianceModel& model,
    const std::vector<std::array<std::array<double, 2>, 2>>& pairs,
    std::uint32_t n_real, std::uint64_t seed) {
    const GridSpec2D& g = model.b.grid;
    std::vector<std::size_t> qa(pairs.size()), qb(pairs.size());
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        std::uint32_t i, j;
        qa[p] = snap(g, pairs[p][0], i, j);
        qb[p] = snap(g, pairs[p][1], i, j);
    }
    std::vector<double> sum(pairs.size(), 0.0), sum2(pairs.size(), 0.0);
    const SynthesisPlan plan(model);
    for (std::uint32_t r = 0; r < n_real; ++r) {
        FieldRealization f = plan.sample(rng::sub_seed(seed, r));
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            const double v = f.field.values[qa[p]] * f.field.values[qb[p]];
            sum[p] += v;
            sum2[p] += v * v;
        }
    }
    std::vector<PairStat> out(pairs.size());
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const double m = sum[p] / n_real;
        const double var = std::max(0.0, sum2[p] / n_real - m * m);
        out[p] = {m, std::sqrt(var / n_real)};
    }
    return out;
}

}  // namespace iscat
