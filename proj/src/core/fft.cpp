#include "core/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

namespace iscat::fft {

namespace {

std::mutex g_plan_mutex;
std::map<std::tuple<std::uint32_t, std::uint32_t, int>, fftw_plan> g_plans;

fftw_plan get_plan(std::uint32_t nx, std::uint32_t ny, int sign) {
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    auto key = std::make_tuple(nx, ny, sign);
    auto it = g_plans.find(key);
    if (it != g_plans.end()) return it->second;
    // FFTW_UNALIGNED lets the plan run on plain std::vector storage via the
    // new-array interface; FFTW_ESTIMATE keeps planning deterministic.
    std::vector<std::complex<double>> tmp(std::size_t(nx) * ny);
    auto* p = reinterpret_cast<fftw_complex*>(tmp.data());
    fftw_plan plan =
        fftw_plan_dft_2d(int(ny), int(nx), p, p,
                         sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                         FFTW_ESTIMATE | FFTW_UNALIGNED);
    g_plans.emplace(key, plan);
    return plan;
}

}  // namespace

void dft2d(std::uint32_t nx, std::uint32_t ny, std::complex<double>* data,
           int sign) {
    fftw_plan plan = get_plan(nx, ny, sign);
    auto* p = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(plan, p, p);
}

std::vector<std::complex<double>> forward_phys(
    const GridSpec2D& g, const std::vector<std::complex<double>>& f) {
    std::vector<std::complex<double>> F(f);
    dft2d(g.nx, g.ny, F.data(), -1);
    const double cell = g.hx() * g.hy();
    for (std::uint32_t j = 0; j < g.ny; ++j)
        for (std::uint32_t i = 0; i < g.nx; ++i) {
            const double ph =
                -(g.freq_x(i) * g.origin[0] + g.freq_y(j) * g.origin[1]);
            F[g.idx(i, j)] *= cell * std::complex<double>(std::cos(ph),
                                                          std::sin(ph));
        }
    return F;
}

std::vector<std::complex<double>> forward_phys(const GridSpec2D& g,
                                               const std::vector<double>& f) {
    std::vector<std::complex<double>> c(f.begin(), f.end());
    return forward_phys(g, c);
}

std::vector<std::complex<double>> inverse_phys(
    const GridSpec2D& g, const std::vector<std::complex<double>>& F) {
    std::vector<std::complex<double>> f(F);
    // Undo the origin phase, then unnormalized inverse DFT; the measure
    // d xi/(2pi)^2 over one Brillouin cell equals 1/(h^2 N) per bin.
    for (std::uint32_t j = 0; j < g.ny; ++j)
        for (std::uint32_t i = 0; i < g.nx; ++i) {
            const double ph =
                g.freq_x(i) * g.origin[0] + g.freq_y(j) * g.origin[1];
            f[g.idx(i, j)] *= std::complex<double>(std::cos(ph), std::sin(ph));
        }
    dft2d(g.nx, g.ny, f.data(), +1);
    const double scale = 1.0 / (g.hx() * g.hy() * double(g.size()));
    for (auto& v : f) v *= scale;
    return f;
}

}  // namespace iscat::fft
