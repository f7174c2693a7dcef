#include "forward/slp.hpp"

#include <cmath>
#include <stdexcept>

#include "core/fft.hpp"
#include "core/quad.hpp"

namespace iscat {

namespace {

// Exact integral of e^{ikr}/(4 pi r) over one h x h cell centered at the
// origin: the 1/(4 pi r) part has the closed form h ln(1+sqrt 2)/pi, the
// bounded remainder (e^{ikr}-1)/(4 pi r) is handled by an 8x8 tensor
// Gauss-Legendre rule (even order, so no node hits the center).
std::complex<double> singular_cell_weight(double h, double k) {
    const auto& gl = quad::gauss_legendre(8);
    std::complex<double> w = h * std::log(1.0 + std::sqrt(2.0)) / M_PI;
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            const double r =
                0.5 * h * std::hypot(gl.x[a], gl.x[b]);
            const double ph = k * r;
            w += (0.25 * h * h * gl.w[a] * gl.w[b]) *
                 std::complex<double>(std::cos(ph) - 1.0, std::sin(ph)) /
                 (4.0 * M_PI * r);
        }
    return w;
}

}  // namespace

SlpOperator::SlpOperator(const GridSpec2D& grid, double k)
    : grid_(grid), k_(k), px_(2 * grid.nx), py_(2 * grid.ny) {
    if (!(k > 0.0)) throw std::invalid_argument("SlpOperator: k must be > 0");
    if (!grid.square_cells())
        throw std::invalid_argument("SlpOperator: grid cells must be square");
    const double nyquist = M_PI / grid.h();
    if (nyquist <= 2.0 * k)
        throw std::invalid_argument(
            "SlpOperator: grid Nyquist must exceed 2k (aliasing)");

    // The multiplier is the DFT of the range-truncated kernel table
    //   K(d) = h^2 e^{ik|d|}/(4 pi |d|),  d on the padded displacement grid,
    // with the singular cell replaced by its exact integral.  Truncating the
    // kernel to the fundamental square of the 2x-padded period makes the
    // circular convolution equal the aperiodic sum for every displacement
    // between grid nodes: sampling the continuum multiplier
    //   p(xi) = 1/(2 sqrt(|xi|^2-k^2))   (i/(2 sqrt(k^2-|xi|^2)) inside the
    // ring) instead would periodize the slowly decaying propagating tail and
    // contaminate the far field at the percent level regardless of grid
    // scale.  The truncation also mollifies the ring singularity, and the
    // table is phase-shifted so the multiplier lives on the half-cell-shifted
    // frequency lattice (which never meets |xi| = k).
    const double h = grid.h(), cell = h * h;
    mult_.resize(std::size_t(px_) * py_);
    // Half-cell frequency shift = modulation e^{-i pi a/(2 nx)} per input
    // index, conjugate per output index; the kernel table carries the
    // matching phase in the signed displacement.
    mod_.resize(std::max(grid.nx, grid.ny));
    for (std::uint32_t i = 0; i < mod_.size(); ++i) {
        const double th = M_PI * i / double(px_);
        mod_[i] = std::complex<double>(std::cos(th), -std::sin(th));
    }
    const std::complex<double> diag = singular_cell_weight(h, k);
    for (std::uint32_t j = 0; j < py_; ++j)
        for (std::uint32_t i = 0; i < px_; ++i) {
            const std::int64_t da = (i < grid.nx) ? std::int64_t(i)
                                                  : std::int64_t(i) - px_;
            const std::int64_t db = (j < grid.ny) ? std::int64_t(j)
                                                  : std::int64_t(j) - py_;
            std::complex<double> kv;
            if (da == 0 && db == 0) {
                kv = diag;
            } else {
                const double r = h * std::hypot(double(da), double(db));
                const double ph = k * r;
                kv = cell *
                     std::complex<double>(std::cos(ph), std::sin(ph)) /
                     (4.0 * M_PI * r);
            }
            const double th = -M_PI * double(da + db) / double(px_);
            mult_[std::size_t(j) * px_ + i] =
                kv * std::complex<double>(std::cos(th), std::sin(th));
        }
    fft::dft2d(px_, py_, mult_.data(), -1);
}

void SlpOperator::apply_impl(const std::vector<std::complex<double>>& phi,
                             std::vector<std::complex<double>>& out,
                             bool adjoint) const {
    const std::uint32_t nx = grid_.nx, ny = grid_.ny;
    std::vector<std::complex<double>> buf(std::size_t(px_) * py_, 0.0);
    for (std::uint32_t j = 0; j < ny; ++j)
        for (std::uint32_t i = 0; i < nx; ++i)
            buf[std::size_t(j) * px_ + i] =
                phi[grid_.idx(i, j)] * (mod_[i] * mod_[j]);
    fft::dft2d(px_, py_, buf.data(), -1);
    if (adjoint)
        for (std::size_t q = 0; q < buf.size(); ++q)
            buf[q] *= std::conj(mult_[q]);
    else
        for (std::size_t q = 0; q < buf.size(); ++q) buf[q] *= mult_[q];
    fft::dft2d(px_, py_, buf.data(), +1);
    const double scale = 1.0 / (double(px_) * double(py_));
    out.resize(phi.size());
    for (std::uint32_t j = 0; j < ny; ++j)
        for (std::uint32_t i = 0; i < nx; ++i)
            out[grid_.idx(i, j)] = scale * buf[std::size_t(j) * px_ + i] *
                                   std::conj(mod_[i] * mod_[j]);
}

void SlpOperator::apply(const std::vector<std::complex<double>>& phi,
                        std::vector<std::complex<double>>& out) const {
    apply_impl(phi, out, false);
}

void SlpOperator::apply_adjoint(const std::vector<std::complex<double>>& phi,
                                std::vector<std::complex<double>>& out) const {
    apply_impl(phi, out, true);
}

std::vector<std::complex<double>> SlpOperator::apply(
    const std::vector<std::complex<double>>& phi) const {
    std::vector<std::complex<double>> out;
    apply_impl(phi, out, false);
    return out;
}

double SlpOperator::masked_norm(const std::vector<double>& mask,
                                int iterations) const {
    const std::size_t n = grid_.size();
    std::vector<std::complex<double>> v(n), w(n);
    for (std::size_t q = 0; q < n; ++q) v[q] = mask[q];
    double sigma2 = 0.0;
    for (int it = 0; it < iterations; ++it) {
        double nv = 0.0;
        for (auto& z : v) nv += std::norm(z);
        nv = std::sqrt(nv);
        if (nv == 0.0) return 0.0;
        for (auto& z : v) z /= nv;
        // v <- A*A v with A = chi S chi; once |v| = 1 the new norm
        // |A*A v| estimates the top eigenvalue sigma^2.
        apply(v, w);
        for (std::size_t q = 0; q < n; ++q) w[q] *= mask[q];
        apply_adjoint(w, v);
        for (std::size_t q = 0; q < n; ++q) v[q] *= mask[q];
        sigma2 = 0.0;
        for (auto& z : v) sigma2 += std::norm(z);
        sigma2 = std::sqrt(sigma2);
    }
    return std::sqrt(sigma2);
}

std::vector<std::complex<double>> nystrom_apply(
    const GridSpec2D& grid, double k,
    const std::vector<std::complex<double>>& phi) {
    const std::uint32_t nx = grid.nx, ny = grid.ny;
    const double h = grid.h(), cell = h * h;
    const auto& gl = quad::gauss_legendre(8);

    // 8x8 tensor rule on an h x h cell centered at the origin.
    std::vector<double> gx(64), gy(64), gw(64);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            gx[a * 8 + b] = 0.5 * h * gl.x[a];
            gy[a * 8 + b] = 0.5 * h * gl.x[b];
            gw[a * 8 + b] = 0.25 * cell * gl.w[a] * gl.w[b];
        }
    // Exact cell integral of 1/(4 pi r):  int_{cell} dA/r = 4h ln(1+sqrt 2).
    const double diag_sing = h * std::log(1.0 + std::sqrt(2.0)) / M_PI;

    std::vector<std::complex<double>> out(grid.size(), 0.0);
    for (std::uint32_t tj = 0; tj < ny; ++tj)
        for (std::uint32_t ti = 0; ti < nx; ++ti) {
            const double x1 = grid.x(ti), x2 = grid.y(tj);
            std::complex<double> acc = 0.0;
            for (std::uint32_t sj = 0; sj < ny; ++sj)
                for (std::uint32_t si = 0; si < nx; ++si) {
                    const std::complex<double> p = phi[grid.idx(si, sj)];
                    if (p == 0.0) continue;
                    const int di = int(si) - int(ti), dj = int(sj) - int(tj);
                    if (std::abs(di) > 2 || std::abs(dj) > 2) {
                        const double r =
                            std::hypot(x1 - grid.x(si), x2 - grid.y(sj));
                        const double ph = k * r;
                        acc += p * cell / (4.0 * M_PI * r) *
                               std::complex<double>(std::cos(ph),
                                                    std::sin(ph));
                    } else if (di != 0 || dj != 0) {
                        const double c1 = grid.x(si), c2 = grid.y(sj);
                        std::complex<double> w = 0.0;
                        for (int q = 0; q < 64; ++q) {
                            const double r = std::hypot(x1 - (c1 + gx[q]),
                                                        x2 - (c2 + gy[q]));
                            const double ph = k * r;
                            w += gw[q] / (4.0 * M_PI * r) *
                                 std::complex<double>(std::cos(ph),
                                                      std::sin(ph));
                        }
                        acc += p * w;
                    } else {
                        // Diagonal: singular part analytic, the remainder
                        // (e^{ikr}-1)/(4 pi r) is bounded; rule nodes never
                        // hit the center.
                        std::complex<double> w = diag_sing;
                        for (int q = 0; q < 64; ++q) {
                            const double r = std::hypot(gx[q], gy[q]);
                            const double ph = k * r;
                            w += gw[q] *
                                 std::complex<double>(std::cos(ph) - 1.0,
                                                      std::sin(ph)) /
                                 (4.0 * M_PI * r);
                        }
                        acc += p * w;
                    }
                }
            out[grid.idx(ti, tj)] = acc;
        }
    return out;
}

}  // namespace iscat
