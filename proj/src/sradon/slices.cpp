#include "sradon/slices.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

#include "core/parallel.hpp"

namespace iscat {

SpectralSlices extract_slices(const FourierRadon& fr, double r_lo, double r_hi,
                              double xi_max, int max_order, double cond_cap) {
    if (!(xi_max > 0.0))
        throw std::invalid_argument("extract_slices: xi_max must be > 0");
    if (max_order < 0 || max_order % 2 != 0)
        throw std::invalid_argument(
            "extract_slices: max_order must be even and >= 0");
    if (!(r_hi > r_lo))
        throw std::invalid_argument("extract_slices: empty radius window");
    if ((r_hi - r_lo) * xi_max < 4.0 * M_PI)
        throw std::invalid_argument(
            "extract_slices: radius window must span >= 2 oscillation "
            "periods at xi_max");

    const GridSpec2D& g = fr.centers;
    const std::size_t n = g.size();

    // Rows of the fit: radii inside the window, subsampled to a bounded
    // count so the per-frequency solve stays small (stride is deterministic).
    std::vector<std::size_t> rows;
    for (std::size_t ir = 0; ir < fr.radii.size(); ++ir)
        if (fr.radii[ir] >= r_lo && fr.radii[ir] <= r_hi) rows.push_back(ir);
    const std::size_t max_rows = 160;
    if (rows.size() > max_rows) {
        std::vector<std::size_t> thin;
        const std::size_t stride = (rows.size() + max_rows - 1) / max_rows;
        for (std::size_t t = 0; t < rows.size(); t += stride)
            thin.push_back(rows[t]);
        rows.swap(thin);
    }
    const int n_coef = max_order / 2 + 1;
    if (rows.size() < std::size_t(n_coef) + 2)
        throw std::invalid_argument(
            "extract_slices: too few radii inside the window for the "
            "requested angular order");

    SpectralSlices out;
    out.lattice = g;
    out.xi_max = xi_max;
    out.par.assign(n, 0.0);
    out.perp.assign(n, 0.0);
    out.in_band.assign(n, 0);
    out.masked.assign(n, 0);

    // DC: the zero-frequency column is r-independent in exact arithmetic;
    // average it over the window and split evenly so par + perp carries the
    // full angular integral over 2 pi.
    {
        std::complex<double> acc = 0.0;
        for (std::size_t t : rows) acc += fr.at(t, 0);
        acc /= double(rows.size());
        out.par[0] = acc / (2.0 * M_PI);
        out.perp[0] = out.par[0];
        out.in_band[0] = 1;
    }

    // Canonical half of the Hermitian-paired in-band bins.
    struct Bin {
        std::uint32_t i, j;
        std::size_t q, qm;
    };
    std::vector<Bin> bins;
    for (std::uint32_t j = 0; j < g.ny; ++j)
        for (std::uint32_t i = 0; i < g.nx; ++i) {
            if (i == 0 && j == 0) continue;
            const double x1 = g.freq_x(i), x2 = g.freq_y(j);
            if (std::hypot(x1, x2) > xi_max) continue;
            const std::uint32_t im = (g.nx - i) % g.nx;
            const std::uint32_t jm = (g.ny - j) % g.ny;
            const std::size_t q = g.idx(i, j), qm = g.idx(im, jm);
            out.in_band[q] = 1;
            if (qm < q) continue;  // partner already canonical
            bins.push_back({i, j, q, qm});
        }

    const double mu_rel = 1e-8;
    par::parallel_for(bins.size(), [&](std::size_t t) {
        const Bin& bn = bins[t];
        const double xi = std::hypot(g.freq_x(bn.i), g.freq_y(bn.j));
        const std::size_t R = rows.size();
        Eigen::MatrixXd G(R, n_coef);
        Eigen::VectorXd yre(R), yim(R);
        for (std::size_t r = 0; r < R; ++r) {
            const double z = xi * fr.radii[rows[r]];
            double sgn = 1.0;
            for (int c = 0; c < n_coef; ++c) {
                G(r, c) = 2.0 * M_PI * sgn * std::cyl_bessel_j(2 * c, z);
                sgn = -sgn;
            }
            const auto v = fr.at(rows[r], bn.q);
            yre(r) = v.real();
            yim(r) = v.imag();
        }
        // Orders whose basis function is essentially zero across the whole
        // radius window carry no information at this frequency: J_m(xi r)
        // grows like (xi r / 2)^m / m! near zero, and the matching angular
        // coefficients of a smooth compactly supported strength vanish at
        // the same rate.  Drop such columns (pinning their coefficients to
        // zero) instead of letting them wreck the conditioning of the fit.
        std::vector<int> active;
        for (int c = 0; c < n_coef; ++c) {
            double colmax = 0.0;
            for (std::size_t r = 0; r < R; ++r)
                colmax = std::max(colmax, std::abs(G(r, c)));
            if (colmax >= 2.0 * M_PI * 1e-3) active.push_back(c);
        }
        if (active.empty()) {
            out.masked[bn.q] = 1;
            out.masked[bn.qm] = 1;
            return;
        }
        Eigen::MatrixXd Gs(R, active.size());
        for (std::size_t c = 0; c < active.size(); ++c)
            Gs.col(Eigen::Index(c)) = G.col(active[c]);

        Eigen::JacobiSVD<Eigen::MatrixXd> svd(
            Gs, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const auto& sv = svd.singularValues();
        const double smax = sv(0);
        const double smin = sv(sv.size() - 1);
        if (!(smin > 0.0) || smax / smin > cond_cap) {
            out.masked[bn.q] = 1;
            out.masked[bn.qm] = 1;
            return;
        }
        const double mu2 = (mu_rel * smax) * (mu_rel * smax);
        Eigen::VectorXd pre = svd.matrixU().transpose() * yre;
        Eigen::VectorXd pim = svd.matrixU().transpose() * yim;
        for (Eigen::Index c = 0; c < sv.size(); ++c) {
            const double f = sv(c) / (sv(c) * sv(c) + mu2);
            pre(c) *= f;
            pim(c) *= f;
        }
        const Eigen::VectorXd are = svd.matrixV() * pre;
        const Eigen::VectorXd aim = svd.matrixV() * pim;
        std::complex<double> sp = 0.0, sq = 0.0;
        for (std::size_t c = 0; c < active.size(); ++c) {
            const std::complex<double> a(are(Eigen::Index(c)),
                                         aim(Eigen::Index(c)));
            sp += a;
            sq += (active[c] % 2 == 0 ? 1.0 : -1.0) * a;
        }
        out.par[bn.q] = sp;
        out.perp[bn.q] = sq;
        if (bn.qm != bn.q) {
            out.par[bn.qm] = std::conj(sp);
            out.perp[bn.qm] = std::conj(sq);
        }
    });

    std::size_t band = 0, masked = 0;
    for (std::size_t q = 0; q < n; ++q) {
        band += out.in_band[q];
        masked += out.masked[q];
    }
    out.masked_fraction = band ? double(masked) / double(band) : 0.0;
    return out;
}

}  // namespace iscat
