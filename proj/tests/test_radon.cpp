#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "core/fft.hpp"
#include "core/quad.hpp"
#include "field/bump.hpp"
#include "field/presets.hpp"
#include "field/strength.hpp"
#include "sradon/frad.hpp"
#include "sradon/nullspace.hpp"
#include "sradon/radon.hpp"
#include "sradon/slices.hpp"

using namespace iscat;

namespace {

// Smooth positive phantom with cos(2 theta) anisotropy, tapered to zero well
// inside the support disk so the sharp support cut never matters.
double waves_rule(double px, double py, double th) {
    const double rad = std::hypot(px, py);
    const double g = std::exp(-(px * px + py * py) / (2.0 * 0.3 * 0.3)) *
                     smooth_plateau(rad, 0.44, 0.6);
    return g * (1.0 + 0.5 * std::cos(2.0 * th));
}

std::vector<double> dense_radii(double r0, double r1, double dr) {
    std::vector<double> r;
    for (double v = r0; v <= r1 + 1e-12; v += dr) r.push_back(v);
    return r;
}

// Zero-pads a plane living on `sub` into `lat` (same spacing, nodes aligned)
// and returns its lattice Fourier transform.
std::vector<std::complex<double>> embed_fft(const GridSpec2D& lat,
                                            const GridSpec2D& sub,
                                            const std::vector<double>& plane) {
    const double h = lat.h();
    REQUIRE(std::abs(sub.h() - h) < 1e-12);
    const auto i0 =
        std::uint32_t(std::lround((sub.origin[0] - lat.origin[0]) / h));
    const auto j0 =
        std::uint32_t(std::lround((sub.origin[1] - lat.origin[1]) / h));
    REQUIRE(i0 + sub.nx <= lat.nx);
    REQUIRE(j0 + sub.ny <= lat.ny);
    std::vector<double> full(lat.size(), 0.0);
    for (std::uint32_t j = 0; j < sub.ny; ++j)
        for (std::uint32_t i = 0; i < sub.nx; ++i)
            full[lat.idx(i + i0, j + j0)] = plane[sub.idx(i, j)];
    return fft::forward_phys(lat, full);
}

double rel_l2(double num2, double den2) {
    REQUIRE(den2 > 0.0);
    return std::sqrt(num2 / den2);
}

}  // namespace

TEST_CASE("circle integrals match the closed forms") {
    GridSpec2D g{128, 128, {-1.0, -1.0}, {2.0, 2.0}};
    DiskSupport d{{0.0, 0.0}, 0.8};

    // Constant strength on the disk: every interior circle integrates to
    // 2 pi c in arc length.
    const double c = 0.7;
    auto bc = make_strength(g, d, 0.5, 64,
                            [&](double, double, double) { return c; });
    CHECK(radon_point(bc, 0.1, -0.05, 0.3, 128) ==
          doctest::Approx(2.0 * M_PI * c).epsilon(1e-12));

    // Constant quadratic strength: the circular mean of <theta, A theta> in
    // arc length is pi tr(A).
    AnisotropyField A;
    A.grid = g;
    A.support = d;
    A.a11.assign(g.size(), 0.0);
    A.a22.assign(g.size(), 0.0);
    A.a12.assign(g.size(), 0.0);
    for (std::uint32_t j = 0; j < g.ny; ++j)
        for (std::uint32_t i = 0; i < g.nx; ++i)
            if (d.contains(g.x(i), g.y(j))) {
                const std::size_t q = g.idx(i, j);
                A.a11[q] = 0.6;
                A.a22[q] = 0.3;
                A.a12[q] = 0.1;
            }
    auto bq = build_quadratic_strength(A, 0.5, 64);
    CHECK(radon_point(bq, -0.1, 0.2, 0.25, 128) ==
          doctest::Approx(M_PI * 0.9).epsilon(1e-12));

    // Circles clear of the support integrate to exactly zero.
    CHECK(radon_point(bc, 3.0, 0.0, 0.5, 128) == 0.0);
    CHECK(radon_point(bc, 0.0, 0.0, 2.5, 128) == 0.0);

    // Input validation.
    CHECK_THROWS_AS(radon_forward(bc, g, {0.5}, 32), std::invalid_argument);
    CHECK_THROWS_AS(radon_forward(bc, g, std::vector<double>{}, 128),
                    std::invalid_argument);
    CHECK_THROWS_AS(radon_forward(bc, g, {-0.5, 0.5}, 128),
                    std::invalid_argument);
    CHECK_THROWS_AS(radon_forward(bc, g, {0.5, 0.4}, 128),
                    std::invalid_argument);
    // Radii gaps coarser than the strength grid do not resolve the support.
    CHECK_THROWS_AS(radon_forward(bc, g, {0.2, 0.5}, 128),
                    std::invalid_argument);
}

TEST_CASE("sampled phantom matches adaptive one-dimensional quadrature") {
    GridSpec2D g{192, 192, {-1.0, -1.0}, {2.0, 2.0}};
    DiskSupport d{{0.0, 0.0}, 0.8};
    auto b = make_strength(g, d, 0.5, 128, waves_rule);

    const std::array<std::array<double, 3>, 4> probes{{
        {0.0, 0.0, 0.3},    // concentric, well inside
        {0.3, -0.2, 0.35},  // off-center
        {0.45, 0.1, 0.55},  // crosses the taper region
        {0.9, 0.0, 0.45},   // center outside the bump, circle cuts through
    }};
    for (const auto& pr : probes) {
        const double got = radon_point(b, pr[0], pr[1], pr[2], 128);
        const double want = quad::adaptive_simpson(
            [&](double phi) {
                return waves_rule(pr[0] + pr[2] * std::cos(phi),
                                  pr[1] + pr[2] * std::sin(phi), phi);
            },
            0.0, 2.0 * M_PI, 1e-11);
        CHECK(got == doctest::Approx(want).epsilon(2e-3));
    }
}

TEST_CASE("transform is linear and covariant under shifts and quarter turns") {
    GridSpec2D g{128, 128, {-1.0, -1.0}, {2.0, 2.0}};
    DiskSupport d{{0.0, 0.0}, 0.6};
    auto f1 = make_strength(g, d, 0.5, 64, waves_rule);
    auto f2 = make_strength(g, d, 0.5, 64, [](double px, double py, double th) {
        const double rad = std::hypot(px - 0.1, py + 0.05);
        return std::exp(-rad * rad / 0.05) * (1.0 + 0.3 * std::cos(4.0 * th));
    });

    // Linearity: the transform of 2 f1 + 3 f2 is the same combination of the
    // transforms, to round-off.
    LocalStrength fsum = f1;
    for (std::uint32_t j = 0; j < fsum.n_ang; ++j)
        for (std::size_t q = 0; q < g.size(); ++q)
            fsum.planes[j][q] = 2.0 * f1.planes[j][q] + 3.0 * f2.planes[j][q];
    const double va = radon_point(f1, 0.25, 0.1, 0.4, 128);
    const double vb = radon_point(f2, 0.25, 0.1, 0.4, 128);
    const double vs = radon_point(fsum, 0.25, 0.1, 0.4, 128);
    CHECK(vs == doctest::Approx(2.0 * va + 3.0 * vb).epsilon(1e-12));

    // Integer-cell translation: shifting the strength by (5h, -3h) shifts the
    // transform identically.
    const double h = g.h();
    DiskSupport ds{{5.0 * h, -3.0 * h}, 0.6};
    auto fs =
        make_strength(g, ds, 0.5, 64, [&](double px, double py, double th) {
            return waves_rule(px - 5.0 * h, py + 3.0 * h, th);
        });
    CHECK(radon_point(fs, 0.25 + 5.0 * h, 0.1 - 3.0 * h, 0.4, 128) ==
          doctest::Approx(va).epsilon(1e-12));

    // Quarter-turn rotation of space and direction together: values move with
    // the rotated centers.  The angle lattice is invariant under 90-degree
    // relabeling, so this holds to round-off as well.
    auto frot =
        make_strength(g, d, 0.5, 64, [](double px, double py, double th) {
            return waves_rule(py, -px, th - 0.5 * M_PI);
        });
    CHECK(radon_point(frot, -0.1, 0.25, 0.4, 128) ==
          doctest::Approx(va).epsilon(1e-12));
}

TEST_CASE("fourier side: zero input, DC column, layout guards") {
    GridSpec2D g{64, 64, {-0.5, -0.5}, {1.0, 1.0}};
    DiskSupport d{{0.0, 0.0}, 0.3};
    auto zero = make_strength(g, d, 0.5, 64,
                              [](double, double, double) { return 0.0; });
    GridSpec2D centers{32, 32, {-1.0, -1.0}, {2.0, 2.0}};
    auto radii = dense_radii(0.05, 0.5, 0.015);
    auto rgz = radon_forward(zero, centers, radii, 64);
    auto frz = fourier_radon(rgz);
    double m = 0.0;
    for (const auto& v : frz.values) m = std::max(m, std::abs(v));
    CHECK(m == 0.0);

    // Scattered centers cannot be transformed.
    auto rs = radon_forward(
        zero, std::vector<std::array<double, 2>>{{0.0, 0.1}, {0.7, 0.3}},
        {0.2}, 64);
    CHECK_THROWS_AS(fourier_radon(rs), std::invalid_argument);

    // DC column equals the plain cell-weighted sum of the data per radius.
    auto bc = make_strength(g, d, 0.5, 64, waves_rule);
    auto rg = radon_forward(bc, centers, radii, 64);
    auto fr = fourier_radon(rg);
    const double cell = centers.hx() * centers.hy();
    for (std::size_t ir = 0; ir < radii.size(); ir += 7) {
        double s = 0.0;
        for (std::size_t q = 0; q < centers.size(); ++q) s += rg.at(ir, q);
        s *= cell;
        CHECK(std::abs(fr.at(ir, 0) - s) <= 1e-11 * std::max(1.0, std::abs(s)));
    }
}

TEST_CASE("Fubini identity and spectral slices for a quadratic strength") {
    GridSpec2D g{64, 64, {-1.6, -1.6}, {3.2, 3.2}};
    DiskSupport d{{0.0, 0.0}, 0.8};
    AnisotropyField A = preset_three_lobe(g, d);
    LocalStrength b = build_quadratic_strength(A, 0.5, 64);

    // Angular cosine/sine modes of a quadratic strength are exactly the
    // tensor combinations (a11+a22)/2, (a11-a22)/2 and a12; higher orders
    // vanish.
    const AngularModes am = angular_modes(b);
    REQUIRE(am.orders.size() >= 3);
    REQUIRE(am.orders[0] == 0);
    REQUIRE(am.orders[1] == 2);
    REQUIRE(am.orders[2] == 4);
    double dev0 = 0.0, dev2c = 0.0, dev2s = 0.0, dev4 = 0.0, scale = 0.0;
    for (std::size_t q = 0; q < g.size(); ++q) {
        dev0 = std::max(dev0, std::abs(am.cosine[0][q] -
                                       0.5 * (A.a11[q] + A.a22[q])));
        dev2c = std::max(dev2c, std::abs(am.cosine[1][q] -
                                         0.5 * (A.a11[q] - A.a22[q])));
        dev2s = std::max(dev2s, std::abs(am.sine[1][q] - A.a12[q]));
        dev4 = std::max(dev4, std::max(std::abs(am.cosine[2][q]),
                                       std::abs(am.sine[2][q])));
        scale = std::max(scale, std::abs(A.a11[q]) + std::abs(A.a22[q]));
    }
    REQUIRE(scale > 0.0);
    CHECK(dev0 <= 1e-13 * scale);
    CHECK(dev2c <= 1e-13 * scale);
    CHECK(dev2s <= 1e-13 * scale);
    CHECK(dev4 <= 1e-13 * scale);

    // Circular-mean data on a center lattice with the same spacing as the
    // strength grid, and its lattice Fourier transform.
    GridSpec2D centers{128, 128, {-3.2, -3.2}, {6.4, 6.4}};
    auto radii = dense_radii(0.05, 1.0, 0.05);
    REQUIRE(radii.size() == 20);
    auto rg = radon_forward(b, centers, radii, 64);
    auto fr = fourier_radon(rg);

    // Independent spectral oracle straight from the tensor planes.
    std::vector<double> t0(g.size()), d2(g.size());
    for (std::size_t q = 0; q < g.size(); ++q) {
        t0[q] = 0.5 * (A.a11[q] + A.a22[q]);
        d2[q] = 0.5 * (A.a11[q] - A.a22[q]);
    }
    const auto T0 = embed_fft(centers, g, t0);
    const auto D2 = embed_fft(centers, g, d2);
    const auto S2 = embed_fft(centers, g, A.a12);

    // Fubini identity: the transformed circular means equal
    //   2 pi [ J0(r|xi|) T0 - J2(r|xi|) (D2 cos 2a + S2 sin 2a) ],
    // a the polar angle of xi, over the whole band.
    const double xi_cut = 14.0;
    double num = 0.0, den = 0.0;
    for (std::size_t ir = 4; ir < radii.size(); ir += 5) {
        const double r = radii[ir];
        for (std::uint32_t j = 0; j < centers.ny; ++j)
            for (std::uint32_t i = 0; i < centers.nx; ++i) {
                const double x1 = centers.freq_x(i), x2 = centers.freq_y(j);
                const double xi = std::hypot(x1, x2);
                if (xi > xi_cut) continue;
                const std::size_t q = centers.idx(i, j);
                const double alpha = std::atan2(x2, x1);
                const std::complex<double> rhs =
                    2.0 * M_PI *
                    (std::cyl_bessel_j(0, r * xi) * T0[q] -
                     std::cyl_bessel_j(2, r * xi) *
                         (D2[q] * std::cos(2.0 * alpha) +
                          S2[q] * std::sin(2.0 * alpha)));
                num += std::norm(fr.at(ir, q) - rhs);
                den += std::norm(rhs);
            }
    }
    CHECK(rel_l2(num, den) < 0.01);

    // Slice extraction against the same oracle.
    auto sl = extract_slices(fr, 0.05, 1.0, xi_cut, 4);
    CHECK(sl.masked_fraction <= 0.02);

    // Hermitian symmetry of the slices is exact.
    for (std::uint32_t j = 0; j < centers.ny; ++j)
        for (std::uint32_t i = 0; i < centers.nx; ++i) {
            const std::size_t q = centers.idx(i, j);
            if (!sl.in_band[q] || sl.masked[q]) continue;
            const std::size_t qm = centers.idx((centers.nx - i) % centers.nx,
                                               (centers.ny - j) % centers.ny);
            CHECK(sl.par[qm] == std::conj(sl.par[q]));
            CHECK(sl.perp[qm] == std::conj(sl.perp[q]));
        }

    // DC: par + perp carries the integrated trace.
    const double tr0 = 2.0 * T0[0].real();
    CHECK(std::abs((sl.par[0] + sl.perp[0]).real() - tr0) <= 0.01 * tr0);
    CHECK(std::abs((sl.par[0] + sl.perp[0]).imag()) <= 1e-12 * tr0);

    // Parallel slice = spectrum along xi's own direction; perpendicular
    // slice = spectrum at the rotated direction.
    double npar = 0.0, nperp = 0.0, dsl = 0.0;
    for (std::uint32_t j = 0; j < centers.ny; ++j)
        for (std::uint32_t i = 0; i < centers.nx; ++i) {
            const std::size_t q = centers.idx(i, j);
            if (q == 0 || !sl.in_band[q] || sl.masked[q]) continue;
            const double alpha =
                std::atan2(centers.freq_y(j), centers.freq_x(i));
            const std::complex<double> a2 = D2[q] * std::cos(2.0 * alpha) +
                                            S2[q] * std::sin(2.0 * alpha);
            npar += std::norm(sl.par[q] - (T0[q] + a2));
            nperp += std::norm(sl.perp[q] - (T0[q] - a2));
            dsl += std::norm(T0[q]) + std::norm(a2);
        }
    CHECK(rel_l2(npar, dsl) < 0.02);
    CHECK(rel_l2(nperp, dsl) < 0.02);

    // Guards: the radius window must span enough oscillations, and the row
    // count must support the requested order.
    CHECK_THROWS_AS(extract_slices(fr, 0.05, 0.3, xi_cut, 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(extract_slices(fr, 0.05, 1.0, xi_cut, 40),
                    std::invalid_argument);
}

TEST_CASE("isotropic strength has equal slices matching its spatial spectrum") {
    GridSpec2D g{96, 96, {-1.0, -1.0}, {2.0, 2.0}};
    DiskSupport d{{0.0, 0.0}, 0.7};
    auto b = preset_isotropic(g, d, 0.5, 32);
    GridSpec2D centers{64, 64, {-1.6, -1.6}, {3.2, 3.2}};
    auto radii = dense_radii(0.1, 0.8, 0.02);
    auto rg = radon_forward(b, centers, radii, 64);
    auto fr = fourier_radon(rg);
    auto sl = extract_slices(fr, 0.1, 0.8, 18.0, 8);
    CHECK(sl.masked_fraction < 0.05);

    // Direct spectrum of the direction-independent profile.
    const double cell = g.hx() * g.hy();
    double npar = 0.0, nperp = 0.0, npp = 0.0, den = 0.0;
    for (std::uint32_t j = 0; j < centers.ny; ++j)
        for (std::uint32_t i = 0; i < centers.nx; ++i) {
            const std::size_t q = centers.idx(i, j);
            if (!sl.in_band[q] || sl.masked[q]) continue;
            const double x1 = centers.freq_x(i), x2 = centers.freq_y(j);
            std::complex<double> bh = 0.0;
            for (std::uint32_t jj = 0; jj < g.ny; ++jj)
                for (std::uint32_t ii = 0; ii < g.nx; ++ii) {
                    const double v = b.planes[0][g.idx(ii, jj)];
                    if (v == 0.0) continue;
                    const double ph = g.x(ii) * x1 + g.y(jj) * x2;
                    bh += v * std::complex<double>(std::cos(ph),
                                                   -std::sin(ph));
                }
            bh *= cell;
            npar += std::norm(sl.par[q] - bh);
            nperp += std::norm(sl.perp[q] - bh);
            npp += std::norm(sl.par[q] - sl.perp[q]);
            den += std::norm(bh);
        }
    CHECK(rel_l2(npar, den) < 0.02);
    CHECK(rel_l2(nperp, den) < 0.02);
    CHECK(rel_l2(npp, den) < 0.02);
}

TEST_CASE("reflection null-space split: exactness properties") {
    // Direction-independent strengths have no null component.
    GridSpec2D gi{64, 64, {-1.0, -1.0}, {2.0, 2.0}};
    auto bi = preset_isotropic(gi, DiskSupport{{0.0, 0.0}, 0.7}, 0.5, 32);
    CHECK(null_space_project(bi).odd_fraction < 1e-10);

    GridSpec2D g{128, 128, {-1.0, -1.0}, {2.0, 2.0}};
    DiskSupport d{{0.0, 0.0}, 0.7};
    auto b = preset_directional_waves(g, d, 0.5, 128);
    auto split = null_space_project(b);
    CHECK(split.odd_fraction > 0.05);  // genuinely anisotropic input

    // The two parts reconstruct the input.
    double dev = 0.0;
    for (std::uint32_t j = 0; j < b.n_ang; ++j)
        for (std::size_t q = 0; q < g.size(); ++q)
            dev = std::max(dev, std::abs(split.odd.planes[j][q] +
                                         split.even.planes[j][q] -
                                         b.planes[j][q]));
    CHECK(dev <= 1e-12 * b.max_value());

    // Projecting the null component again changes nothing: the split is a
    // genuine projector.
    auto again = null_space_project(split.odd);
    double n_in = 0.0, n_diff = 0.0, n_even = 0.0;
    for (std::uint32_t j = 0; j < b.n_ang; ++j)
        for (std::size_t q = 0; q < g.size(); ++q) {
            const double v = split.odd.planes[j][q];
            n_in += v * v;
            const double dd = again.odd.planes[j][q] - v;
            n_diff += dd * dd;
            n_even += again.even.planes[j][q] * again.even.planes[j][q];
        }
    REQUIRE(n_in > 0.0);
    CHECK(std::sqrt(n_diff / n_in) < 1e-9);
    CHECK(std::sqrt(n_even / n_in) < 1e-9);

    // Direction evenness is a precondition.
    LocalStrength bad = b;
    bad.planes[0][g.idx(64, 64)] += 1e-6;
    CHECK_THROWS_AS(null_space_project(bad), std::invalid_argument);
}

TEST_CASE("null component is annihilated and leaves the slices unchanged") {
    GridSpec2D g{128, 128, {-1.0, -1.0}, {2.0, 2.0}};
    DiskSupport d{{0.0, 0.0}, 0.7};
    auto b = preset_directional_waves(g, d, 0.5, 128);
    auto split = null_space_project(b);

    GridSpec2D centers{48, 48, {-2.0, -2.0}, {4.0, 4.0}};
    auto radii = dense_radii(0.1, 0.9, 0.015);
    auto rg_odd = radon_forward(split.odd, centers, radii, 64);
    auto rg_even = radon_forward(split.even, centers, radii, 64);

    double n_odd = 0.0, n_even = 0.0;
    for (std::size_t t = 0; t < rg_odd.values.size(); ++t) {
        n_odd += rg_odd.values[t] * rg_odd.values[t];
        n_even += rg_even.values[t] * rg_even.values[t];
    }
    REQUIRE(n_even > 0.0);
    // The null component's circular means vanish; the visible component's do
    // not, by a wide margin.
    CHECK(std::sqrt(n_odd / n_even) < 0.02);
    CHECK(std::sqrt(n_even / n_odd) > 50.0);

    // Contaminating the data with twice the null component moves the
    // extracted slices by less than a percent.
    auto fr_even = fourier_radon(rg_even);
    RadonGrid rg_cont = rg_even;
    for (std::size_t t = 0; t < rg_cont.values.size(); ++t)
        rg_cont.values[t] += 2.0 * rg_odd.values[t];
    auto fr_cont = fourier_radon(rg_cont);
    auto s0 = extract_slices(fr_even, 0.1, 0.9, 16.0, 8);
    auto s1 = extract_slices(fr_cont, 0.1, 0.9, 16.0, 8);
    double npar = 0.0, nperp = 0.0, den = 0.0;
    for (std::size_t q = 0; q < centers.size(); ++q) {
        if (!s0.in_band[q] || s0.masked[q] || s1.masked[q]) continue;
        npar += std::norm(s1.par[q] - s0.par[q]);
        nperp += std::norm(s1.perp[q] - s0.perp[q]);
        den += std::norm(s0.par[q]) + std::norm(s0.perp[q]);
    }
    CHECK(rel_l2(npar, den) < 0.01);
    CHECK(rel_l2(nperp, den) < 0.01);
}
