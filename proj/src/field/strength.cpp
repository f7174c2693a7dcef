#include "field/strength.hpp"

#include <cmath>

namespace iscat {

namespace {

void check_layout(const GridSpec2D& grid, const DiskSupport& support,
                  double eps, std::uint32_t n_ang) {
    if (eps <= 0.0) throw InvalidModel("regularity exponent must be > 0");
    if (n_ang < 32 || n_ang % 2 != 0)
        throw InvalidModel("n_ang must be even and >= 32");
    if (!grid.square_cells()) throw InvalidModel("grid cells must be square");
    if (!grid.contains_disk(support.center, support.radius, 2.0))
        throw InvalidModel(
            "support disk must fit inside the grid with a 2-cell margin");
}

}  // namespace

double LocalStrength::eval_node(std::size_t node, double ang) const {
    if (quadratic) {
        const double c = std::cos(ang), s = std::sin(ang);
        return qa11[node] * c * c + qa22[node] * s * s +
               2.0 * qa12[node] * c * s;
    }
    const double t = ang / (2.0 * M_PI) * n_ang;
    double fl = std::floor(t);
    const double w = t - fl;
    const std::uint32_t j0 = std::uint32_t((std::int64_t(fl) % n_ang + n_ang) % n_ang);
    const std::uint32_t j1 = (j0 + 1) % n_ang;
    return (1.0 - w) * planes[j0][node] + w * planes[j1][node];
}

double LocalStrength::eval(double px, double py, double ang) const {
    if (quadratic) {
        const double c = std::cos(ang), s = std::sin(ang);
        return bilinear(grid, qa11, px, py) * c * c +
               bilinear(grid, qa22, px, py) * s * s +
               2.0 * bilinear(grid, qa12, px, py) * c * s;
    }
    const double t = ang / (2.0 * M_PI) * n_ang;
    double fl = std::floor(t);
    const double w = t - fl;
    const std::uint32_t j0 = std::uint32_t((std::int64_t(fl) % n_ang + n_ang) % n_ang);
    const std::uint32_t j1 = (j0 + 1) % n_ang;
    return (1.0 - w) * bilinear(grid, planes[j0], px, py) +
           w * bilinear(grid, planes[j1], px, py);
}

double LocalStrength::max_value() const {
    double m = 0.0;
    for (const auto& p : planes)
        for (double v : p) m = std::max(m, v);
    return m;
}

LocalStrength build_quadratic_strength(const AnisotropyField& A, double eps,
                                       std::uint32_t n_ang, double psd_tol) {
    check_layout(A.grid, A.support, eps, n_ang);
    const double mn = A.min_eigenvalue();
    if (mn < -psd_tol)
        throw InvalidModel("anisotropy tensor is not positive semidefinite "
                           "(min eigenvalue " + std::to_string(mn) + ")");
    LocalStrength b;
    b.grid = A.grid;
    b.support = A.support;
    b.eps = eps;
    b.n_ang = n_ang;
    b.quadratic = true;
    b.qa11 = A.a11;
    b.qa22 = A.a22;
    b.qa12 = A.a12;
    b.planes.assign(n_ang, std::vector<double>(A.grid.size(), 0.0));
    // <theta,A theta> is pi-periodic; fill half the planes and mirror so
    // evenness holds bit-exactly.
    for (std::uint32_t j = 0; j < n_ang / 2; ++j) {
        const double c = std::cos(b.theta(j)), s = std::sin(b.theta(j));
        auto& p = b.planes[j];
        for (std::size_t q = 0; q < p.size(); ++q) {
            double v = A.a11[q] * c * c + A.a22[q] * s * s +
                       2.0 * A.a12[q] * c * s;
            p[q] = v < 0.0 ? 0.0 : v;  // round-off guard at clipped nodes
        }
        b.planes[j + n_ang / 2] = p;
    }
    return b;
}

LocalStrength make_strength(
    const GridSpec2D& grid, const DiskSupport& support, double eps,
    std::uint32_t n_ang,
    const std::function<double(double, double, double)>& rule) {
    check_layout(grid, support, eps, n_ang);
    LocalStrength b;
    b.grid = grid;
    b.support = support;
    b.eps = eps;
    b.n_ang = n_ang;
    b.planes.assign(n_ang, std::vector<double>(grid.size(), 0.0));
    for (std::uint32_t j = 0; j < n_ang / 2; ++j) {
        const double th = b.theta(j);
        auto& p0 = b.planes[j];
        auto& p1 = b.planes[j + n_ang / 2];
        for (std::uint32_t gy = 0; gy < grid.ny; ++gy)
            for (std::uint32_t gx = 0; gx < grid.nx; ++gx) {
                const double px = grid.x(gx), py = grid.y(gy);
                const std::size_t q = grid.idx(gx, gy);
                if (!support.contains(px, py)) continue;
                const double v =
                    0.5 * (rule(px, py, th) + rule(px, py, th + M_PI));
                p0[q] = p1[q] = v < 0.0 ? 0.0 : v;
            }
    }
    return b;
}

}  // namespace iscat
