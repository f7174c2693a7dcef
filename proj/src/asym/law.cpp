#include "asym/law.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "forward/correlation.hpp"

namespace iscat {

namespace {

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

LawReport verify_asymptotic_law(const CovarianceModel& model, const Point3& x,
                                const std::vector<double>& k_list,
                                int n_realizations, double p,
                                std::uint64_t seed) {
    if (k_list.size() < 2)
        throw std::invalid_argument(
            "verify_asymptotic_law: need at least two wavenumbers");
    std::vector<double> ks = k_list;
    std::sort(ks.begin(), ks.end());
    if (!(ks.front() > 0.0))
        throw std::invalid_argument(
            "verify_asymptotic_law: wavenumbers must be positive");
    if (ks.back() < 10.0 * ks.front() * (1.0 - 1e-12))
        throw std::invalid_argument(
            "verify_asymptotic_law: the wavenumber list must span at least "
            "one decade");

    const double eps = model.eps();
    const double power = 2.0 + 2.0 * eps + 2.0 * p;

    LawReport rep;
    rep.diagonal = diagonal_R(model.b, x);

    for (double k : ks) {
        const auto est = estimate_correlation(model, x, x, k, k,
                                              n_realizations, p, seed);
        LawPoint pt;
        pt.k = k;
        pt.correlation = est.mean;
        pt.corr_se = est.std_error;
        const double w = std::pow(k, power);
        pt.compensated = w * est.mean.real();
        pt.compensated_se = w * est.std_error;
        pt.residual = std::abs(pt.compensated - rep.diagonal);
        rep.points.push_back(pt);
    }

    const LawPoint& top = rep.points.back();
    rep.limit_estimate = top.compensated;
    rep.limit_se = top.compensated_se;
    rep.rel_error = rep.diagonal > 0.0
                        ? std::abs(rep.limit_estimate - rep.diagonal) /
                              rep.diagonal
                        : std::abs(rep.limit_estimate);

    // Log-log decay slope of the residual (zero residuals are skipped; a fit
    // needs at least two usable points).
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (const auto& pt : rep.points) {
        if (pt.residual <= 0.0) continue;
        const double lx = std::log(pt.k), ly = std::log(pt.residual);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    rep.residual_slope =
        n >= 2 ? (n * sxy - sx * sy) / (n * sxx - sx * sx) : 0.0;

    // Monotone trend check: medians of |residual| over three k-bins.
    const std::size_t m = rep.points.size();
    if (m >= 3) {
        std::vector<double> bins[3];
        for (std::size_t i = 0; i < m; ++i)
            bins[std::min<std::size_t>(2, i * 3 / m)].push_back(
                rep.points[i].residual);
        const double m0 = median(bins[0]), m1 = median(bins[1]),
                     m2 = median(bins[2]);
        rep.residual_monotone = m0 >= m1 && m1 >= m2 && m0 > m2;
    }

    const double signal = std::max(std::abs(rep.limit_estimate), rep.diagonal);
    rep.status = (signal > 0.0 && rep.limit_se > 0.25 * signal)
                     ? LawStatus::inconclusive
                     : LawStatus::ok;
    return rep;
}

}  // namespace iscat
