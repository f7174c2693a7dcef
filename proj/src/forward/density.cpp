#include "forward/density.hpp"

#include <cmath>
#include <limits>

#include "forward/slp.hpp"

namespace iscat {

std::vector<std::complex<double>> incident_trace(const GridSpec2D& grid,
                                                 const Point3& y, double k) {
    std::vector<std::complex<double>> u(grid.size());
    for (std::uint32_t j = 0; j < grid.ny; ++j)
        for (std::uint32_t i = 0; i < grid.nx; ++i)
            u[grid.idx(i, j)] = incident(grid.x(i), grid.y(j), y, k);
    return u;
}

namespace {

std::vector<double> scaled_field(const FieldRealization& lambda, double k,
                                 double p) {
    std::vector<double> lk(lambda.field.values);
    const double s = std::pow(k, -p);
    for (auto& v : lk) v *= s;
    return lk;
}

}  // namespace

BoundaryDensity solve_density(const FieldRealization& lambda, const Point3& y,
                              double k, const MeasurementConfig& config,
                              GmresReport* report) {
    const GridSpec2D& g = lambda.field.grid;
    const auto lk = scaled_field(lambda, k, config.p);
    const SlpOperator S(g, k);

    auto uin = incident_trace(g, y, k);
    std::vector<std::complex<double>> rhs(g.size());
    for (std::size_t q = 0; q < rhs.size(); ++q) rhs[q] = lk[q] * uin[q];

    std::vector<std::complex<double>> tmp(g.size());
    ApplyFn A = [&](const std::vector<std::complex<double>>& v,
                    std::vector<std::complex<double>>& out) {
        S.apply(v, tmp);
        out.resize(v.size());
        for (std::size_t q = 0; q < v.size(); ++q)
            out[q] = 0.5 * v[q] - lk[q] * tmp[q];
    };

    BoundaryDensity d;
    d.grid = g;
    d.k = k;
    d.phi.assign(g.size(), 0.0);
    auto rep = gmres(A, rhs, d.phi, 40, 400, 1e-10);
    if (report) *report = rep;
    return d;
}

std::vector<BoundaryDensity> neumann_terms(const FieldRealization& lambda,
                                           const Point3& y, double k,
                                           const MeasurementConfig& config,
                                           int n_terms) {
    const GridSpec2D& g = lambda.field.grid;
    const auto lk = scaled_field(lambda, k, config.p);
    const SlpOperator S(g, k);
    const auto uin = incident_trace(g, y, k);

    std::vector<BoundaryDensity> terms;
    terms.reserve(n_terms);
    BoundaryDensity t;
    t.grid = g;
    t.k = k;
    t.phi.resize(g.size());
    for (std::size_t q = 0; q < t.phi.size(); ++q)
        t.phi[q] = 2.0 * lk[q] * uin[q];
    terms.push_back(t);
    std::vector<std::complex<double>> s(g.size());
    for (int n = 1; n < n_terms; ++n) {
        S.apply(terms.back().phi, s);
        BoundaryDensity next;
        next.grid = g;
        next.k = k;
        next.phi.resize(g.size());
        for (std::size_t q = 0; q < s.size(); ++q)
            next.phi[q] = 2.0 * lk[q] * s[q];
        terms.push_back(std::move(next));
    }
    return terms;
}

BornSeriesProbe born_series_probe(const FieldRealization& lambda,
                                  const Point3& y, double k,
                                  const MeasurementConfig& config,
                                  int n_terms) {
    const auto terms = neumann_terms(lambda, y, k, config, n_terms);
    BornSeriesProbe probe;
    for (const auto& t : terms) {
        double s = 0.0;
        for (const auto& z : t.phi) s += std::norm(z);
        probe.term_norms.push_back(std::sqrt(s));
    }
    for (std::size_t n = 0; n + 1 < probe.term_norms.size(); ++n) {
        const double lo = probe.term_norms[n];
        probe.ratios.push_back(lo > 0.0 ? probe.term_norms[n + 1] / lo : 0.0);
    }
    // Contraction judged on the trailing half: early terms may grow before
    // the geometric regime sets in.
    probe.converging = !probe.ratios.empty();
    for (std::size_t n = probe.ratios.size() / 2; n < probe.ratios.size(); ++n)
        if (!(probe.ratios[n] < 1.0)) probe.converging = false;
    return probe;
}

double detect_k0(const FieldRealization& lambda, const Point3& y,
                 const MeasurementConfig& config,
                 const std::vector<double>& k_scan, int n_terms) {
    for (double k : k_scan)
        if (born_series_probe(lambda, y, k, config, n_terms).converging)
            return k;
    return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace iscat
