#pragma once

#include <complex>
#include <vector>

#include "field/synthesis.hpp"
#include "forward/gmres.hpp"
#include "forward/greens.hpp"
#include "forward/measurement.hpp"

namespace iscat {

// Solution density of the boundary integral equation at one wavenumber.
struct BoundaryDensity {
    GridSpec2D grid;
    double k = 0.0;
    std::vector<std::complex<double>> phi;
};

// Incident trace 2 g_k(z - y) sampled on the grid.
std::vector<std::complex<double>> incident_trace(const GridSpec2D& grid,
                                                 const Point3& y, double k);

// Solves (1/2 - lambda_k S_k) phi = lambda_k u_in with lambda_k =
// lambda / k^p, to relative residual 1e-10 (cap carried by SolverError on
// failure).  The right side and every Krylov iterate inherit lambda's
// support, so phi is supported in the disk automatically.
BoundaryDensity solve_density(const FieldRealization& lambda, const Point3& y,
                              double k, const MeasurementConfig& config,
                              GmresReport* report = nullptr);

// First n terms of the Neumann iteration phi_1 = 2 lambda_k u_in,
// phi_{n+1} = 2 lambda_k S phi_n.  The partial sum Sum_{1..N} solves the
// equation up to residual |phi_{N+1}|/2.
std::vector<BoundaryDensity> neumann_terms(const FieldRealization& lambda,
                                           const Point3& y, double k,
                                           const MeasurementConfig& config,
                                           int n_terms);

struct BornSeriesProbe {
    std::vector<double> term_norms;  // |phi_n|, n = 1..N
    std::vector<double> ratios;      // |phi_{n+1}|/|phi_n|
    bool converging = false;         // trailing ratios all < 1
};

BornSeriesProbe born_series_probe(const FieldRealization& lambda,
                                  const Point3& y, double k,
                                  const MeasurementConfig& config,
                                  int n_terms);

// Smallest wavenumber in the scan list whose Neumann iteration contracts
// (the convergence threshold of this realization); NaN when none does.
double detect_k0(const FieldRealization& lambda, const Point3& y,
                 const MeasurementConfig& config,
                 const std::vector<double>& k_scan, int n_terms = 8);

}  // namespace iscat
