#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "field/anisotropy.hpp"
#include "forward/greens.hpp"

namespace iscat {

// Geometry and band parameters of the backscatter experiment.  The band is
// [1, K]; band_nodes Gauss-Legendre nodes are spread over unit panels.
struct MeasurementConfig {
    std::vector<Point3> points;
    double band_K = 200.0;
    std::uint32_t band_nodes = 1592;  // >= 8 per unit k at K = 200
    double p = 1.5;                   // frequency-scaling exponent
    double eps = 0.5;                 // field order

    // Throws std::invalid_argument naming the violated assumption:
    // every x3 > 0; projections stay off the support disk ("(A3)");
    // p > eps + 1/2 ("(A4)").
    void validate(const DiskSupport& support) const;
};

// True when the planar segment between the projections of x and y keeps a
// positive distance from the closed support disk (the off-diagonal
// correlation geometry requirement; for x = y it reduces to the point
// condition).
bool segment_clears_support(const DiskSupport& support, const Point3& x,
                            const Point3& y);

struct PointDiagnostics {
    std::vector<double> k_nodes;
    std::vector<double> integrand;    // k^{2(1+eps+p)} |u_s(k)|^2
    std::vector<double> running_K;    // sub-band upper ends K'
    std::vector<double> running_avg;  // (1/(K'-1)) int_1^{K'} ...
    double tail_fraction = 0.0;       // last panel / total
};

struct BackscatterDataset {
    MeasurementConfig config;
    std::vector<double> n0;       // per point
    std::vector<double> std_err;  // per point (0 when not an ensemble)
    std::vector<PointDiagnostics> diag;
    bool short_band_warning = false;  // K < 8
    std::uint64_t seed = 0;
    std::string solver = "born";
};

// CSV columns: x1, x2, x3, n0, stderr.  A sibling <path>.json carries band,
// p, eps, solver, and seed.
void save_dataset(const std::string& csv_path, const BackscatterDataset& ds);
BackscatterDataset load_dataset(const std::string& csv_path);

}  // namespace iscat
