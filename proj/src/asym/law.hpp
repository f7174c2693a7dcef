#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "asym/diagonal.hpp"
#include "field/covariance.hpp"

namespace iscat {

// One wavenumber sample of the compensated-correlation law.
struct LawPoint {
    double k = 0.0;
    std::complex<double> correlation;  // Monte Carlo mean of u1 conj(u1)
    double corr_se = 0.0;              // its standard error
    double compensated = 0.0;          // k^(2+2eps+2p) * Re correlation
    double compensated_se = 0.0;
    double residual = 0.0;  // |compensated - diagonal|
};

enum class LawStatus {
    ok,
    inconclusive,  // statistical error above 25% of the signal
};

struct LawReport {
    std::vector<LawPoint> points;  // ascending in k
    double diagonal = 0.0;         // deterministic limit R(x,x)
    double limit_estimate = 0.0;   // compensated value at the largest k
    double limit_se = 0.0;
    double rel_error = 0.0;        // |limit_estimate - diagonal| / diagonal
    double residual_slope = 0.0;   // log-log slope of residual vs k
    bool residual_monotone = false;  // binned medians decrease low -> high k
    LawStatus status = LawStatus::ok;
};

// Monte Carlo verification of the high-frequency law: the compensated
// correlations k^(2+2eps+2p) E|u_1(x,x,k)|^2 approach the deterministic
// diagonal value, with residuals shrinking as k grows.  The same realization
// seeds are reused at every wavenumber (common random numbers), so the trend
// of the residual in k is not masked by independent sampling noise.
//
// k_list must span at least one decade (max/min >= 10) and resolve on the
// model grid (k h <= 1/4 for every k).  When the statistical error at the
// largest wavenumber exceeds 25% of the signal, the report is marked
// inconclusive rather than failed.
LawReport verify_asymptotic_law(const CovarianceModel& model, const Point3& x,
                                const std::vector<double>& k_list,
                                int n_realizations, double p,
                                std::uint64_t seed);

}  // namespace iscat
