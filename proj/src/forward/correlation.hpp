#pragma once

#include <complex>
#include <cstdint>

#include "field/covariance.hpp"
#include "forward/greens.hpp"

namespace iscat {

struct CorrelationEstimate {
    std::complex<double> mean = 0.0;
    double std_error = 0.0;
    int n_realizations = 0;
};

// Monte Carlo estimate of the two-frequency Born correlation
// E[u1(x,y,k1) conj(u1(x,y,k2))] over independent field realizations
// (seeds derived from `seed`).  Requires n_realizations >= 2 and the
// projected segment between x and y to clear the support disk.
CorrelationEstimate estimate_correlation(const CovarianceModel& model,
                                         const Point3& x, const Point3& y,
                                         double k1, double k2,
                                         int n_realizations, double p,
                                         std::uint64_t seed);

}  // namespace iscat
