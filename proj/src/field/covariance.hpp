#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "field/strength.hpp"

namespace iscat {

// Covariance model of the boundary field: a pseudodifferential covariance
// with regularized symbol
//   sigma(x, xi) = b(x, xi/|xi|) * (1 + |xi|^2)^(-1-eps),
// anisotropic through the directional strength b, with principal part
// b(x, xi^0) |xi|^(-2-2eps).  eps is carried by the strength.
struct CovarianceModel {
    LocalStrength b;

    double eps() const { return b.eps; }
    // sigma at grid node `q`; the zero frequency uses the angular mean of b
    // (single bin, direction undefined there).
    double symbol(std::size_t q, double xi1, double xi2) const;
};

// Frozen-coefficient kernel: c(z1, z2) = (2 pi)^-2 Sum_xi e^{i (z1-z2).xi}
// sigma(z1, xi) dxi over the grid's frequency cell, i.e. the covariance the
// sampler realizes with coefficients frozen at z1.  Both points are snapped
// to grid nodes.  Exact symmetry under z1 <-> z2 is not expected: freezing at
// z1 vs z2 differs at the sub-principal level (the symmetry test tolerance
// lives with the test).
double covariance_kernel(const CovarianceModel& model,
                         std::array<double, 2> z1, std::array<double, 2> z2);

struct PairStat {
    double mean = 0.0;
    double se = 0.0;  // standard error of the mean
};

// Monte Carlo estimate of E[lambda(z1) lambda(z2)] over `n_real` independent
// realizations rooted at `seed` (member i uses sub_seed(seed, i)).
std::vector<PairStat> empirical_covariance(
    const CovarianceModel& model,
    const std::vector<std::array<std::array<double, 2>, 2>>& pairs,
    std::uint32_t n_real, std::uint64_t seed);

}  // namespace iscat
