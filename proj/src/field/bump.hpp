#pragma once

#include <cmath>

namespace iscat {

// C-infinity ramp: 1 at t <= 0, 0 at t >= 1, strictly monotone between.
inline double smooth_ramp(double t) {
    if (t <= 0.0) return 1.0;
    if (t >= 1.0) return 0.0;
    const double f1 = std::exp(-1.0 / (1.0 - t));
    const double f0 = std::exp(-1.0 / t);
    return f1 / (f1 + f0);
}

// C-infinity radial plateau: 1 for d <= r_in, 0 for d >= r_out.
inline double smooth_plateau(double d, double r_in, double r_out) {
    return smooth_ramp((d - r_in) / (r_out - r_in));
}

}  // namespace iscat
