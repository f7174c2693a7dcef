#pragma once

#include <complex>
#include <vector>

#include "field/synthesis.hpp"
#include "forward/measurement.hpp"

namespace iscat {

enum class ForwardSolver { born, full };

// Backscattered first Born term at coincident source/receiver x, lumped
// into distance bins: nodes z of the support contribute h^2 lambda(z)/d(z)^2
// at distance d(z) = |x - z| (split between the two nearest bins), so that
//   u1(k) = (1/(4 pi^2 k^p)) sum_b w_b e^{2 i k d_b}.
// A band sweep then costs one complex rotation per bin per wavenumber
// instead of a full grid pass, with phase error O((k db)^2).
class BornBackscatter {
  public:
    BornBackscatter(const FieldRealization& lambda, const Point3& x, double p,
                    double bin_width = 5e-5);
    std::complex<double> eval(double k) const;

  private:
    double d0_ = 0.0, db_ = 5e-5, p_ = 1.5;
    std::vector<double> w_;
};

// Band measurement (1/(K-1)) int_1^K k^{2(1+eps+p)} |u_s(x;x,k)|^2 dk by
// composite Gauss-Legendre panels on unit intervals.  The Born solver uses
// the binned evaluator above; the full solver runs the integral-equation
// solve at every node (orders of magnitude slower; for cross-checks).
// Diagnostics carry the integrand samples and the running sub-band
// averages over [1, K'] at panel boundaries.
double measure(const FieldRealization& lambda, const Point3& x,
               const MeasurementConfig& config, ForwardSolver solver,
               PointDiagnostics* diag = nullptr,
               bool* short_band_warning = nullptr);

}  // namespace iscat
