#include "forward/correlation.hpp"

#include <cmath>
#include <stdexcept>

#include "core/rng.hpp"
#include "field/synthesis.hpp"
#include "forward/born.hpp"
#include "forward/measurement.hpp"

namespace iscat {

CorrelationEstimate estimate_correlation(const CovarianceModel& model,
                                         const Point3& x, const Point3& y,
                                         double k1, double k2,
                                         int n_realizations, double p,
                                         std::uint64_t seed) {
    if (n_realizations < 2)
        throw std::invalid_argument(
            "estimate_correlation: need at least 2 realizations");
    if (!segment_clears_support(model.b.support, x, y))
        throw std::invalid_argument(
            "(A3) violated: the projected segment between the measurement "
            "points meets the support disk");

    const SynthesisPlan plan(model);
    std::complex<double> sum = 0.0;
    double sum_re2 = 0.0, sum_im2 = 0.0;
    const bool same_k = k1 == k2;
    for (int r = 0; r < n_realizations; ++r) {
        const auto f = plan.sample(rng::sub_seed(seed, r));
        const auto a = born_u1(f, x, y, k1, p);
        const auto b = same_k ? a : born_u1(f, x, y, k2, p);
        const auto s = a * std::conj(b);
        sum += s;
        sum_re2 += s.real() * s.real();
        sum_im2 += s.imag() * s.imag();
    }
    CorrelationEstimate est;
    est.n_realizations = n_realizations;
    est.mean = sum / double(n_realizations);
    const double n = n_realizations;
    const double var_re =
        std::max(0.0, sum_re2 / n - est.mean.real() * est.mean.real());
    const double var_im =
        std::max(0.0, sum_im2 / n - est.mean.imag() * est.mean.imag());
    est.std_error = std::sqrt((var_re + var_im) / (n - 1.0));
    return est;
}

}  // namespace iscat
