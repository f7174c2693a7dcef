#pragma once

#include <functional>
#include <vector>

namespace iscat::quad {

// n-point Gauss-Legendre rule on [-1,1] (nodes ascending).
struct GaussRule {
    std::vector<double> x, w;
};
const GaussRule& gauss_legendre(int n);

// Composite Gauss-Legendre over [a,b] with `panels` equal panels of `n` nodes.
double composite_gl(const std::function<double(double)>& f, double a, double b,
                    int panels, int n = 8);

// Adaptive Simpson to absolute tolerance; used by oracle-style quadratures.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int max_depth = 24);

}  // namespace iscat::quad
