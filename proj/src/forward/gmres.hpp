#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace iscat {

struct GmresReport {
    bool converged = false;
    int iterations = 0;           // total operator applications
    double residual = 0.0;        // final relative residual
    std::vector<double> history;  // relative residual per iteration
};

struct SolverError : std::runtime_error {
    explicit SolverError(const std::string& msg, std::vector<double> hist)
        : std::runtime_error(msg), history(std::move(hist)) {}
    std::vector<double> history;
};

using ApplyFn = std::function<void(const std::vector<std::complex<double>>&,
                                   std::vector<std::complex<double>>&)>;

// Restarted GMRES for complex linear systems A x = b.  `x` holds the
// initial guess on entry and the solution on exit.  Throws SolverError
// (carrying the residual history) if the relative residual has not reached
// rtol within max_iter operator applications.
GmresReport gmres(const ApplyFn& A, const std::vector<std::complex<double>>& b,
                  std::vector<std::complex<double>>& x, int restart,
                  int max_iter, double rtol);

}  // namespace iscat
