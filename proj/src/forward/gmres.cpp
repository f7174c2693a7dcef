#include "forward/gmres.hpp"

#include <cmath>

namespace iscat {

namespace {

using cvec = std::vector<std::complex<double>>;

double norm2(const cvec& v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s);
}

std::complex<double> dot(const cvec& a, const cvec& b) {
    std::complex<double> s = 0.0;
    for (std::size_t q = 0; q < a.size(); ++q) s += std::conj(a[q]) * b[q];
    return s;
}

}  // namespace

GmresReport gmres(const ApplyFn& A, const cvec& b, cvec& x, int restart,
                  int max_iter, double rtol) {
    const std::size_t n = b.size();
    const double bnorm = norm2(b);
    GmresReport rep;
    if (bnorm == 0.0) {
        x.assign(n, 0.0);
        rep.converged = true;
        return rep;
    }
    if (x.size() != n) x.assign(n, 0.0);

    const int m = restart;
    std::vector<cvec> V(m + 1, cvec(n));
    // Hessenberg in column-major: H[j][i] = H(i, j), i <= j+1.
    std::vector<std::vector<std::complex<double>>> H(
        m, std::vector<std::complex<double>>(m + 1, 0.0));
    std::vector<std::complex<double>> cs(m), sn(m), g(m + 1);
    cvec r(n), w(n);

    int total = 0;
    while (total < max_iter) {
        A(x, r);
        ++total;
        for (std::size_t q = 0; q < n; ++q) r[q] = b[q] - r[q];
        double beta = norm2(r);
        rep.residual = beta / bnorm;
        rep.history.push_back(rep.residual);
        if (rep.residual <= rtol) {
            rep.converged = true;
            rep.iterations = total;
            return rep;
        }
        for (std::size_t q = 0; q < n; ++q) V[0][q] = r[q] / beta;
        std::fill(g.begin(), g.end(), 0.0);
        g[0] = beta;

        int j = 0;
        for (; j < m && total < max_iter; ++j) {
            A(V[j], w);
            ++total;
            // Modified Gram-Schmidt.
            for (int i = 0; i <= j; ++i) {
                const auto hij = dot(V[i], w);
                H[j][i] = hij;
                for (std::size_t q = 0; q < n; ++q) w[q] -= hij * V[i][q];
            }
            const double hj1 = norm2(w);
            H[j][j + 1] = hj1;
            if (hj1 > 0.0)
                for (std::size_t q = 0; q < n; ++q) V[j + 1][q] = w[q] / hj1;

            // Apply stored Givens rotations, then form a new one.
            for (int i = 0; i < j; ++i) {
                const auto t = cs[i] * H[j][i] + sn[i] * H[j][i + 1];
                H[j][i + 1] =
                    -std::conj(sn[i]) * H[j][i] + std::conj(cs[i]) * H[j][i + 1];
                H[j][i] = t;
            }
            const double denom =
                std::sqrt(std::norm(H[j][j]) + std::norm(H[j][j + 1]));
            if (denom == 0.0) {
                cs[j] = 1.0;
                sn[j] = 0.0;
            } else {
                cs[j] = std::conj(H[j][j]) / denom;
                sn[j] = std::conj(H[j][j + 1]) / denom;
            }
            H[j][j] = cs[j] * H[j][j] + sn[j] * H[j][j + 1];
            H[j][j + 1] = 0.0;
            g[j + 1] = -std::conj(sn[j]) * g[j];
            g[j] = cs[j] * g[j];

            rep.residual = std::abs(g[j + 1]) / bnorm;
            rep.history.push_back(rep.residual);
            if (rep.residual <= rtol || hj1 == 0.0) {
                ++j;
                break;
            }
        }

        // Back-substitute y from the triangularized system, update x.
        std::vector<std::complex<double>> y(j);
        for (int i = j - 1; i >= 0; --i) {
            std::complex<double> s = g[i];
            for (int l = i + 1; l < j; ++l) s -= H[l][i] * y[l];
            y[i] = s / H[i][i];
        }
        for (int i = 0; i < j; ++i)
            for (std::size_t q = 0; q < n; ++q) x[q] += y[i] * V[i][q];

        if (rep.residual <= rtol) {
            rep.converged = true;
            rep.iterations = total;
            return rep;
        }
    }
    rep.iterations = total;
    throw SolverError("gmres: no convergence within the iteration cap",
                      rep.history);
}

}  // namespace iscat
