#include "sjj/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sjj/errors.hpp"

namespace sjj::linalg {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

TridiagonalEigen tridiagonal_ql(std::span<const double> diag, std::span<const double> offdiag,
                                bool want_vectors, int max_iterations) {
    const int n = static_cast<int>(diag.size());
    if (n == 0) throw DomainError("tridiagonal_ql: empty matrix");
    if (offdiag.size() + 1 != diag.size()) throw DomainError("tridiagonal_ql: offdiag length must be dim-1");

    std::vector<double> d(diag.begin(), diag.end());
    std::vector<double> e(static_cast<std::size_t>(n), 0.0);
    std::copy(offdiag.begin(), offdiag.end(), e.begin());

    TridiagonalEigen out;
    if (want_vectors) out.vectors = Matrix::identity(static_cast<std::size_t>(n));
    Matrix& z = out.vectors;

    constexpr double eps = std::numeric_limits<double>::epsilon();
    double tst1 = 0.0;
    for (int l = 0; l < n; ++l) {
        tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
        int iter = 0;
        int m = l;
        while (true) {
            for (m = l; m < n - 1; ++m)
                if (std::abs(e[m]) <= eps * tst1) break;
            if (m == l) break;
            if (iter++ == max_iterations)
                throw NumericalError("tridiagonal_ql: no convergence for eigenvalue index " + std::to_string(l) +
                                     " after " + std::to_string(max_iterations) +
                                     " sweeps (residual offdiag " + std::to_string(std::abs(e[l])) + ")");

            // Wilkinson shift from the leading 2x2 block.
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0;
            double c = 1.0;
            double p = 0.0;
            int i = m - 1;
            bool deflated = false;
            for (; i >= l; --i) {
                const double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                if (want_vectors) {
                    auto col_i = z.column(static_cast<std::size_t>(i));
                    auto col_j = z.column(static_cast<std::size_t>(i + 1));
                    for (int k = 0; k < n; ++k) {
                        const double zf = col_j[k];
                        col_j[k] = s * col_i[k] + c * zf;
                        col_i[k] = c * col_i[k] - s * zf;
                    }
                }
            }
            if (deflated) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    out.values = std::move(d);
    return out;
}

std::vector<double> twisted_eigenvector(std::span<const double> diag, std::span<const double> offdiag,
                                        double shift) {
    const std::size_t n = diag.size();
    if (n == 0 || offdiag.size() + 1 != n) throw DomainError("twisted_eigenvector: bad dimensions");
    if (n == 1) return {1.0};
    for (double b : offdiag)
        if (b == 0.0) throw DomainError("twisted_eigenvector: disconnected chain (zero offdiag)");

    constexpr double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
    auto guard = [&](double v) { return v == 0.0 ? tiny : v; };

    // Top-down: T - shift = L D+ L^T.
    std::vector<double> dplus(n), lower(n - 1);
    dplus[0] = guard(diag[0] - shift);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        lower[i] = offdiag[i] / dplus[i];
        dplus[i + 1] = guard(diag[i + 1] - shift - lower[i] * offdiag[i]);
    }
    // Bottom-up: T - shift = U D- U^T.
    std::vector<double> dminus(n), upper(n - 1);
    dminus[n - 1] = guard(diag[n - 1] - shift);
    for (std::size_t i = n - 1; i-- > 0;) {
        upper[i] = offdiag[i] / dminus[i + 1];
        dminus[i] = guard(diag[i] - shift - upper[i] * offdiag[i]);
    }
    // Twist where |gamma| is smallest.
    std::size_t twist = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
        const double gamma = dplus[k] + dminus[k] - (diag[k] - shift);
        if (std::abs(gamma) < best) {
            best = std::abs(gamma);
            twist = k;
        }
    }

    std::vector<double> v(n, 0.0);
    v[twist] = 1.0;
    for (std::size_t i = twist; i-- > 0;) v[i] = -lower[i] * v[i + 1];
    for (std::size_t i = twist; i + 1 < n; ++i) v[i + 1] = -upper[i] * v[i];

    double scale = 0.0;
    for (double x : v) scale = std::max(scale, std::abs(x));
    double norm2 = 0.0;
    for (double& x : v) {
        x /= scale;
        norm2 += x * x;
    }
    const double inv = 1.0 / std::sqrt(norm2);
    double largest = 0.0;
    for (double& x : v) {
        x *= inv;
        if (std::abs(x) > std::abs(largest)) largest = x;
    }
    if (largest < 0.0)
        for (double& x : v) x = -x;
    return v;
}

}  // namespace sjj::linalg
